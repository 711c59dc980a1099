#include "lambshift/radiative.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lambshift;

namespace {

constexpr double kAlpha = 1.0 / 137.0359895;

const RadiativeModel& model() {
    static const RadiativeModel m(kAlpha, 1.0);
    return m;
}

}  // namespace

TEST_CASE("regularized integral I") {
    CHECK(reg_integral_I(1.0, 0.0) == 0.0);
    CHECK(reg_integral_I(std::numbers::e, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(reg_integral_I(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(reg_integral_I(-1.0, 0.0), std::domain_error);

    // dI/dxi = -1/xi recovered by central differences
    for (double xi : {0.5, 1.0, 2.0, 10.0}) {
        auto I = [](double x) { return reg_integral_I(x, 0.7); };
        double d = testing::central_first_derivative(I, xi, xi * 1e-5);
        CHECK(std::abs(d - (-1.0 / xi)) < 1e-4 / xi);
    }
    double d2 = testing::central_first_derivative(
        [](double x) { return reg_integral_I(x, 0.0); }, 2.0, 2e-5);
    CHECK(d2 == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("regularized integral J") {
    CHECK(reg_integral_J(1.0, 0.0, 0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(reg_integral_J(0.0, 0.0, 0.0, 0.0), std::domain_error);

    // linearity in the reintegration constants
    for (double xi : {0.3, 1.0, 4.0}) {
        double diff = reg_integral_J(xi, 1.0, 0.0, 0.0) -
                      reg_integral_J(xi, 0.0, 0.0, 0.0);
        CHECK(diff == doctest::Approx(xi * xi).epsilon(1e-13));
    }

    // d^3J/dxi^3 = -2/xi
    for (double xi : {0.5, 1.0, 2.0, 10.0}) {
        auto J = [](double x) { return reg_integral_J(x, 0.2, -0.4, 1.3); };
        double d3 = testing::central_third_derivative(J, xi, xi * 1e-3);
        CHECK(std::abs(d3 - (-2.0 / xi)) < 1e-4 * (2.0 / xi));
    }
    double d3 = testing::central_third_derivative(
        [](double x) { return reg_integral_J(x, 0.0, 0.0, 0.0); }, 1.0, 1e-3);
    CHECK(d3 == doctest::Approx(-2.0).epsilon(1e-4));
}

TEST_CASE("beta coefficient") {
    CHECK(beta_coefficient(0.0) == 0.0);
    CHECK(beta_coefficient(kAlpha) ==
          doctest::Approx(0.0135846).epsilon(1e-4));
    CHECK(std::abs(beta_coefficient(kAlpha) - 0.0135846) < 1e-6);
    CHECK(beta_coefficient(2.0 * kAlpha) ==
          doctest::Approx(2.0 * beta_coefficient(kAlpha)).epsilon(1e-15));
}

TEST_CASE("constant fixing") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();
    CHECK(m.mu_bare() == doctest::Approx(1.0 + m.beta()).epsilon(1e-15));
    CHECK(m.b1_1() == 0.0);
    CHECK(m.c1() == doctest::Approx(std::log(2.0 * mu)).epsilon(1e-15));
    CHECK(m.c2() == doctest::Approx(std::log(mu)).epsilon(1e-15));
    // only the combination 2C3/mu + C4/mu^2 is observable; it must equal 4 ln 2
    CHECK(m.c3_c4_constraint() ==
          doctest::Approx(4.0 * std::numbers::ln2).epsilon(1e-14));
    CHECK(2.0 * m.c3() / mu + m.c4() / (mu * mu) ==
          doctest::Approx(m.c3_c4_constraint()).epsilon(1e-14));
    // b1^(2) = beta/(2 mu)
    CHECK(m.b1_2() == doctest::Approx(m.beta() / (2.0 * mu)).epsilon(1e-14));

    double pi_mu3_over_alpha = std::numbers::pi * mu * mu * mu / kAlpha;
    CHECK(m.b2_1() * pi_mu3_over_alpha ==
          doctest::Approx(-2.0 / 15.0).epsilon(1e-13));
    CHECK(m.b2_2() * pi_mu3_over_alpha ==
          doctest::Approx(-1.0 / 15.0).epsilon(1e-13));
    CHECK(m.b2_sum() * pi_mu3_over_alpha ==
          doctest::Approx(-0.2).epsilon(1e-13));
}

TEST_CASE("renormalized b2 coefficient") {
    auto ren = b2_renormalized(kAlpha, 1.0);
    CHECK(std::abs(ren.kappa - 1.942816878) < 5e-5 * 1.942816878);
    CHECK(ren.kappa ==
          doctest::Approx(testing::kappa_extended_precision_oracle(kAlpha))
              .epsilon(1e-12));
    CHECK(model().kappa() == ren.kappa);
    CHECK(model().b2_renorm() ==
          doctest::Approx(model().b2_sum() +
                          (3.0 * model().beta() +
                           3.0 * model().beta() * model().beta() +
                           std::pow(model().beta(), 3)) /
                              (8.0 * std::pow(model().mu_bare(), 3)))
              .epsilon(1e-13));

    // with the renormalization shift removed (beta -> 0) the dimensionless
    // coefficient falls back to the bare -1/5
    double beta = beta_coefficient(kAlpha);
    double one_plus = (1.0 + beta) * (1.0 + beta) * (1.0 + beta);
    double shift_part = (3.0 * beta + 3.0 * beta * beta + beta * beta * beta) *
                        std::numbers::pi / (8.0 * kAlpha);
    CHECK(ren.kappa * one_plus - shift_part ==
          doctest::Approx(-0.2).epsilon(1e-10));

    CHECK_THROWS_AS(b2_renormalized(-1.0, 1.0), std::domain_error);
}

TEST_CASE("delta_e1 closed form") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();
    double pref = kAlpha * mu / std::numbers::pi;

    CHECK(m.delta_e1(0.0) == 0.0);

    // small-p limit: delta_e1/p^4 -> b2^(1)
    double p = 1e-3 * mu;
    CHECK(m.delta_e1(p) / (p * p * p * p) ==
          doctest::Approx(m.b2_1()).epsilon(1e-4));

    // value at the mass point
    double at_mu = pref * ((4.0 / 3.0) * std::numbers::ln2 - 10.0 / 9.0);
    CHECK(m.delta_e1(mu) == doctest::Approx(at_mu).epsilon(1e-12));

    // continuity across p = mu: the two-sided average converges to the limit
    double eps = 1e-6 * mu;
    double avg = 0.5 * (m.delta_e1(mu - eps) + m.delta_e1(mu + eps));
    CHECK(std::abs(avg - at_mu) < 1e-8 * std::abs(at_mu));

    CHECK_THROWS_AS(m.delta_e1(-1.0), std::invalid_argument);
}

TEST_CASE("delta_e2 closed form") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();
    double pref = kAlpha * mu / std::numbers::pi;

    CHECK(m.delta_e2(0.0) == 0.0);

    // small-p quadratic coefficient is b1^(2) = beta/(2 mu)
    double p = 1e-4 * mu;
    CHECK(m.delta_e2(p) / (p * p) ==
          doctest::Approx(m.b1_2()).epsilon(1e-6));

    double at_mu = pref * ((20.0 / 3.0) * std::numbers::ln2 - 16.0 / 9.0);
    CHECK(m.delta_e2(mu) == doctest::Approx(at_mu).epsilon(1e-12));

    double eps = 1e-6 * mu;
    double avg = 0.5 * (m.delta_e2(mu - eps) + m.delta_e2(mu + eps));
    CHECK(std::abs(avg - at_mu) < 1e-8 * std::abs(at_mu));
}

TEST_CASE("eta-integration oracle reproduces the closed forms") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();
    for (double p : {0.1 * mu, 0.5 * mu, 2.0 * mu}) {
        double oracle1 = testing::delta_e1_eta_oracle(p, m);
        CHECK(std::abs(oracle1 - m.delta_e1(p)) <=
              1e-8 * std::abs(m.delta_e1(p)));
        double oracle2 = testing::delta_e2_eta_oracle(p, m);
        CHECK(std::abs(oracle2 - m.delta_e2(p)) <=
              1e-8 * std::abs(m.delta_e2(p)));
    }
}

TEST_CASE("series and closed paths agree at the switch point") {
    const RadiativeModel& m = model();
    double p_switch = m.series_switch_momentum();
    // straddle the switch by a relative nudge too small to matter physically
    double below = p_switch * (1.0 - 1e-9);
    double above = p_switch * (1.0 + 1e-9);
    CHECK(m.delta_e1(below) ==
          doctest::Approx(m.delta_e1(above)).epsilon(1e-6));
    CHECK(m.delta_e2(below) ==
          doctest::Approx(m.delta_e2(above)).epsilon(1e-6));
    CHECK(m.delta_e_rad(below) ==
          doctest::Approx(m.delta_e_rad(above)).epsilon(1e-6));
}

TEST_CASE("renormalized radiative shift") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();

    CHECK(m.delta_e_rad(0.0) == 0.0);

    // small-p: delta_e_rad -> b2R p^4
    double p = 1e-2 * mu;
    double ratio = m.delta_e_rad(p) / (m.b2_renorm() * p * p * p * p);
    CHECK(std::abs(ratio - 1.0) < 1e-3);

    // the mass brackets supply exactly the b2R - b2 difference at order p^4
    double p_small = 3e-3 * mu;
    double p4 = p_small * p_small * p_small * p_small;
    CHECK(m.delta_e_rad(p_small) / p4 ==
          doctest::Approx(m.b2_renorm()).epsilon(2e-5));
}

TEST_CASE("bracket variants differ by the higher kinetic-expansion terms") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();
    double p = 0.1 * mu;
    double diff = m.delta_e_rad(p, MassBracket::background_p4) -
                  m.delta_e_rad(p, MassBracket::exact_sqrt);
    // delta_3/(8 mu^3) p^4 - [T(mu) - T(mu_obs)] = delta_5 p^6/(16 mu^5) + ...
    double d5 = std::expm1(5.0 * std::log1p(m.beta()));
    double expected = d5 * std::pow(p, 6) / (16.0 * std::pow(mu, 5));
    CHECK(diff == doctest::Approx(expected).epsilon(0.02));

    // at large p the square-root variant grows only like p^2 while the
    // background subtraction keeps the full p^4 term
    double big = 50.0 * mu;
    CHECK(m.delta_e_rad(big, MassBracket::background_p4) >
          10.0 * std::abs(m.delta_e_rad(big, MassBracket::exact_sqrt)));
}

TEST_CASE("high-momentum growth is bounded by p^2 log p") {
    const RadiativeModel& m = model();
    double mu = m.mu_bare();
    double x = 1e3;
    double p = x * mu;
    double pref = kAlpha * mu / std::numbers::pi;
    double sum = m.delta_e1(p) + m.delta_e2(p);
    double bound_scale = pref * x * x * std::log(x);
    CHECK(std::abs(sum) / bound_scale < 3.0);
}
