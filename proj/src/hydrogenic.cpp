#include "lambshift/hydrogenic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lambshift {

namespace {

void require_supported(StateLabel state) {
    if (!is_supported(state))
        throw std::invalid_argument("hydrogenic: unsupported state (n,l)");
}

}  // namespace

bool is_supported(StateLabel state) {
    return (state.n == 1 && state.l == 0) || (state.n == 2 && state.l == 0) ||
           (state.n == 2 && state.l == 1);
}

double momentum_density(StateLabel state, double bohr_radius, double p) {
    require_supported(state);
    if (!(bohr_radius > 0.0))
        throw std::invalid_argument("momentum_density: bohr radius must be positive");
    if (p < 0.0)
        throw std::invalid_argument("momentum_density: p must be nonnegative");

    const double pi = std::numbers::pi;
    double a = bohr_radius;
    if (state.n == 1) {
        double d = 1.0 + a * a * p * p;
        return (32.0 / pi) * a * a * a * p * p / (d * d * d * d);
    }
    double t2 = 4.0 * a * a * p * p;  // (2 a p)^2, the n = 2 scale
    double d = 1.0 + t2;
    double d6 = d * d * d * d * d * d;
    if (state.l == 0) {
        double node = t2 - 1.0;  // zero of the 2S wavefunction at a p = 1/2
        return (1024.0 / pi) * a * a * a * p * p * node * node / d6;
    }
    double a5 = a * a * a * a * a;
    return (16384.0 / (3.0 * pi)) * a5 * p * p * p * p / d6;
}

double p2_expectation(StateLabel state, double bohr_radius) {
    require_supported(state);
    if (!(bohr_radius > 0.0))
        throw std::invalid_argument("p2_expectation: bohr radius must be positive");
    double na = state.n * bohr_radius;
    return 1.0 / (na * na);
}

double p4_expectation(StateLabel state, double bohr_radius) {
    require_supported(state);
    if (!(bohr_radius > 0.0))
        throw std::invalid_argument("p4_expectation: bohr radius must be positive");
    double coeff = 8.0 * state.n / (2.0 * state.l + 1.0) - 3.0;
    double na = state.n * bohr_radius;
    return coeff / (na * na * na * na);
}

QuadratureResult expectation(StateLabel state, double bohr_radius,
                             const std::function<double(double)>& f,
                             QuadratureConfig config) {
    require_supported(state);
    // Make sure the direct region covers the density's own support even when
    // the split points sit elsewhere.
    config.p_max_floor = std::max(config.p_max_floor, 1e3 / bohr_radius);
    MomentumDensity density{state, bohr_radius};
    return integrate_semi_infinite(
        [&](double p) { return density(p) * f(p); }, config);
}

}  // namespace lambshift
