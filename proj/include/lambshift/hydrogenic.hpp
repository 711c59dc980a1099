/*
 * Momentum-space hydrogenic bound states for (n,l) in {(1,0),(2,0),(2,1)}
 * and expectation values of radial functions of |p|.
 */
#pragma once

#include "lambshift/quadrature.hpp"

#include <functional>

namespace lambshift {

struct StateLabel {
    int n = 1;
    int l = 0;

    bool operator==(const StateLabel&) const = default;
};

/// True for the supported set (1,0), (2,0), (2,1).
bool is_supported(StateLabel state);

/// Radial momentum probability density w(p), normalized so that
/// the integral of w over [0, inf) is 1. a is the Bohr radius in the same
/// (inverse) units as p.
double momentum_density(StateLabel state, double bohr_radius, double p);

/// Density of one state bound together with its scale.
struct MomentumDensity {
    StateLabel state;
    double bohr_radius = 1.0;
    double operator()(double p) const {
        return momentum_density(state, bohr_radius, p);
    }
};

/// <p^2> = 1/(n a)^2.
double p2_expectation(StateLabel state, double bohr_radius);

/// <p^4> = [8n/(2l+1) - 3] / (n^4 a^4).
double p4_expectation(StateLabel state, double bohr_radius);

/// <f(p)> over the state's momentum density, via adaptive quadrature.
/// config.split_points declares interior points of reduced smoothness of f.
QuadratureResult expectation(StateLabel state, double bohr_radius,
                             const std::function<double(double)>& f,
                             QuadratureConfig config);

}  // namespace lambshift
