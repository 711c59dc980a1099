/*
 * Adaptive quadrature over finite intervals and [0, inf), with declared
 * split points where the integrand loses smoothness and a compactifying
 * transform for the infinite tail.
 */
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace lambshift {

using Integrand = std::function<double(double)>;

struct QuadratureConfig {
    double relative_tolerance = 1e-10;
    double absolute_floor = 0.0;
    int max_subdivisions = 4000;
    // Momenta where the integrand is only piecewise smooth; strictly
    // positive and sorted ascending.
    std::vector<double> split_points;
    enum class TailMap {
        rational,  // u = p/(p+s), s = cutoff scale
        inverse    // q = 1/p
    };
    TailMap mapping = TailMap::rational;
    // Cutoff between the directly integrated region and the mapped tail:
    // p_max = max(p_max_factor * largest split point, p_max_floor).
    double p_max_factor = 10.0;
    double p_max_floor = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    double tail_bound = 0.0;  // reported whenever a tail cutoff is used
    bool converged = true;
};

/// Thrown when the requested tolerance is not met within the subdivision
/// budget; carries the best estimate reached.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, QuadratureResult best)
        : std::runtime_error(what), best_(best) {}
    const QuadratureResult& best() const { return best_; }

  private:
    QuadratureResult best_;
};

/// Fixed-order Gauss-Legendre rule on [a, b]; exact for polynomials of
/// degree 2*order - 1. Building block of the adaptive scheme.
double integrate_legendre_segment(const Integrand& f, double a, double b,
                                  int order);

/// Adaptive integration of f over [a, b], pre-split at the interior points
/// given (points outside (a, b) are ignored).
QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const std::vector<double>& interior_splits,
                                    double relative_tolerance = 1e-10,
                                    double absolute_floor = 0.0,
                                    int max_subdivisions = 4000);

/// Adaptive integration of f over [0, inf). The region [0, p_max] is
/// integrated directly (split at config.split_points); the remainder is
/// mapped to a finite interval through the configured transform and
/// integrated as well, so no truncation error is silently dropped.
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& config);

}  // namespace lambshift
