#include "lambshift/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace lambshift {

namespace {

struct GaussRule {
    std::vector<double> nodes;  // on [-1, 1]
    std::vector<double> weights;
};

// Legendre polynomial value and derivative at x.
std::pair<double, double> legendre_pd(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double d = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, d};
}

GaussRule build_gauss_rule(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int k = 0; k < order; ++k) {
        // Standard initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (k + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, d] = legendre_pd(order, x);
            double dx = p / d;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        auto [p, d] = legendre_pd(order, x);
        (void)p;
        rule.nodes[k] = x;
        rule.weights[k] = 2.0 / ((1.0 - x * x) * d * d);
    }
    return rule;
}

double apply_rule(const GaussRule& rule, const Integrand& f, double a,
                  double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return sum * half;
}

const GaussRule& embedded_rule(int order) {
    static const GaussRule g7 = build_gauss_rule(7);
    static const GaussRule g15 = build_gauss_rule(15);
    return order == 7 ? g7 : g15;
}

struct Segment {
    double a, b;
    double value;
    double error;
};

Segment evaluate_segment(const Integrand& f, double a, double b) {
    double coarse = apply_rule(embedded_rule(7), f, a, b);
    double fine = apply_rule(embedded_rule(15), f, a, b);
    Segment s{a, b, fine, std::abs(fine - coarse)};
    if (!std::isfinite(fine) || !std::isfinite(coarse)) {
        s.value = 0.0;
        s.error = std::numeric_limits<double>::infinity();
    }
    return s;
}

// Max-heap on error with a positional tie-break so refinement order is
// deterministic.
struct SegmentLess {
    bool operator()(const Segment& x, const Segment& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a;
    }
};

std::pair<double, double> assemble(std::vector<Segment> segs) {
    std::sort(segs.begin(), segs.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    double value = 0.0, error = 0.0;
    for (const auto& s : segs) {
        value += s.value;
        error += s.error;
    }
    return {value, error};
}

QuadratureResult adapt(const Integrand& f, std::vector<Segment> heap,
                       double rel_tol, double abs_floor, int max_subdivisions) {
    std::make_heap(heap.begin(), heap.end(), SegmentLess{});
    int used = static_cast<int>(heap.size());

    while (true) {
        auto [value, error] = assemble(heap);
        double target = std::max(rel_tol * std::abs(value), abs_floor);
        if (error <= target) {
            QuadratureResult r;
            r.value = value;
            r.error_estimate = error;
            r.subdivisions_used = used;
            return r;
        }

        QuadratureResult best;
        best.value = value;
        best.error_estimate = error;
        best.subdivisions_used = used;
        best.converged = false;
        if (used >= max_subdivisions)
            throw QuadratureError(
                "quadrature did not converge within the subdivision budget",
                best);

        std::pop_heap(heap.begin(), heap.end(), SegmentLess{});
        Segment worst = heap.back();
        heap.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            throw QuadratureError(
                "quadrature stalled on an unresolvable feature", best);
        heap.push_back(evaluate_segment(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end(), SegmentLess{});
        heap.push_back(evaluate_segment(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end(), SegmentLess{});
        ++used;
    }
}

}  // namespace

double integrate_legendre_segment(const Integrand& f, double a, double b,
                                  int order) {
    if (!(a < b))
        throw std::invalid_argument(
            "integrate_legendre_segment: a < b required");
    if (order < 2)
        throw std::invalid_argument(
            "integrate_legendre_segment: order >= 2 required");
    if (order == 7 || order == 15)
        return apply_rule(embedded_rule(order), f, a, b);
    GaussRule rule = build_gauss_rule(order);
    return apply_rule(rule, f, a, b);
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b,
                                    const std::vector<double>& interior_splits,
                                    double relative_tolerance,
                                    double absolute_floor,
                                    int max_subdivisions) {
    if (!(a < b)) throw std::invalid_argument("integrate_interval: a < b required");
    if (!(relative_tolerance > 0.0))
        throw std::invalid_argument(
            "integrate_interval: tolerance must be positive");

    std::vector<double> edges{a};
    for (double s : interior_splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::vector<Segment> initial;
    for (size_t k = 0; k + 1 < edges.size(); ++k)
        initial.push_back(evaluate_segment(f, edges[k], edges[k + 1]));

    return adapt(f, std::move(initial), relative_tolerance, absolute_floor,
                 max_subdivisions);
}

QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& config) {
    if (!(config.relative_tolerance > 0.0))
        throw std::invalid_argument(
            "integrate_semi_infinite: tolerance must be positive");
    for (size_t k = 0; k < config.split_points.size(); ++k) {
        double s = config.split_points[k];
        if (!(s > 0.0))
            throw std::invalid_argument(
                "integrate_semi_infinite: split points must be positive");
        if (k > 0 && !(s > config.split_points[k - 1]))
            throw std::invalid_argument(
                "integrate_semi_infinite: split points must be sorted");
    }

    double largest_split =
        config.split_points.empty() ? 0.0 : config.split_points.back();
    double p_max =
        std::max(config.p_max_factor * largest_split, config.p_max_floor);
    if (!(p_max > 0.0)) p_max = 1.0;
    if (p_max <= largest_split) p_max = 2.0 * largest_split;

    QuadratureResult finite = integrate_interval(
        f, 0.0, p_max, config.split_points, 0.5 * config.relative_tolerance,
        0.5 * config.absolute_floor, config.max_subdivisions);

    // Mapped tail: quadrature nodes are interior, so the image of p = inf is
    // never evaluated; the integrand just has to decay.
    Integrand tail_integrand;
    double u_lo = 0.0, u_hi = 0.0;
    if (config.mapping == QuadratureConfig::TailMap::rational) {
        double s = p_max;
        tail_integrand = [&f, s](double u) {
            double om = 1.0 - u;
            return f(s * u / om) * s / (om * om);
        };
        u_lo = p_max / (p_max + s);  // = 0.5
        u_hi = 1.0;
    } else {
        tail_integrand = [&f](double q) { return f(1.0 / q) / (q * q); };
        u_lo = 0.0;
        u_hi = 1.0 / p_max;
    }

    // The tail only needs resolving relative to the full integral.
    double tail_floor =
        std::max(0.5 * config.absolute_floor,
                 0.5 * config.relative_tolerance * std::abs(finite.value));
    int budget = config.max_subdivisions - finite.subdivisions_used;
    QuadratureResult tail =
        integrate_interval(tail_integrand, u_lo, u_hi, {},
                           0.5 * config.relative_tolerance, tail_floor,
                           std::max(budget, 32));

    QuadratureResult out;
    out.value = finite.value + tail.value;
    out.error_estimate = finite.error_estimate + tail.error_estimate;
    out.subdivisions_used = finite.subdivisions_used + tail.subdivisions_used;
    out.tail_bound = std::abs(tail.value) + 10.0 * tail.error_estimate +
                     std::numeric_limits<double>::min();
    return out;
}

}  // namespace lambshift
