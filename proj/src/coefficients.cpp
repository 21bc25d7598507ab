#include "kac/coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "kac/special_functions.hpp"

namespace kac {

AngleVector sample_angles(std::int64_t count, RandomStream& rng) {
    AngleVector out(static_cast<std::size_t>(count));
    for (auto& a : out)
        a = rng.uniform(0.0, 2.0 * M_PI);
    return out;
}

namespace {

struct PathProduct {
    double value;
};

template <class LeafFn>
void run_coefficient_walk(const McKeanTree& tree, const AngleVector& angles, LeafFn&& onLeaf) {
    if (static_cast<std::int64_t>(angles.size()) != tree.internal_count())
        throw std::invalid_argument("coefficients: angle count must equal internal node count");
    tree.walk<PathProduct>(
        PathProduct{1.0},
        [&](std::int64_t node_id, PathProduct p) {
            const double th = angles[static_cast<std::size_t>(node_id - 1)];
            return std::pair<PathProduct, PathProduct>{PathProduct{p.value * std::cos(th)},
                                                       PathProduct{p.value * std::sin(th)}};
        },
        [&](std::int64_t leaf_id, PathProduct p) { onLeaf(leaf_id, p.value); });
}

} // namespace

CoefficientVector coefficients(const McKeanTree& tree, const AngleVector& angles) {
    CoefficientVector out;
    out.coefficients.resize(static_cast<std::size_t>(tree.leaf_count()));
    run_coefficient_walk(tree, angles, [&](std::int64_t leaf_id, double v) {
        out.coefficients[static_cast<std::size_t>(leaf_id - 1)] = v;
        out.max_abs = std::max(out.max_abs, std::fabs(v));
    });
    return out;
}

double coefficient_max(const McKeanTree& tree, const AngleVector& angles) {
    double m = 0.0;
    run_coefficient_walk(tree, angles,
                         [&](std::int64_t, double v) { m = std::max(m, std::fabs(v)); });
    return m;
}

double alpha_p(double p) {
    if (!(p > 0.0))
        throw std::domain_error("alpha_p: requires p > 0");
    // 4/(2pi) * int_0^{pi/2} cos(t)^p dt; panels [pi/2(1-2^-k), pi/2(1-2^-k-1)]
    static const QuadratureRule rule = gauss_legendre(16);
    const double end = 0.5 * M_PI;
    double acc = 0.0;
    double left = 0.0;
    for (int level = 0; level < 64; ++level) {
        const double right = end * (1.0 - std::ldexp(1.0, -(level + 1)));
        const double piece = gauss_legendre_integrate(
            [p](double t) { return std::pow(std::cos(t), p); }, left, right, rule);
        acc += piece;
        left = right;
        if (level >= 31 && piece < 1e-17 * (acc + 1e-300))
            break;
    }
    // remaining sliver [left, pi/2]: integrand <= cos(left)^p
    return acc * 4.0 / (2.0 * M_PI);
}

double alpha_p_closed_form(double p) {
    if (!(p > 0.0))
        throw std::domain_error("alpha_p_closed_form: requires p > 0");
    return std::exp(log_gamma(0.5 * (p + 1.0)) - log_gamma(0.5 * p + 1.0)) / std::sqrt(M_PI);
}

double max_coefficient_tail_bound(double x, double p, double t) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("max_coefficient_tail_bound: requires x in (0,1)");
    if (!(p > 2.0))
        throw std::domain_error("max_coefficient_tail_bound: requires p > 2 (exponent vanishes at p = 2)");
    if (t < 0.0)
        throw std::domain_error("max_coefficient_tail_bound: requires t >= 0");
    return std::pow(x, -p) * std::exp(-t * (1.0 - 2.0 * alpha_p(p)));
}

} // namespace kac
