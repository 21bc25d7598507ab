#pragma once

// Leaf coefficients pi_j of a McKean tree: the product of cos(theta_k) for
// every left step and sin(theta_k) for every right step on the path from
// leaf j up to the root, theta_k being the angle attached to the internal
// node where the step starts. They satisfy sum_j pi_j^2 = 1 identically.

#include <cstdint>
#include <vector>

#include "kac/mckean_tree.hpp"
#include "kac/rng.hpp"

namespace kac {

using AngleVector = std::vector<double>; // n-1 angles in [0, 2pi)

AngleVector sample_angles(std::int64_t count, RandomStream& rng);

struct CoefficientVector {
    std::vector<double> coefficients; // pi_1..pi_n, leaf order
    double max_abs = 0.0;             // pi-max, drives the convergence rate
};

// One top-down pass carrying the running path product. angles.size() must
// equal tree.internal_count(); angle k belongs to pre-order node k+1.
// A single leaf has coefficient 1 by convention.
CoefficientVector coefficients(const McKeanTree& tree, const AngleVector& angles);

// max_j |pi_j| without materializing the coefficient vector.
double coefficient_max(const McKeanTree& tree, const AngleVector& angles);

// Angular moment alpha_p = (1/2pi) int_0^{2pi} |cos t|^p dt. Evaluated by
// composite Gauss-Legendre quadrature on panels that shrink dyadically
// toward pi/2, where |cos|^p loses smoothness; 32 levels x 16 nodes by
// default, extended until the tail panel is negligible. alpha_p_closed_form
// is the independent route Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2+1)); the two
// agree to 1e-10 over the tested range.
double alpha_p(double p);
double alpha_p_closed_form(double p);

// Tail bound for the maximal coefficient under the full (nu_t, tree, angle)
// law: P{ pi-max > x } <= x^(-p) exp(-t (1 - 2 alpha_p)). Requires p > 2,
// where the exponent is positive (alpha_2 = 1/2 makes p = 2 vacuous).
double max_coefficient_tail_bound(double x, double p, double t);

} // namespace kac
