#pragma once

// Initial velocity distributions. A law bundles everything downstream code
// needs: a sampler, moments (possibly infinite), the tail energy
// r -> int_{|u|>r} u^2 dmu, the distribution function F0 and its reflected
// companion F0d(x) = mu([-x, +inf)), and, where available, the
// characteristic function. Infinite-variance laws are first-class citizens:
// they drive the necessity experiments.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kac/rng.hpp"

namespace kac {

class InitialLaw {
public:
    virtual ~InitialLaw() = default;

    virtual std::string name() const = 0;
    virtual double sample(RandomStream& rng) const = 0;

    // nullopt when the mean does not exist (Cauchy)
    virtual std::optional<double> mean() const = 0;
    // +infinity when the energy is infinite
    virtual double second_moment() const = 0;
    // E|X|^q; nullopt when infinite
    virtual std::optional<double> abs_moment(double q) const = 0;

    virtual double tail_energy(double r) const = 0;
    virtual double cdf(double x) const = 0;      // F0(x) = mu((-inf, x])
    virtual double dual_cdf(double x) const = 0; // F0d(x) = mu([-x, +inf))

    virtual bool symmetric() const = 0;
    // sup_x |F0(x) - F0d(x)|, exactly 0 for symmetric laws
    virtual double asymmetry() const = 0;

    virtual bool has_char_fn() const = 0;
    virtual std::complex<double> char_fn(double xi) const = 0;

    bool finite_energy() const;
    double sigma() const; // sqrt(second moment); throws for infinite energy
};

std::unique_ptr<InitialLaw> make_gaussian(double sigma);
std::unique_ptr<InitialLaw> make_rademacher(double v);
std::unique_ptr<InitialLaw> make_uniform(double a);
std::unique_ptr<InitialLaw> make_two_point(double x1, double x2, double p1);
std::unique_ptr<InitialLaw> make_laplace(double b);
std::unique_ptr<InitialLaw> make_student_t(double nu);
std::unique_ptr<InitialLaw> make_cauchy(double scale);
std::unique_ptr<InitialLaw> make_empirical(std::vector<double> values, std::string label);
std::unique_ptr<InitialLaw> make_empirical_from_file(const std::string& path);

// Parse "name:params", e.g. "rademacher:1", "gaussian:1", "uniform:2",
// "twopoint:0,2,0.5", "laplace:1", "student:5", "cauchy:1",
// "empirical:path/to/values.csv". Throws std::invalid_argument with the
// offending spec on failure.
std::unique_ptr<InitialLaw> make_initial_law(const std::string& spec);

} // namespace kac
