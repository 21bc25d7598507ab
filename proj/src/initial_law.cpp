#include "kac/initial_law.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "kac/special_functions.hpp"

namespace kac {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool InitialLaw::finite_energy() const { return std::isfinite(second_moment()); }

double InitialLaw::sigma() const {
    const double m2 = second_moment();
    if (!std::isfinite(m2))
        throw std::domain_error("InitialLaw::sigma: infinite energy for law " + name());
    return std::sqrt(m2);
}

namespace {

// ---------------------------------------------------------------- atoms ---

// Shared machinery for purely atomic laws: CDF pair and exact asymmetry.
class AtomicLaw : public InitialLaw {
public:
    AtomicLaw(std::vector<double> atoms, std::vector<double> probs)
        : atoms_(std::move(atoms)), probs_(std::move(probs)) {
        std::vector<std::size_t> idx(atoms_.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return atoms_[a] < atoms_[b]; });
        std::vector<double> a2, p2;
        for (auto i : idx) {
            if (!a2.empty() && atoms_[i] == a2.back()) {
                p2.back() += probs_[i];
            } else {
                a2.push_back(atoms_[i]);
                p2.push_back(probs_[i]);
            }
        }
        atoms_ = std::move(a2);
        probs_ = std::move(p2);
        cum_.resize(probs_.size());
        double c = 0.0;
        for (std::size_t i = 0; i < probs_.size(); ++i)
            cum_[i] = (c += probs_[i]);
    }

    double cdf(double x) const override {
        // mass of atoms <= x
        auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x);
        return it == atoms_.begin() ? 0.0 : cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
    }

    double dual_cdf(double x) const override {
        // mass of atoms >= -x
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), -x);
        const double below = it == atoms_.begin()
                                 ? 0.0
                                 : cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
        return cum_.back() - below;
    }

    double asymmetry() const override {
        // both CDFs are flat between jump points, so the sup lives on the
        // set {+-atom}, checked at the point and just before it
        double sup = 0.0;
        std::vector<double> cand;
        for (double a : atoms_) {
            cand.push_back(a);
            cand.push_back(-a);
        }
        for (double c : cand) {
            sup = std::max(sup, std::fabs(cdf(c) - dual_cdf(c)));
            const double eps = 1e-9 * (1.0 + std::fabs(c));
            sup = std::max(sup, std::fabs(cdf(c - eps) - dual_cdf(c - eps)));
        }
        return sup;
    }

    double tail_energy(double r) const override {
        double e = 0.0;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (std::fabs(atoms_[i]) > r)
                e += probs_[i] * atoms_[i] * atoms_[i];
        return e;
    }

    std::optional<double> mean() const override {
        double m = 0.0;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            m += probs_[i] * atoms_[i];
        return m;
    }

    double second_moment() const override { return tail_energy(-1.0); }

    std::optional<double> abs_moment(double q) const override {
        double m = 0.0;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            m += probs_[i] * std::pow(std::fabs(atoms_[i]), q);
        return m;
    }

    bool has_char_fn() const override { return true; }

    std::complex<double> char_fn(double xi) const override {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            acc += probs_[i] * std::complex<double>{std::cos(xi * atoms_[i]), std::sin(xi * atoms_[i])};
        return acc;
    }

protected:
    std::vector<double> atoms_, probs_, cum_;
};

class RademacherLaw final : public AtomicLaw {
public:
    explicit RademacherLaw(double v) : AtomicLaw({-v, v}, {0.5, 0.5}), v_(v) {
        if (!(v > 0.0))
            throw std::invalid_argument("rademacher: requires v > 0");
    }
    std::string name() const override { return "rademacher:" + format(v_); }
    double sample(RandomStream& rng) const override { return rng.coin() ? v_ : -v_; }
    bool symmetric() const override { return true; }
    double asymmetry() const override { return 0.0; }
    std::complex<double> char_fn(double xi) const override { return {std::cos(v_ * xi), 0.0}; }

    static std::string format(double x) {
        std::ostringstream os;
        os << x;
        return os.str();
    }

private:
    double v_;
};

class TwoPointLaw final : public AtomicLaw {
public:
    TwoPointLaw(double x1, double x2, double p1)
        : AtomicLaw({x1, x2}, {p1, 1.0 - p1}), x1_(x1), x2_(x2), p1_(p1) {
        if (!(p1 > 0.0 && p1 < 1.0))
            throw std::invalid_argument("twopoint: requires p1 in (0,1)");
        if (x1 == x2)
            throw std::invalid_argument("twopoint: degenerate (equal atoms)");
    }
    std::string name() const override {
        std::ostringstream os;
        os << "twopoint:" << x1_ << "," << x2_ << "," << p1_;
        return os.str();
    }
    double sample(RandomStream& rng) const override { return rng.uniform01() < p1_ ? x1_ : x2_; }
    bool symmetric() const override { return x1_ == -x2_ && p1_ == 0.5; }

private:
    double x1_, x2_, p1_;
};

class EmpiricalLaw final : public AtomicLaw {
public:
    EmpiricalLaw(std::vector<double> values, std::string label)
        : AtomicLaw(values, std::vector<double>(values.size(), 1.0 / static_cast<double>(values.size()))),
          values_(std::move(values)),
          label_(std::move(label)) {
        if (values_.empty())
            throw std::invalid_argument("empirical: no values");
    }
    std::string name() const override { return "empirical:" + label_; }
    double sample(RandomStream& rng) const override {
        auto i = static_cast<std::size_t>(rng.uniform01() * static_cast<double>(values_.size()));
        if (i >= values_.size())
            i = values_.size() - 1;
        return values_[i];
    }
    bool symmetric() const override { return false; }

private:
    std::vector<double> values_;
    std::string label_;
};

// ------------------------------------------------------------- densities ---

class GaussianLaw final : public InitialLaw {
public:
    explicit GaussianLaw(double sigma) : s_(sigma) {
        if (!(sigma > 0.0))
            throw std::invalid_argument("gaussian: requires sigma > 0");
    }
    std::string name() const override { return "gaussian:" + RademacherLaw::format(s_); }
    double sample(RandomStream& rng) const override { return s_ * rng.gaussian(); }
    std::optional<double> mean() const override { return 0.0; }
    double second_moment() const override { return s_ * s_; }
    std::optional<double> abs_moment(double q) const override {
        // E|X|^q = sigma^q 2^(q/2) Gamma((q+1)/2) / sqrt(pi)
        return std::pow(s_, q) * std::exp(0.5 * q * std::log(2.0) + log_gamma(0.5 * (q + 1.0))) /
               std::sqrt(M_PI);
    }
    double tail_energy(double r) const override {
        if (r <= 0.0)
            return s_ * s_;
        // int_{|u|>r} u^2 g_sigma = sigma^2 [2 z phi(z) + 2 (1 - Phi(z))], z = r/sigma
        const double z = r / s_;
        return s_ * s_ * (2.0 * z * normal_pdf(z) + 2.0 * (1.0 - normal_cdf(z)));
    }
    double cdf(double x) const override { return normal_cdf(x / s_); }
    double dual_cdf(double x) const override { return 1.0 - normal_cdf(-x / s_); }
    bool symmetric() const override { return true; }
    double asymmetry() const override { return 0.0; }
    bool has_char_fn() const override { return true; }
    std::complex<double> char_fn(double xi) const override {
        return {std::exp(-0.5 * s_ * s_ * xi * xi), 0.0};
    }

private:
    double s_;
};

class UniformLaw final : public InitialLaw {
public:
    explicit UniformLaw(double a) : a_(a) {
        if (!(a > 0.0))
            throw std::invalid_argument("uniform: requires a > 0");
    }
    std::string name() const override { return "uniform:" + RademacherLaw::format(a_); }
    double sample(RandomStream& rng) const override { return a_ * (2.0 * rng.uniform01() - 1.0); }
    std::optional<double> mean() const override { return 0.0; }
    double second_moment() const override { return a_ * a_ / 3.0; }
    std::optional<double> abs_moment(double q) const override {
        return std::pow(a_, q) / (q + 1.0);
    }
    double tail_energy(double r) const override {
        if (r <= 0.0)
            return second_moment();
        if (r >= a_)
            return 0.0;
        return (a_ * a_ * a_ - r * r * r) / (3.0 * a_);
    }
    double cdf(double x) const override {
        return std::clamp((x + a_) / (2.0 * a_), 0.0, 1.0);
    }
    double dual_cdf(double x) const override { return cdf(x); } // symmetric, continuous
    bool symmetric() const override { return true; }
    double asymmetry() const override { return 0.0; }
    bool has_char_fn() const override { return true; }
    std::complex<double> char_fn(double xi) const override {
        if (xi == 0.0)
            return {1.0, 0.0};
        return {std::sin(a_ * xi) / (a_ * xi), 0.0};
    }

private:
    double a_;
};

class LaplaceLaw final : public InitialLaw {
public:
    explicit LaplaceLaw(double b) : b_(b) {
        if (!(b > 0.0))
            throw std::invalid_argument("laplace: requires b > 0");
    }
    std::string name() const override { return "laplace:" + RademacherLaw::format(b_); }
    double sample(RandomStream& rng) const override { return rng.laplace(b_); }
    std::optional<double> mean() const override { return 0.0; }
    double second_moment() const override { return 2.0 * b_ * b_; }
    std::optional<double> abs_moment(double q) const override {
        return std::pow(b_, q) * std::exp(log_gamma(q + 1.0));
    }
    double tail_energy(double r) const override {
        if (r <= 0.0)
            return second_moment();
        // (1/b) int_r^inf u^2 e^(-u/b) du = e^(-r/b) (r^2 + 2rb + 2b^2)
        return std::exp(-r / b_) * (r * r + 2.0 * r * b_ + 2.0 * b_ * b_);
    }
    double cdf(double x) const override {
        return x < 0.0 ? 0.5 * std::exp(x / b_) : 1.0 - 0.5 * std::exp(-x / b_);
    }
    double dual_cdf(double x) const override { return cdf(x); }
    bool symmetric() const override { return true; }
    double asymmetry() const override { return 0.0; }
    bool has_char_fn() const override { return true; }
    std::complex<double> char_fn(double xi) const override {
        return {1.0 / (1.0 + b_ * b_ * xi * xi), 0.0};
    }

private:
    double b_;
};

class StudentTLaw final : public InitialLaw {
public:
    explicit StudentTLaw(double nu) : nu_(nu) {
        if (!(nu > 0.0))
            throw std::invalid_argument("student: requires nu > 0");
    }
    std::string name() const override { return "student:" + RademacherLaw::format(nu_); }
    double sample(RandomStream& rng) const override { return rng.student_t(nu_); }
    std::optional<double> mean() const override {
        if (nu_ <= 1.0)
            return std::nullopt;
        return 0.0;
    }
    double second_moment() const override { return nu_ > 2.0 ? nu_ / (nu_ - 2.0) : kInf; }
    std::optional<double> abs_moment(double q) const override {
        if (q >= nu_)
            return std::nullopt;
        // E|T|^q = nu^(q/2) Gamma((q+1)/2) Gamma((nu-q)/2) / (sqrt(pi) Gamma(nu/2))
        return std::exp(0.5 * q * std::log(nu_) + log_gamma(0.5 * (q + 1.0)) +
                        log_gamma(0.5 * (nu_ - q)) - log_gamma(0.5 * nu_)) /
               std::sqrt(M_PI);
    }
    double density(double x) const {
        return std::exp(log_gamma(0.5 * (nu_ + 1.0)) - log_gamma(0.5 * nu_) -
                        0.5 * std::log(nu_ * M_PI) -
                        0.5 * (nu_ + 1.0) * std::log1p(x * x / nu_));
    }
    double tail_energy(double r) const override {
        if (nu_ <= 2.0)
            return kInf;
        if (r <= 0.0)
            return second_moment();
        // m2 minus the central part, integrated numerically (smooth integrand)
        static const QuadratureRule rule = gauss_legendre(64);
        double central = 0.0;
        const int panels = 16;
        for (int i = 0; i < panels; ++i) {
            const double a = r * i / panels, b = r * (i + 1) / panels;
            central += gauss_legendre_integrate(
                [this](double u) { return u * u * density(u); }, a, b, rule);
        }
        return std::max(0.0, second_moment() - 2.0 * central);
    }
    double cdf(double x) const override {
        if (x == 0.0)
            return 0.5;
        const double ib = incomplete_beta(nu_ / (nu_ + x * x), 0.5 * nu_, 0.5);
        return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
    }
    double dual_cdf(double x) const override { return cdf(x); }
    bool symmetric() const override { return true; }
    double asymmetry() const override { return 0.0; }
    bool has_char_fn() const override { return false; }
    std::complex<double> char_fn(double) const override {
        throw std::logic_error("student: characteristic function not provided");
    }

private:
    double nu_;
};

class CauchyLaw final : public InitialLaw {
public:
    explicit CauchyLaw(double s) : s_(s) {
        if (!(s > 0.0))
            throw std::invalid_argument("cauchy: requires scale > 0");
    }
    std::string name() const override { return "cauchy:" + RademacherLaw::format(s_); }
    double sample(RandomStream& rng) const override { return rng.cauchy(s_); }
    std::optional<double> mean() const override { return std::nullopt; }
    double second_moment() const override { return kInf; }
    std::optional<double> abs_moment(double q) const override {
        if (q >= 1.0)
            return std::nullopt;
        return std::pow(s_, q) / std::cos(0.5 * M_PI * q);
    }
    double tail_energy(double) const override { return kInf; }
    double cdf(double x) const override { return 0.5 + std::atan(x / s_) / M_PI; }
    double dual_cdf(double x) const override { return cdf(x); }
    bool symmetric() const override { return true; }
    double asymmetry() const override { return 0.0; }
    bool has_char_fn() const override { return true; }
    std::complex<double> char_fn(double xi) const override {
        return {std::exp(-s_ * std::fabs(xi)), 0.0};
    }

private:
    double s_;
};

} // namespace

std::unique_ptr<InitialLaw> make_gaussian(double sigma) {
    return std::make_unique<GaussianLaw>(sigma);
}
std::unique_ptr<InitialLaw> make_rademacher(double v) {
    return std::make_unique<RademacherLaw>(v);
}
std::unique_ptr<InitialLaw> make_uniform(double a) { return std::make_unique<UniformLaw>(a); }
std::unique_ptr<InitialLaw> make_two_point(double x1, double x2, double p1) {
    return std::make_unique<TwoPointLaw>(x1, x2, p1);
}
std::unique_ptr<InitialLaw> make_laplace(double b) { return std::make_unique<LaplaceLaw>(b); }
std::unique_ptr<InitialLaw> make_student_t(double nu) {
    return std::make_unique<StudentTLaw>(nu);
}
std::unique_ptr<InitialLaw> make_cauchy(double scale) {
    return std::make_unique<CauchyLaw>(scale);
}
std::unique_ptr<InitialLaw> make_empirical(std::vector<double> values, std::string label) {
    return std::make_unique<EmpiricalLaw>(std::move(values), std::move(label));
}

std::unique_ptr<InitialLaw> make_empirical_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("empirical: cannot open " + path);
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line == "value")
            continue;
        values.push_back(std::stod(line));
    }
    return make_empirical(std::move(values), path);
}

std::unique_ptr<InitialLaw> make_initial_law(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto parse_doubles = [&](std::size_t expected) {
        std::vector<double> out;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ','))
            out.push_back(std::stod(tok));
        if (out.size() != expected)
            throw std::invalid_argument("law '" + spec + "': expected " +
                                        std::to_string(expected) + " parameter(s)");
        return out;
    };
    try {
        if (kind == "gaussian")
            return make_gaussian(args.empty() ? 1.0 : parse_doubles(1)[0]);
        if (kind == "rademacher")
            return make_rademacher(args.empty() ? 1.0 : parse_doubles(1)[0]);
        if (kind == "uniform")
            return make_uniform(args.empty() ? 1.0 : parse_doubles(1)[0]);
        if (kind == "twopoint") {
            auto v = parse_doubles(3);
            return make_two_point(v[0], v[1], v[2]);
        }
        if (kind == "laplace")
            return make_laplace(args.empty() ? 1.0 : parse_doubles(1)[0]);
        if (kind == "student")
            return make_student_t(parse_doubles(1)[0]);
        if (kind == "cauchy")
            return make_cauchy(args.empty() ? 1.0 : parse_doubles(1)[0]);
        if (kind == "empirical")
            return make_empirical_from_file(args);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument("law '" + spec + "': " + e.what());
    }
    throw std::invalid_argument("unknown law '" + spec + "'");
}

} // namespace kac
