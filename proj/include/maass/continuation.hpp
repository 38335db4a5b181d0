#pragma once

// Continuation of F_{k,-m} off the upper half-plane through contour
// integrals.  The Bessel factors of the Fourier coefficients are written as
// residues at s = 0 of
//
//   alpha+(s) = sum_j beta+(j) / s^{j+1},  beta+(j) = x^{2j+1-k} / (j+1-k)!
//   alpha-(s) = sum_j beta-(j) / s^{j+1},  beta-(j) = (-1)^j beta+(j)
//
// with x = 2 pi sqrt(m) / c, so that sum_j beta(j) n^j / j! =
// (1/2 pi i) \oint alpha(s) e^{ns} ds.  Summing over n under the integral
// turns the q-series into the rational kernels 1/(1 - e^s zeta q) and
// Li_{k-1}(.), which make sense for every v != 0.  The same code runs on both
// half-planes; only the contour radius depends on |v|.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "maass/arith.hpp"
#include "maass/coeffs.hpp"
#include "maass/errors.hpp"
#include "maass/forms.hpp"
#include "maass/numerics.hpp"
#include "maass/parallel.hpp"

namespace maass::continuation {

using coeffs::FormParams;
using coeffs::Truncation;
using forms::HalfPlanePoint;

enum class Sign { plus, minus };

/// Circle |s| = radius sampled at `nodes` equispaced points.  The kernels'
/// poles sit at distance >= 2 pi |v| from the origin, so radius < 2 pi |v|.
struct ContourSpec
{
    double radius = 1.0;
    int nodes = 64;

    static ContourSpec for_point(const HalfPlanePoint& tau, const Truncation& trunc)
    {
        trunc.validate();
        return ContourSpec{trunc.radius_factor * std::abs(tau.v()), trunc.contour_nodes};
    }

    void validate(double v) const
    {
        if (nodes < 1) throw domain_error("contour: need at least one node");
        if (!(radius > 0.0 && radius < numerics::two_pi * std::abs(v)))
            throw domain_error("contour radius must lie in (0, 2 pi |v|)");
    }

    Complex node(int l) const { return std::polar(radius, numerics::two_pi * (l + 0.5) / nodes); }
};

struct SeriesAlphaParams
{
    std::int64_t m = 1;
    std::int64_t c = 1;
    int k = -2;
    Sign sign = Sign::plus;
};

inline double beta(const SeriesAlphaParams& p, int j)
{
    const double x = numerics::two_pi * std::sqrt(static_cast<double>(p.m)) / static_cast<double>(p.c);
    const double mag = std::exp((2.0 * j + 1 - p.k) * std::log(x) - std::lgamma(j + 2.0 - p.k));
    return (p.sign == Sign::minus && (j % 2 == 1)) ? -mag : mag;
}

/// alpha(s) = sum_{j>=0} beta(j) / s^{j+1}, summed until the terms are
/// below 1e-17 of the partial sum and shrinking geometrically.
inline Complex alpha(const SeriesAlphaParams& p, Complex s, int max_terms = 400)
{
    if (s == Complex{}) throw domain_error("alpha: s must be nonzero");
    coeffs::require_maass(p.k, p.m);
    if (p.c < 1) throw domain_error("alpha: c must be positive");
    const double x = numerics::two_pi * std::sqrt(static_cast<double>(p.m)) / static_cast<double>(p.c);
    const double x2 = x * x;
    const double sgn = p.sign == Sign::plus ? 1.0 : -1.0;
    const Complex inv_s = 1.0 / s;
    Complex term = beta(p, 0) * inv_s;
    Complex sum = term;
    for (int j = 0; j < max_terms; ++j) {
        const Complex ratio = sgn * x2 / (j + 2.0 - p.k) * inv_s;
        term *= ratio;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) && std::abs(ratio) < 0.5) return sum;
    }
    throw consistency_error("alpha: series did not converge within " + std::to_string(max_terms) + " terms");
}

namespace detail {

/// Pole distances below this are rejected outright.
inline constexpr double pole_floor = 1e-8;

inline void check_pole_distance(double dist, double v, double radius)
{
    if (dist < pole_floor) throw pole_error("contour node within 1e-8 of a kernel pole");
    // With radius <= pi |v| the kernel stays (1 - e^{-pi|v|})/2 away from its pole.
    if (radius <= numerics::pi * std::abs(v) * (1.0 + 1e-12) && dist <= 0.5 * (1.0 - std::exp(-numerics::pi * std::abs(v))))
        throw consistency_error("pole-distance invariant violated on the contour");
}

} // namespace detail

/// Precomputed s-nodes for phi+ at fixed (k, m, c, tau): weights
/// s alpha+(s) e^s / M, so phi+ for every d is one pass over the nodes.
class PlusKernel
{
public:
    PlusKernel(int k, std::int64_t m, std::int64_t c, double v, const ContourSpec& spec, int max_terms = 400)
        : v_(v), radius_(spec.radius)
    {
        spec.validate(v);
        const SeriesAlphaParams ap{m, c, k, Sign::plus};
        for (int l = 0; l < spec.nodes; ++l) {
            const Complex s = spec.node(l);
            const Complex es = std::exp(s);
            exp_s_.push_back(es);
            weight_.push_back(s * alpha(ap, s, max_terms) * es / static_cast<double>(spec.nodes));
        }
    }

    /// (1/2 pi i) \oint alpha+(s) e^s / (1 - e^s z) ds for z = zeta_c^d q.
    /// `abs_mass`, when given, accumulates the sum of |node terms|.
    Complex integrate(Complex z, double* min_dist = nullptr, double* abs_mass = nullptr) const
    {
        numerics::CompensatedSum<Complex> acc;
        double closest = std::numeric_limits<double>::infinity();
        double mass = 0.0;
        for (std::size_t l = 0; l < weight_.size(); ++l) {
            const Complex denom = 1.0 - exp_s_[l] * z;
            const double dist = std::abs(denom);
            closest = std::min(closest, dist);
            detail::check_pole_distance(dist, v_, radius_);
            const Complex term = weight_[l] / denom;
            mass += std::abs(term);
            acc += term;
        }
        if (min_dist) *min_dist = std::min(*min_dist, closest);
        if (abs_mass) *abs_mass += mass;
        return acc.value();
    }

private:
    double v_;
    double radius_;
    std::vector<Complex> exp_s_;
    std::vector<Complex> weight_;
};

/// phi+_{k,m}(c, d; tau) = (1/2 pi i) \oint alpha+_{m,c}(s) e^s / (1 - e^s zeta_c^d q) ds.
inline Complex phi_plus(std::int64_t c, std::int64_t d, int k, std::int64_t m, const HalfPlanePoint& tau, const ContourSpec& spec,
                        int max_terms = 400)
{
    if (std::gcd(c, d) != 1) throw domain_error("phi_plus: gcd(c, d) must be 1");
    const PlusKernel kernel(k, m, c, tau.v(), spec, max_terms);
    return kernel.integrate(numerics::e2pi_rational(d, c) * tau.q_pow(1));
}

/// Outer t-rule on [1, T]: Gauss-Legendre panels with t^{-k} folded into the
/// weights.
struct TRule
{
    double cutoff = 2.0;
    std::vector<double> t;
    std::vector<double> weight;
};

/// Smallest T with e^{-4 pi |v| (T-1)} T^{-k} below 1e-17 (relative to t = 1).
inline double auto_t_cutoff(int k, double v)
{
    const double rate = 4.0 * numerics::pi * std::abs(v);
    const double target = -std::log(1e-17);
    double t = 1.0 + target / rate;
    for (int i = 0; i < 50; ++i) t = 1.0 + (target + (-k) * std::log(t)) / rate;
    return t;
}

inline TRule make_t_rule(int k, double v, const Truncation& trunc)
{
    TRule rule;
    rule.cutoff = trunc.t_cutoff ? *trunc.t_cutoff : auto_t_cutoff(k, v);
    const auto gl = numerics::gauss_legendre(trunc.t_nodes);
    const double width = (rule.cutoff - 1.0) / trunc.t_panels;
    for (int panel = 0; panel < trunc.t_panels; ++panel) {
        const double lo = 1.0 + panel * width;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double t = lo + 0.5 * width * (gl.nodes[i] + 1.0);
            rule.t.push_back(t);
            rule.weight.push_back(0.5 * width * gl.weights[i] * numerics::ipow(t, -k));
        }
    }
    return rule;
}

struct PhiMinusValue
{
    Complex value;
    double t_tail = 0.0;   ///< estimate of the omitted integral over t > T
    double abs_mass = 0.0; ///< sum of |quadrature terms|, for rounding estimates
};

/// Precomputed nodes for phi- at fixed (k, m, c, tau).
class MinusKernel
{
public:
    MinusKernel(int k, std::int64_t m, std::int64_t c, double v, const ContourSpec& spec, const TRule& rule, int max_terms = 400)
        : order_(1 - k), k_(k), v_(v), radius_(spec.radius), rule_(rule)
    {
        spec.validate(v);
        const SeriesAlphaParams ap{m, c, k, Sign::minus};
        for (int l = 0; l < spec.nodes; ++l) {
            const Complex s = spec.node(l);
            exp_s_.push_back(std::exp(s));
            weight_.push_back(s * alpha(ap, s, max_terms) / static_cast<double>(spec.nodes));
        }
        for (double t : rule_.t) decay_.push_back(std::exp(-4.0 * numerics::pi * v * t));
        decay_cutoff_ = std::exp(-4.0 * numerics::pi * v * rule_.cutoff);
    }

    /// (1/2 pi i) \int_1^T t^{-k} \oint alpha-(s) Li_{k-1}(e^{s - 4 pi v t} z) ds dt
    /// for z = zeta_c^{-d} q^{-1}.
    PhiMinusValue integrate(Complex z, double* min_dist = nullptr) const
    {
        numerics::CompensatedSum<Complex> acc;
        double mass = 0.0;
        double terms = 0.0;
        double closest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rule_.t.size(); ++i) {
            double inner_terms = 0.0;
            const Complex inner = inner_integral(decay_[i] * z, closest, &inner_terms);
            acc += rule_.weight[i] * inner;
            mass += rule_.weight[i] * std::abs(inner);
            terms += rule_.weight[i] * inner_terms;
        }
        if (min_dist) *min_dist = std::min(*min_dist, closest);

        // The integrand decays like t^{-k} e^{-4 pi |v| t}; bound the rest by
        // the value at T over the net decay rate.
        PhiMinusValue out;
        out.value = acc.value();
        out.abs_mass = terms;
        const double at_cutoff = numerics::ipow(rule_.cutoff, -k_) * std::abs(inner_integral(decay_cutoff_ * z, closest));
        const double rate = 4.0 * numerics::pi * std::abs(v_) - (-k_) / rule_.cutoff;
        out.t_tail = rate > 0.0 ? at_cutoff / rate : std::numeric_limits<double>::infinity();
        if (out.t_tail > 1e-6 * mass)
            throw truncation_error("phi_minus: t-integral tail " + std::to_string(out.t_tail) + " exceeds 1e-6 of the integral at T = " +
                                   std::to_string(rule_.cutoff));
        return out;
    }

private:
    Complex inner_integral(Complex scaled_z, double& closest, double* abs_mass = nullptr) const
    {
        numerics::CompensatedSum<Complex> acc;
        double mass = 0.0;
        for (std::size_t l = 0; l < weight_.size(); ++l) {
            const Complex w = exp_s_[l] * scaled_z;
            const double dist = std::abs(1.0 - w);
            closest = std::min(closest, dist);
            detail::check_pole_distance(dist, v_, radius_);
            const Complex term = weight_[l] * numerics::polylog_neg(order_, w);
            mass += std::abs(term);
            acc += term;
        }
        if (abs_mass) *abs_mass += mass;
        return acc.value();
    }

    int order_;
    int k_;
    double v_;
    double radius_;
    TRule rule_;
    std::vector<Complex> exp_s_;
    std::vector<Complex> weight_;
    std::vector<double> decay_;
    double decay_cutoff_ = 0.0;
};

/// phi-_{k,m}(c, d; tau) with the outer integral cut at trunc.t_cutoff (or
/// the automatic choice).
inline PhiMinusValue phi_minus(std::int64_t c, std::int64_t d, int k, std::int64_t m, const HalfPlanePoint& tau, const ContourSpec& spec,
                               const Truncation& trunc)
{
    if (std::gcd(c, d) != 1) throw domain_error("phi_minus: gcd(c, d) must be 1");
    trunc.validate();
    const MinusKernel kernel(k, m, c, tau.v(), spec, make_t_rule(k, tau.v(), trunc), trunc.series_terms);
    return kernel.integrate(numerics::e2pi_rational(-d, c) * tau.q_pow(-1));
}

/// `rounding` is eps times the absolute mass of every quadrature term; it
/// grows like e^{4 pi m / (c^2 |s|)} on the contour and dominates the error
/// for larger m or smaller |v|.
struct ContinuationValue
{
    Complex value;
    int c_max = 0;
    double t_tail = 0.0;
    double min_pole_distance = std::numeric_limits<double>::infinity();
    double rounding = 0.0;
};

namespace detail {

struct PerModulus
{
    Complex sum;
    double t_tail = 0.0;
    double min_dist = std::numeric_limits<double>::infinity();
    double abs_mass = 0.0;
};

template <class Fn>
std::vector<PerModulus> over_moduli(std::int64_t level, int c_max, unsigned threads, Fn&& per_c)
{
    std::vector<std::int64_t> moduli;
    for (std::int64_t c = level; c <= c_max; c += level) moduli.push_back(c);
    std::vector<PerModulus> parts(moduli.size());
    maass::detail::parallel_for(moduli.size(), threads, [&](std::size_t i) { parts[i] = per_c(moduli[i]); });
    return parts;
}

} // namespace detail

/// H+_{k,m}(tau) = q^{-m} + a+_{k,-m}(0)
///   + 2 pi (-1)^{k/2} m^{(1-k)/2} sum_{N|c} (1/c) sum_d^* e((-m dbar + d)/c + tau) phi+(c, d; tau).
/// The constant term is truncated at the same c_max as the double sum.
inline ContinuationValue H_plus(const FormParams& p, const HalfPlanePoint& tau, const Truncation& trunc)
{
    coeffs::require_maass(p.k, p.m);
    trunc.validate();
    const ContourSpec spec = ContourSpec::for_point(tau, trunc);
    const Complex q = tau.q_pow(1);

    auto parts = detail::over_moduli(p.level, trunc.c_max, trunc.threads, [&](std::int64_t c) {
        const PlusKernel kernel(p.k, p.m, c, tau.v(), spec, trunc.series_terms);
        const arith::KloostermanTable table(c);
        detail::PerModulus out;
        numerics::CompensatedSum<Complex> acc;
        for (std::size_t i = 0; i < table.units().size(); ++i) {
            const Complex zq = numerics::e2pi_rational(table.units()[i], c) * q;
            const Complex twist = numerics::e2pi_rational(-p.m * table.inverses()[i], c);
            double mass = 0.0;
            acc += twist * zq * kernel.integrate(zq, &out.min_dist, &mass);
            out.abs_mass += std::abs(zq) * mass;
        }
        out.sum = acc.value() / static_cast<double>(c);
        out.abs_mass /= static_cast<double>(c);
        return out;
    });

    ContinuationValue result;
    result.c_max = trunc.c_max;
    numerics::CompensatedSum<Complex> csum;
    double mass = 0.0;
    for (const auto& part : parts) {
        csum += part.sum;
        mass += part.abs_mass;
        result.min_pole_distance = std::min(result.min_pole_distance, part.min_dist);
    }
    const double pref = 2.0 * numerics::pi * coeffs::detail::sign_pow(p.k / 2) * std::pow(static_cast<double>(p.m), 0.5 * (1 - p.k));
    result.rounding = std::numeric_limits<double>::epsilon() * std::abs(pref) * mass;
    const double constant = coeffs::a_plus_zero(p.k, p.m, p.level, trunc).value;
    result.value = tau.q_pow(-p.m) + constant + pref * csum.value();
    return result;
}

/// H-_{k,m}(tau) = -Gamma*(1-k, 4 pi m v) q^{-m}
///   + 2 pi (-1)^{k/2} (4 pi v)^{1-k}/(-k)! m^{(1-k)/2} sum_{N|c} (1/c) sum_d^* e(-m dbar/c) phi-(c, d; tau).
/// (4 pi v)^{1-k} is an odd integer power, negative on the lower half-plane.
inline ContinuationValue H_minus(const FormParams& p, const HalfPlanePoint& tau, const Truncation& trunc)
{
    coeffs::require_maass(p.k, p.m);
    trunc.validate();
    const ContourSpec spec = ContourSpec::for_point(tau, trunc);
    const TRule rule = make_t_rule(p.k, tau.v(), trunc);
    const Complex q_inv = tau.q_pow(-1);

    auto parts = detail::over_moduli(p.level, trunc.c_max, trunc.threads, [&](std::int64_t c) {
        const MinusKernel kernel(p.k, p.m, c, tau.v(), spec, rule, trunc.series_terms);
        const arith::KloostermanTable table(c);
        detail::PerModulus out;
        numerics::CompensatedSum<Complex> acc;
        for (std::size_t i = 0; i < table.units().size(); ++i) {
            const Complex z = numerics::e2pi_rational(-table.units()[i], c) * q_inv;
            const Complex twist = numerics::e2pi_rational(-p.m * table.inverses()[i], c);
            const PhiMinusValue phi = kernel.integrate(z, &out.min_dist);
            acc += twist * phi.value;
            out.t_tail += phi.t_tail;
            out.abs_mass += phi.abs_mass;
        }
        out.sum = acc.value() / static_cast<double>(c);
        out.t_tail /= static_cast<double>(c);
        out.abs_mass /= static_cast<double>(c);
        return out;
    });

    ContinuationValue result;
    result.c_max = trunc.c_max;
    numerics::CompensatedSum<Complex> csum;
    double tail = 0.0;
    double mass = 0.0;
    for (const auto& part : parts) {
        csum += part.sum;
        tail += part.t_tail;
        mass += part.abs_mass;
        result.min_pole_distance = std::min(result.min_pole_distance, part.min_dist);
    }
    const double v = tau.v();
    const double pref = 2.0 * numerics::pi * coeffs::detail::sign_pow(p.k / 2) * numerics::ipow(4.0 * numerics::pi * v, 1 - p.k) /
                        numerics::factorial(-p.k) * std::pow(static_cast<double>(p.m), 0.5 * (1 - p.k));
    const double principal = numerics::gamma_star(1 - p.k, 4.0 * numerics::pi * static_cast<double>(p.m) * v);
    result.value = -principal * tau.q_pow(-p.m) + pref * csum.value();
    result.t_tail = std::abs(pref) * tail;
    result.rounding = std::numeric_limits<double>::epsilon() * std::abs(pref) * mass;
    return result;
}

/// H_{k,m} = H+ + H-, defined on both half-planes.
inline ContinuationValue H(const FormParams& p, const HalfPlanePoint& tau, const Truncation& trunc)
{
    const auto plus = H_plus(p, tau, trunc);
    const auto minus = H_minus(p, tau, trunc);
    ContinuationValue out;
    out.value = plus.value + minus.value;
    out.c_max = trunc.c_max;
    out.t_tail = minus.t_tail;
    out.min_pole_distance = std::min(plus.min_pole_distance, minus.min_pole_distance);
    out.rounding = plus.rounding + minus.rounding;
    return out;
}

} // namespace maass::continuation
