#pragma once

// Point evaluation of Fourier expansions: the Maass-Poincare series on the
// upper half-plane, holomorphic and non-holomorphic Eichler integrals, the
// lower-half-plane Eichler combination, and a slow coset-sum oracle.

#include <cmath>
#include <cstdint>
#include <string>

#include "maass/arith.hpp"
#include "maass/coeffs.hpp"
#include "maass/errors.hpp"
#include "maass/numerics.hpp"

namespace maass::forms {

enum class Plane { upper, lower };

inline const char* to_string(Plane p) { return p == Plane::upper ? "upper" : "lower"; }

/// tau = u + i v away from the real line; the plane is the sign of v.
class HalfPlanePoint
{
public:
    static constexpr double min_abs_v = 1e-3;

    HalfPlanePoint(double u, double v) : u_(u), v_(v)
    {
        if (!std::isfinite(u) || !std::isfinite(v)) throw domain_error("half-plane point must be finite");
        if (std::abs(v) < min_abs_v)
            throw domain_error("|Im tau| = " + std::to_string(std::abs(v)) + " is below the 1e-3 guard");
    }
    explicit HalfPlanePoint(Complex tau) : HalfPlanePoint(tau.real(), tau.imag()) {}

    double u() const { return u_; }
    double v() const { return v_; }
    Complex tau() const { return {u_, v_}; }
    Plane plane() const { return v_ > 0.0 ? Plane::upper : Plane::lower; }
    /// -tau, which lies in the opposite half-plane.
    HalfPlanePoint negated() const { return HalfPlanePoint(-u_, -v_); }
    /// q^n = e(n tau).
    Complex q_pow(std::int64_t n) const
    {
        const double nd = static_cast<double>(n);
        return std::exp(-numerics::two_pi * nd * v_) * numerics::e2pi(nd * u_);
    }

private:
    double u_;
    double v_;
};

/// A truncated point value.  `terms_used` counts Fourier indices summed;
/// `cap_hit` is set when the expansion ran out before the last term fell
/// below 1e-12 of the running sum.
struct Evaluation
{
    Complex value;
    int terms_used = 0;
    bool cap_hit = false;
    double tail_estimate = 0.0;
};

inline void require_plane(const HalfPlanePoint& tau, Plane want, const char* who)
{
    if (tau.plane() != want)
        throw plane_error(std::string(who) + ": expects the " + to_string(want) + " half-plane, got " + to_string(tau.plane()));
}

namespace detail {

/// Stops once two consecutive indices contribute < 1e-12 of the running sum.
class StopRule
{
public:
    bool small_enough(double term_abs, double sum_abs)
    {
        quiet_ = (term_abs <= 1e-12 * sum_abs) ? quiet_ + 1 : 0;
        return quiet_ >= 2;
    }

private:
    int quiet_ = 0;
};

inline std::int64_t max_index(const coeffs::FourierExpansion& exp)
{
    std::int64_t top = 0;
    if (!exp.holo.empty()) top = std::max(top, exp.holo.rbegin()->first);
    if (!exp.nonholo.empty()) top = std::max(top, exp.nonholo.rbegin()->first);
    return top;
}

inline double tail_at(const std::map<std::int64_t, double>& tails, std::int64_t n)
{
    auto it = tails.find(n);
    return it == tails.end() ? 0.0 : it->second;
}

} // namespace detail

/// F(tau) = sum_{n<0} c(n) (1 - Gamma*(1-k, 4 pi |n| v)) q^n + sum_{n>=0} c+(n) q^n
///        + sum_{n>=1} c-(n) Gamma*(1-k, 4 pi n v) q^{-n}.
/// tail_estimate sums the coefficient c-tail bounds weighted by the q-factors.
inline Evaluation eval_maass(const coeffs::FourierExpansion& exp, const HalfPlanePoint& tau)
{
    require_plane(tau, Plane::upper, "eval_maass");
    const int s = 1 - exp.weight;
    const double v = tau.v();
    numerics::CompensatedSum<Complex> acc;
    for (const auto& [n, c] : exp.principal) {
        const double seed = numerics::gamma_lower_star(s, 4.0 * numerics::pi * std::abs(static_cast<double>(n)) * v);
        acc += c * seed * tau.q_pow(n);
    }
    Evaluation out;
    if (auto it = exp.holo.find(0); it != exp.holo.end()) {
        acc += it->second;
        out.tail_estimate += detail::tail_at(exp.holo_tail, 0);
    }
    const std::int64_t top = detail::max_index(exp);
    detail::StopRule stop;
    bool converged = top == 0;
    for (std::int64_t n = 1; n <= top; ++n) {
        Complex term = 0.0;
        double tail = 0.0;
        const double qn = std::exp(-numerics::two_pi * static_cast<double>(n) * v);
        if (auto it = exp.holo.find(n); it != exp.holo.end()) {
            term += it->second * tau.q_pow(n);
            tail += detail::tail_at(exp.holo_tail, n) * qn;
        }
        if (auto it = exp.nonholo.find(n); it != exp.nonholo.end()) {
            const double g = numerics::gamma_star(s, 4.0 * numerics::pi * static_cast<double>(n) * v);
            term += it->second * g * tau.q_pow(-n);
            tail += detail::tail_at(exp.nonholo_tail, n) * g / qn;
        }
        acc += term;
        out.tail_estimate += tail;
        out.terms_used = static_cast<int>(n);
        if (stop.small_enough(std::abs(term), std::abs(acc.value()))) {
            converged = true;
            break;
        }
    }
    out.value = acc.value();
    out.cap_hit = !converged;
    return out;
}

/// Holomorphic Eichler integral sum_{n != 0} c(n) n^{1-kappa} q^n over the
/// principal and holomorphic coefficients of a weight-kappa expansion.
inline Evaluation eichler(const coeffs::FourierExpansion& exp, const HalfPlanePoint& tau)
{
    require_plane(tau, Plane::upper, "eichler");
    if (std::abs(exp.constant_term()) > 1e-12) throw domain_error("eichler: expansion has a nonzero constant term");
    const int power = 1 - exp.weight;
    numerics::CompensatedSum<Complex> acc;
    for (const auto& [n, c] : exp.principal) acc += c * numerics::ipow(static_cast<double>(n), power) * tau.q_pow(n);

    Evaluation out;
    detail::StopRule stop;
    bool converged = exp.holo.empty();
    for (const auto& [n, c] : exp.holo) {
        if (n == 0) continue;
        const double w = numerics::ipow(static_cast<double>(n), power);
        const Complex term = c * w * tau.q_pow(n);
        acc += term;
        out.tail_estimate += detail::tail_at(exp.holo_tail, n) * std::abs(w) * std::exp(-numerics::two_pi * n * tau.v());
        out.terms_used = static_cast<int>(n);
        if (stop.small_enough(std::abs(term), std::abs(acc.value()))) {
            converged = true;
            break;
        }
    }
    out.value = acc.value();
    out.cap_hit = !converged;
    return out;
}

/// f*(tau) = -(4 pi)^{1-kappa} sum_{n != 0} conj(c(n)) n^{1-kappa}
///           Gamma(kappa-1, 4 pi n v) q^{-n}.
/// Coefficients must be real; negative indices use Gamma at negative argument.
inline Evaluation nonhol_eichler(const coeffs::FourierExpansion& exp, const HalfPlanePoint& tau)
{
    require_plane(tau, Plane::upper, "nonhol_eichler");
    if (std::abs(exp.constant_term()) > 1e-12) throw domain_error("nonhol_eichler: expansion has a nonzero constant term");
    const int kappa = exp.weight;
    const double v = tau.v();
    const double front = -numerics::ipow(4.0 * numerics::pi, 1 - kappa);

    auto term_at = [&](std::int64_t n, Complex c) {
        if (std::abs(c.imag()) > 1e-9) throw consistency_error("nonhol_eichler: coefficient at n=" + std::to_string(n) + " is not real");
        const double nd = static_cast<double>(n);
        return front * c.real() * numerics::ipow(nd, 1 - kappa) *
               numerics::incomplete_gamma(kappa - 1, 4.0 * numerics::pi * nd * v) * tau.q_pow(-n);
    };

    numerics::CompensatedSum<Complex> acc;
    for (const auto& [n, c] : exp.principal) acc += term_at(n, c);
    Evaluation out;
    detail::StopRule stop;
    bool converged = exp.holo.empty();
    for (const auto& [n, c] : exp.holo) {
        if (n == 0) continue;
        const Complex term = term_at(n, c);
        acc += term;
        const double nd = static_cast<double>(n);
        out.tail_estimate += std::abs(front) * detail::tail_at(exp.holo_tail, n) * numerics::ipow(nd, 1 - kappa) *
                             numerics::incomplete_gamma(kappa - 1, 4.0 * numerics::pi * nd * v) *
                             std::exp(numerics::two_pi * nd * v);
        out.terms_used = static_cast<int>(n);
        if (stop.small_enough(std::abs(term), std::abs(acc.value()))) {
            converged = true;
            break;
        }
    }
    out.value = acc.value();
    out.cap_hit = !converged;
    return out;
}

/// The lower-half-plane side of the continuation identity for F_{k,-m}:
/// m^{1-k} (E_{P_{2-k,m}}(-tau) - (4 pi)^{1-k}/(-k)! P*_{2-k,-m}(-tau)),
/// with both weight 2-k expansions built once.
class LowerPlaneRhs
{
public:
    struct Parts
    {
        Evaluation eichler;  ///< m^{1-k} E_{P_{2-k,m}}(-tau)
        Evaluation star;     ///< -m^{1-k} (4 pi)^{1-k}/(-k)! P*_{2-k,-m}(-tau)
        Complex total() const { return eichler.value + star.value; }
    };

    LowerPlaneRhs(const coeffs::FormParams& p, const coeffs::Truncation& trunc) : params_(p)
    {
        coeffs::require_maass(p.k, p.m);
        const int kappa = 2 - p.k;
        cusp_ = coeffs::holo_expansion(kappa, p.m, p.level, trunc);
        weak_ = coeffs::holo_expansion(kappa, -p.m, p.level, trunc);
    }

    Parts parts(const HalfPlanePoint& tau) const
    {
        require_plane(tau, Plane::lower, "lower_plane_rhs");
        const int k = params_.k;
        const double mk = numerics::ipow(static_cast<double>(params_.m), 1 - k);
        const HalfPlanePoint flipped = tau.negated();
        Parts out;
        out.eichler = eichler(cusp_, flipped);
        out.eichler.value *= mk;
        out.eichler.tail_estimate *= mk;
        const double c = mk * numerics::ipow(4.0 * numerics::pi, 1 - k) / numerics::factorial(-k);
        out.star = nonhol_eichler(weak_, flipped);
        out.star.value *= -c;
        out.star.tail_estimate *= c;
        return out;
    }

    Evaluation operator()(const HalfPlanePoint& tau) const
    {
        const Parts p = parts(tau);
        Evaluation out;
        out.value = p.total();
        out.terms_used = std::max(p.eichler.terms_used, p.star.terms_used);
        out.cap_hit = p.eichler.cap_hit || p.star.cap_hit;
        out.tail_estimate = p.eichler.tail_estimate + p.star.tail_estimate;
        return out;
    }

    const coeffs::FourierExpansion& cusp_expansion() const { return cusp_; }
    const coeffs::FourierExpansion& weak_expansion() const { return weak_; }

private:
    coeffs::FormParams params_;
    coeffs::FourierExpansion cusp_;
    coeffs::FourierExpansion weak_;
};

/// One-shot form of LowerPlaneRhs; `n_max` overrides trunc.n_max.
inline Evaluation lower_plane_rhs(const coeffs::FormParams& p, const HalfPlanePoint& tau, int n_max, coeffs::Truncation trunc)
{
    require_plane(tau, Plane::lower, "lower_plane_rhs");
    trunc.n_max = n_max;
    return LowerPlaneRhs(p, trunc)(tau);
}

/// Seed (1 - Gamma*(1-k, 4 pi m v)) q^{-m} of F_{k,-m}.
inline Complex maass_seed(int k, std::int64_t m, Complex tau)
{
    const double v = tau.imag();
    const double md = static_cast<double>(m);
    const double factor = numerics::gamma_lower_star(1 - k, 4.0 * numerics::pi * md * v);
    return factor * std::exp(numerics::two_pi * md * v) * numerics::e2pi(-md * tau.real());
}

/// Partial coset sum of the seed of F_{k,-m}: identity plus every
/// representative from coset_reps(N, c_max) and its translates d -> d + l c
/// with |d| up to `d_window`.  Slow; meant as an independent oracle.
inline Evaluation eval_direct_cosets(const coeffs::FormParams& p, const HalfPlanePoint& tau, int c_max, std::int64_t d_window = 4000)
{
    require_plane(tau, Plane::upper, "eval_direct_cosets");
    coeffs::require_maass(p.k, p.m);
    const Complex z = tau.tau();
    numerics::CompensatedSum<Complex> acc;
    acc += maass_seed(p.k, p.m, z);
    for (const auto& rep : arith::coset_reps(p.level, c_max)) {
        if (rep.c == 0) continue;
        const std::int64_t reach = d_window / rep.c + 1;
        for (std::int64_t l = -reach; l <= reach; ++l) {
            const std::int64_t b = rep.b + rep.a * l;
            const std::int64_t d = rep.d + rep.c * l;
            const Complex denom = static_cast<double>(rep.c) * z + static_cast<double>(d);
            const Complex image = (static_cast<double>(rep.a) * z + static_cast<double>(b)) / denom;
            acc += numerics::ipow(denom, -p.k) * maass_seed(p.k, p.m, image);
        }
    }
    Evaluation out;
    out.value = acc.value();
    out.terms_used = c_max;
    // Replacing the omitted (c, d) sums by integrals of the small-Im seed
    // majorant (4 pi m v)^{1-k}/(1-k)! |c tau + d|^{k-2}.
    const int s = 1 - p.k;
    const double v = tau.v();
    const double seed_scale = std::pow(4.0 * numerics::pi * static_cast<double>(p.m) * v, s) / numerics::factorial(s);
    const double line = std::pow(v, p.k - 1) * std::sqrt(numerics::pi) * std::tgamma(0.5 * s) / std::tgamma(0.5 * (2 - p.k));
    const double c_tail = seed_scale * line * std::pow(c_max + 1.0, p.k) / (-p.k);
    const double d_tail = seed_scale * 2.0 * std::pow(static_cast<double>(d_window), p.k - 1) / s * c_max;
    out.tail_estimate = c_tail + d_tail;
    return out;
}

} // namespace maass::forms
