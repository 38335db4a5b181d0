#pragma once

// Numerical checks of the identities satisfied by the Poincare series and
// their continuation, each producing a VerificationReport with residuals.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maass/arith.hpp"
#include "maass/coeffs.hpp"
#include "maass/continuation.hpp"
#include "maass/forms.hpp"
#include "maass/numerics.hpp"

namespace maass::verify {

using coeffs::FormParams;
using coeffs::Truncation;
using forms::HalfPlanePoint;

struct Residual
{
    std::string label;
    Complex point;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0; ///< abs_err / (1 + |rhs|) unless the check says otherwise
};

struct VerificationReport
{
    std::string check_name;
    FormParams params;
    Truncation trunc;
    std::optional<Truncation> reference_trunc;
    std::vector<Residual> residuals;
    bool passed = false;
    double tolerance = 0.0;
    std::int64_t runtime_ms = 0;
    std::vector<std::string> notes;

    void add(std::string label, Complex point, Complex lhs, Complex rhs)
    {
        Residual r{std::move(label), point, lhs, rhs, std::abs(lhs - rhs), 0.0};
        r.rel_err = r.abs_err / (1.0 + std::abs(rhs));
        residuals.push_back(std::move(r));
    }

    double max_rel_err() const
    {
        double worst = 0.0;
        for (const auto& r : residuals) worst = std::max(worst, r.rel_err);
        return worst;
    }
};

namespace detail {

class Stopwatch
{
public:
    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerificationReport finish(VerificationReport report, const Stopwatch& clock)
{
    report.passed = std::all_of(report.residuals.begin(), report.residuals.end(),
                                [&](const Residual& r) { return r.rel_err <= report.tolerance; });
    report.runtime_ms = clock.elapsed_ms();
    return report;
}

inline VerificationReport start(std::string name, const FormParams& p, const Truncation& trunc, double tol)
{
    VerificationReport r;
    r.check_name = std::move(name);
    r.params = p;
    r.trunc = trunc;
    r.tolerance = tol;
    return r;
}

} // namespace detail

/// Reference truncation for the Fourier-expansion side of the continuation
/// checks.
inline Truncation reference_truncation()
{
    Truncation t;
    t.c_max = 300;
    t.n_max = 40;
    return t;
}

/// H_{k,m}(tau) against F_{k,-m}(tau) from its Fourier expansion, tau in H.
inline VerificationReport check_continuation_upper(const FormParams& p, const std::vector<HalfPlanePoint>& points, const Truncation& h_trunc,
                                               const Truncation& ref_trunc, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("continuation-upper", p, h_trunc, tol);
    report.reference_trunc = ref_trunc;
    const auto expansion = coeffs::maass_expansion(p, ref_trunc);
    for (const auto& tau : points) {
        forms::require_plane(tau, forms::Plane::upper, "check_continuation_upper");
        const auto lhs = continuation::H(p, tau, h_trunc);
        const auto rhs = forms::eval_maass(expansion, tau);
        report.add("H vs F", tau.tau(), lhs.value, rhs.value);
        if (rhs.cap_hit) report.notes.push_back("expansion cap hit at tau=" + std::to_string(tau.u()) + "+" + std::to_string(tau.v()) + "i");
    }
    return detail::finish(std::move(report), clock);
}

inline VerificationReport check_continuation_upper(const FormParams& p, const std::vector<HalfPlanePoint>& points, const Truncation& trunc,
                                               double tol)
{
    return check_continuation_upper(p, points, trunc, trunc, tol);
}

/// H_{k,m}(tau) against m^{1-k}(E_{P_{2-k,m}}(-tau) - (4pi)^{1-k}/(-k)! P*_{2-k,-m}(-tau)), tau in -H.
inline VerificationReport check_continuation_lower(const FormParams& p, const std::vector<HalfPlanePoint>& points, const Truncation& h_trunc,
                                               const Truncation& ref_trunc, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("continuation-lower", p, h_trunc, tol);
    report.reference_trunc = ref_trunc;
    const forms::LowerPlaneRhs rhs(p, ref_trunc);
    for (const auto& tau : points) {
        forms::require_plane(tau, forms::Plane::lower, "check_continuation_lower");
        const auto lhs = continuation::H(p, tau, h_trunc);
        const auto value = rhs(tau);
        report.add("H vs Eichler combination", tau.tau(), lhs.value, value.value);
        if (value.cap_hit) report.notes.push_back("expansion cap hit at tau=" + std::to_string(tau.u()) + std::to_string(tau.v()) + "i");
    }
    return detail::finish(std::move(report), clock);
}

inline VerificationReport check_continuation_lower(const FormParams& p, const std::vector<HalfPlanePoint>& points, const Truncation& trunc,
                                               double tol)
{
    return check_continuation_lower(p, points, trunc, trunc, tol);
}

/// F(gamma tau) against (c tau + d)^k F(tau); rel_err is scaled by
/// 1 + |F(tau)|.
inline VerificationReport check_modularity(const FormParams& p, const arith::CosetRep& gamma, const std::vector<HalfPlanePoint>& points,
                                           const Truncation& trunc, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("modularity", p, trunc, tol);
    if (gamma.a * gamma.d - gamma.b * gamma.c != 1) throw domain_error("check_modularity: matrix must have determinant 1");
    if (gamma.c % p.level != 0) throw domain_error("check_modularity: matrix is not in Gamma_0(N)");
    const auto expansion = coeffs::maass_expansion(p, trunc);
    for (const auto& tau : points) {
        const Complex z = tau.tau();
        const Complex denom = static_cast<double>(gamma.c) * z + static_cast<double>(gamma.d);
        const HalfPlanePoint image((static_cast<double>(gamma.a) * z + static_cast<double>(gamma.b)) / denom);
        const auto lhs = forms::eval_maass(expansion, image);
        const auto base = forms::eval_maass(expansion, tau);
        const Complex rhs = numerics::ipow(denom, p.k) * base.value;
        const double abs_err = std::abs(lhs.value - rhs);
        report.residuals.push_back(
            Residual{"F(gamma tau) vs (c tau+d)^k F(tau)", z, lhs.value, rhs, abs_err, abs_err / (1.0 + std::abs(base.value))});
    }
    report.notes.push_back("gamma=(" + std::to_string(gamma.a) + " " + std::to_string(gamma.b) + "; " + std::to_string(gamma.c) + " " +
                           std::to_string(gamma.d) + ")");
    return detail::finish(std::move(report), clock);
}

/// D^{1-k} F_{k,-m} = (-m)^{1-k} P_{2-k,-m} on coefficients:
/// n^{1-k} a+_{k,-m}(n) against (-m)^{1-k} b_{2-k,-m}(n), plus the principal
/// coefficient (-m)^{1-k} * 1 on both sides.
inline VerificationReport check_bol_identity(const FormParams& p, std::int64_t n_lo, std::int64_t n_hi, const Truncation& trunc, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("bol", p, trunc, tol);
    const double mk = numerics::ipow(-static_cast<double>(p.m), 1 - p.k);
    report.add("principal coefficient", Complex(static_cast<double>(-p.m), 0.0), mk * 1.0, mk * 1.0);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const double lhs = numerics::ipow(static_cast<double>(n), 1 - p.k) *
                           coeffs::a_coeff(p.k, p.m, coeffs::Part::plus, n, p.level, trunc).value;
        const double rhs = mk * coeffs::b_coeff(2 - p.k, -p.m, n, p.level, trunc).value;
        report.add("n=" + std::to_string(n), Complex(static_cast<double>(n), 0.0), lhs, rhs);
    }
    return detail::finish(std::move(report), clock);
}

/// xi_k F_{k,-m} = (4 pi m)^{1-k}/(-k)! P_{2-k,m} on coefficients.
///
/// Per-term action, from xi_k = 2 i v^k conj(d/d tau-bar):
///   xi_k( Gamma(1-k, 4 pi n v) q^{-n} ) = -(4 pi n)^{1-k} q^n,
/// so the principal term -Gamma*(1-k, 4 pi m v) q^{-m} maps to
/// +(4 pi m)^{1-k}/(-k)! q^m and a-(n) Gamma*(1-k, 4 pi n v) q^{-n} maps to
/// -(4 pi n)^{1-k}/(-k)! a-(n) q^n.  Dividing by (4 pi m)^{1-k}/(-k)! the
/// identity reads delta_{m,n} - (n/m)^{1-k} a-_{k,-m}(n) = b_{2-k,m}(n).
inline VerificationReport check_xi_identity(const FormParams& p, std::int64_t n_lo, std::int64_t n_hi, const Truncation& trunc, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("xi", p, trunc, tol);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const double delta = n == p.m ? 1.0 : 0.0;
        const double ratio = numerics::ipow(static_cast<double>(n) / static_cast<double>(p.m), 1 - p.k);
        const double lhs = delta - ratio * coeffs::a_coeff(p.k, p.m, coeffs::Part::minus, n, p.level, trunc).value;
        const double rhs = coeffs::b_coeff(2 - p.k, p.m, n, p.level, trunc).value;
        report.add("n=" + std::to_string(n), Complex(static_cast<double>(n), 0.0), lhs, rhs);
    }
    return detail::finish(std::move(report), clock);
}

struct LaplacianValue
{
    Complex residual; ///< finite-difference Delta_k f
    Complex value;    ///< f(tau)
};

/// Delta_k f = -v^2 (f_uu + f_vv) + i k v (f_u + i f_v) with the five-point
/// central stencil of spacing h.
inline LaplacianValue laplacian_residual(const std::function<Complex(Complex)>& f, int k, Complex tau, double h)
{
    const Complex du(h, 0.0), dv(0.0, h);
    const Complex f0 = f(tau);
    const Complex fe = f(tau + du), fw = f(tau - du), fn = f(tau + dv), fs = f(tau - dv);
    const Complex f_uu = (fe - 2.0 * f0 + fw) / (h * h);
    const Complex f_vv = (fn - 2.0 * f0 + fs) / (h * h);
    const Complex f_u = (fe - fw) / (2.0 * h);
    const Complex f_v = (fn - fs) / (2.0 * h);
    const double v = tau.imag();
    const Complex i(0.0, 1.0);
    return {-v * v * (f_uu + f_vv) + i * static_cast<double>(k) * v * (f_u + i * f_v), f0};
}

/// Finite-difference Delta_k applied to the truncated expansion of F_{k,-m};
/// rel_err is |Delta_k F| / (1 + |F|).
inline VerificationReport check_laplacian(const FormParams& p, const HalfPlanePoint& point, double h, const Truncation& trunc, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("laplacian", p, trunc, tol);
    const auto expansion = coeffs::maass_expansion(p, trunc);
    const auto lap = laplacian_residual([&](Complex z) { return forms::eval_maass(expansion, HalfPlanePoint(z)).value; }, p.k, point.tau(), h);
    Residual r{"Delta_k F", point.tau(), lap.residual, 0.0, std::abs(lap.residual), std::abs(lap.residual) / (1.0 + std::abs(lap.value))};
    report.residuals.push_back(r);
    report.notes.push_back("h=" + std::to_string(h));
    return detail::finish(std::move(report), clock);
}

/// |b_{kappa,1}(n)| for weights whose level-one cusp space is zero; the
/// truncated Poincare series should vanish.
inline VerificationReport check_zero_space(const std::vector<int>& kappas, std::int64_t n_lo, std::int64_t n_hi, int c_max, double tol)
{
    detail::Stopwatch clock;
    Truncation trunc;
    trunc.c_max = c_max;
    auto report = detail::start("zero-space", FormParams{kappas.empty() ? 4 : kappas.front(), 1, 1}, trunc, tol);
    for (int kappa : kappas) {
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const auto b = coeffs::b_coeff(kappa, 1, n, 1, trunc);
            Residual r{"kappa=" + std::to_string(kappa) + " n=" + std::to_string(n), Complex(static_cast<double>(n), 0.0), b.value, 0.0,
                       std::abs(b.value), std::abs(b.value)};
            report.residuals.push_back(r);
        }
    }
    return detail::finish(std::move(report), clock);
}

/// eval_maass against the direct coset sum of the seed.
inline VerificationReport check_coset_oracle(const FormParams& p, const HalfPlanePoint& point, const Truncation& trunc, int coset_c_max,
                                             double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("cosets", p, trunc, tol);
    const auto expansion = coeffs::maass_expansion(p, trunc);
    const auto series = forms::eval_maass(expansion, point);
    const auto direct = forms::eval_direct_cosets(p, point, coset_c_max);
    report.add("Fourier vs coset sum", point.tau(), series.value, direct.value);
    report.notes.push_back("coset c_max=" + std::to_string(coset_c_max) + ", coset tail estimate " + std::to_string(direct.tail_estimate));
    return detail::finish(std::move(report), clock);
}

/// Li_{-p}(w) = Li_{-p}(1/w) for odd p at `count` seeded random points with
/// 0.2 <= |w| <= 5, |w - 1| >= 0.05.
inline VerificationReport check_polylog_inversion(int p, int count, std::uint64_t seed, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("polylog-inversion", FormParams{}, Truncation{}, tol);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_r(std::log(0.2), std::log(5.0));
    std::uniform_real_distribution<double> angle(-numerics::pi, numerics::pi);
    int made = 0;
    while (made < count) {
        const Complex w = std::polar(std::exp(log_r(rng)), angle(rng));
        if (std::abs(w - 1.0) < 0.05) continue;
        const Complex lhs = numerics::polylog_neg(p, w);
        const Complex rhs = numerics::polylog_neg(p, 1.0 / w);
        Residual r{"p=" + std::to_string(p), w, lhs, rhs, std::abs(lhs - rhs), std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300)};
        report.residuals.push_back(r);
        ++made;
    }
    return detail::finish(std::move(report), clock);
}

/// Gamma(s+1, y) = s Gamma(s, y) + y^s e^{-y}, relative to the magnitude of
/// the right-hand side.
inline VerificationReport check_incomplete_gamma_recurrence(int s_max, const std::vector<double>& ys, double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("incomplete-gamma-recurrence", FormParams{}, Truncation{}, tol);
    for (int s = 1; s <= s_max; ++s) {
        for (double y : ys) {
            const double lhs = numerics::incomplete_gamma(s + 1, y);
            const double a = s * numerics::incomplete_gamma(s, y);
            const double b = numerics::ipow(y, s) * std::exp(-y);
            const double rhs = a + b;
            const double scale = std::abs(a) + std::abs(b);
            Residual r{"s=" + std::to_string(s), Complex(y, 0.0), lhs, rhs, std::abs(lhs - rhs), std::abs(lhs - rhs) / scale};
            report.residuals.push_back(r);
        }
    }
    return detail::finish(std::move(report), clock);
}

/// Trapezoid on the contour of (1/2 pi i) \oint alpha+(s) e^{ns} ds against
/// n^{(k-1)/2} I_{1-k}(4 pi sqrt(mn)/c); rel_err relative to |rhs|.
inline VerificationReport check_alpha_residue(const FormParams& p, std::int64_t c, const std::vector<std::int64_t>& ns, double radius, int nodes,
                                              double tol)
{
    detail::Stopwatch clock;
    auto report = detail::start("alpha-residue", p, Truncation{}, tol);
    const continuation::SeriesAlphaParams ap{p.m, c, p.k, continuation::Sign::plus};
    const continuation::ContourSpec spec{radius, nodes};
    for (std::int64_t n : ns) {
        numerics::CompensatedSum<Complex> acc;
        for (int l = 0; l < nodes; ++l) {
            const Complex s = spec.node(l);
            acc += s * continuation::alpha(ap, s) * std::exp(static_cast<double>(n) * s) / static_cast<double>(nodes);
        }
        const double nd = static_cast<double>(n);
        const double rhs = std::pow(nd, 0.5 * (p.k - 1)) *
                           numerics::bessel_i(1 - p.k, 4.0 * numerics::pi * std::sqrt(static_cast<double>(p.m) * nd) / static_cast<double>(c));
        Residual r{"n=" + std::to_string(n), Complex(nd, 0.0), acc.value(), rhs, std::abs(acc.value() - rhs), std::abs(acc.value() - rhs) / std::abs(rhs)};
        report.residuals.push_back(r);
    }
    return detail::finish(std::move(report), clock);
}

/// Residual sequence for a parameter sweep (c_max or node doubling).
struct ConvergenceReport
{
    std::string check_name;
    std::vector<int> levels;      ///< c_max values or node counts
    std::vector<double> errors;   ///< residual at each level
    double noise_factor = 3.0;
    double required_contraction = 1.0;
    double floor = 0.0;           ///< errors at or below this count as converged
    bool passed = false;
    std::int64_t runtime_ms = 0;
};

/// Continuation residual |H - reference|/(1 + |reference|) at each c_max.
/// Passes when every step satisfies err[i+1] <= noise * err[i] (or is at the
/// floor) and the last error is below the first.
inline ConvergenceReport check_continuation_convergence(const FormParams& p, const HalfPlanePoint& tau, const std::vector<int>& c_maxes,
                                                    const Truncation& base, const Truncation& ref_trunc, double noise = 3.0,
                                                    double floor = 1e-13)
{
    detail::Stopwatch clock;
    ConvergenceReport report;
    report.check_name = std::string("continuation-convergence-") + forms::to_string(tau.plane());
    report.noise_factor = noise;
    report.floor = floor;
    Complex reference;
    if (tau.plane() == forms::Plane::upper)
        reference = forms::eval_maass(coeffs::maass_expansion(p, ref_trunc), tau).value;
    else
        reference = forms::LowerPlaneRhs(p, ref_trunc)(tau).value;
    for (int c : c_maxes) {
        Truncation t = base;
        t.c_max = c;
        const Complex h = continuation::H(p, tau, t).value;
        report.levels.push_back(c);
        report.errors.push_back(std::abs(h - reference) / (1.0 + std::abs(reference)));
    }
    bool ok = report.errors.size() >= 2;
    for (std::size_t i = 0; i + 1 < report.errors.size(); ++i) {
        if (report.errors[i + 1] <= floor) continue;
        if (report.errors[i + 1] > noise * report.errors[i]) ok = false;
    }
    if (ok && report.errors.back() > floor && report.errors.back() >= report.errors.front()) ok = false;
    report.passed = ok;
    report.runtime_ms = clock.elapsed_ms();
    return report;
}

/// phi+ quadrature error against a 4x-refined reference as the node count
/// doubles; each step must contract by >= `contraction` until the error is
/// at the rounding floor (relative to |reference|).
inline ConvergenceReport check_quadrature_contraction(const FormParams& p, std::int64_t c, std::int64_t d, const HalfPlanePoint& tau,
                                                      const std::vector<int>& nodes, double radius_factor = numerics::pi,
                                                      double contraction = 10.0, double floor = 1e-13)
{
    detail::Stopwatch clock;
    ConvergenceReport report;
    report.check_name = "quadrature-contraction";
    report.required_contraction = contraction;
    report.floor = floor;
    const double radius = radius_factor * std::abs(tau.v());
    const int finest = 4 * *std::max_element(nodes.begin(), nodes.end());
    const Complex ref = continuation::phi_plus(c, d, p.k, p.m, tau, continuation::ContourSpec{radius, finest});
    for (int n : nodes) {
        const Complex val = continuation::phi_plus(c, d, p.k, p.m, tau, continuation::ContourSpec{radius, n});
        report.levels.push_back(n);
        report.errors.push_back(std::abs(val - ref) / std::abs(ref));
    }
    bool ok = report.errors.size() >= 2;
    for (std::size_t i = 0; i + 1 < report.errors.size(); ++i) {
        if (report.errors[i + 1] <= floor) continue;
        if (report.errors[i] / report.errors[i + 1] < contraction) ok = false;
    }
    report.passed = ok;
    report.runtime_ms = clock.elapsed_ms();
    return report;
}

/// Coefficient of q^n in q prod_{j>=1} (1 - q^j)^24, exact integer arithmetic.
inline std::int64_t tau_oracle(int n)
{
    if (n < 1 || n > 50) throw domain_error("tau_oracle: n must be in [1, 50]");
    constexpr int len = 50; // coefficients of q^0 .. q^49 of the product
    std::vector<__int128> poly(len, 0);
    poly[0] = 1;
    for (int j = 1; j < len; ++j) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int i = len - 1; i >= j; --i) poly[static_cast<std::size_t>(i)] -= poly[static_cast<std::size_t>(i - j)];
        }
    }
    return static_cast<std::int64_t>(poly[static_cast<std::size_t>(n - 1)]);
}

/// b_{12,1}(n)/b_{12,1}(1) against tau(n) for n in [2, n_hi]; rel_err holds
/// the absolute difference since tau(n) is an integer target.
inline VerificationReport check_tau_reproduction(int n_hi, int c_max, double tol)
{
    detail::Stopwatch clock;
    Truncation trunc;
    trunc.c_max = c_max;
    auto report = detail::start("tau", FormParams{12, 1, 1}, trunc, tol);
    const double b1 = coeffs::b_coeff(12, 1, 1, 1, trunc).value;
    for (int n = 2; n <= n_hi; ++n) {
        const double ratio = coeffs::b_coeff(12, 1, n, 1, trunc).value / b1;
        const auto target = static_cast<double>(tau_oracle(n));
        const double diff = std::abs(ratio - target);
        report.residuals.push_back(Residual{"n=" + std::to_string(n), Complex(n, 0.0), ratio, target, diff, diff});
    }
    report.notes.push_back("b_{12,1}(1) = " + std::to_string(b1));
    return detail::finish(std::move(report), clock);
}

/// Which check exercises which identity.
struct CoverageEntry
{
    const char* identity;
    const char* check;
};

inline const std::vector<CoverageEntry>& identity_coverage()
{
    static const std::vector<CoverageEntry> table{
        {"H_{k,m}(tau) = F_{k,-m}(tau) on the upper half-plane", "continuation-upper"},
        {"H_{k,m}(tau) = m^{1-k}(E_{P_{2-k,m}}(-tau) - (4pi)^{1-k}/(-k)! P*_{2-k,-m}(-tau)) on the lower half-plane", "continuation-lower"},
        {"H+ on -H equals m^{1-k} E_{P_{2-k,m}}(-tau)", "continuation-lower (parts), unit tests"},
        {"H- on -H equals -(4 pi m)^{1-k}/(-k)! P*_{2-k,-m}(-tau)", "continuation-lower (parts), unit tests"},
        {"F(gamma tau) = (c tau + d)^k F(tau)", "modularity"},
        {"Delta_k F = 0", "laplacian"},
        {"D^{1-k} F_{k,m} = m^{1-k} P_{2-k,m}", "bol"},
        {"xi_k F_{k,m} = -(4 pi m)^{1-k}/(-k)! P_{2-k,-m}", "xi"},
        {"F_{k,m} = sum over Gamma_inf\\Gamma_0(N) of the seed slashed", "cosets"},
        {"Fourier expansion of P_{k,m} (cusp form branch)", "zero-space, tau reproduction"},
        {"Fourier expansion of P_{k,m} (weakly holomorphic branch)", "bol, continuation-lower"},
        {"Kloosterman duality K(-m,-n;c) = K(m,n;c)", "unit tests (arith)"},
        {"n^j/j! = (1/2 pi i) \\oint e^{ns} s^{-j-1} ds (alpha residue)", "alpha-residue"},
        {"Li_{k-1}(q) = Li_{k-1}(1/q) for k in -2N", "polylog-inversion"},
        {"Gamma(s, y) closed form and recurrence", "incomplete-gamma-recurrence"},
        {"D^{k-1} E_f = f and xi_{2-k} f* = f (coefficient level)", "unit tests (forms)"},
    };
    return table;
}

/// Sample points used by the CLI verify suite; mirrored in
/// data/sample_points.json.
struct SampleManifest
{
    int version = 1;
    std::vector<Complex> upper{{0.13, 0.8}, {0.2, 1.3}, {-0.4, 1.1}};
    std::vector<Complex> lower{{0.13, -0.8}, {0.2, -1.3}, {-0.4, -1.1}};
    std::vector<Complex> modularity{{0.2, 1.3}, {0.0, 1.0}};
    Complex laplacian{0.2, 1.3};
    Complex cosets{0.2, 1.3};
};

} // namespace maass::verify
