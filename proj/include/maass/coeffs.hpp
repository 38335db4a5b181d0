#pragma once

// Fourier coefficients of the holomorphic Poincare series P_{kappa,m}
// (kappa >= 4 even) and of the Maass-Poincare series F_{k,-m} (k <= -2 even,
// m >= 1) at the cusp i*infinity, as truncated Kloosterman-Bessel sums over
// c <= c_max with N | c.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maass/arith.hpp"
#include "maass/errors.hpp"
#include "maass/numerics.hpp"
#include "maass/parallel.hpp"

namespace maass::coeffs {

/// Weight, index and level of a Poincare series.  For Maass-Poincare series
/// `m` is the positive integer with F_{k,-m}; for holomorphic ones it is the
/// signed index of P_{kappa,m}.
struct FormParams
{
    int k = -2;
    std::int64_t m = 1;
    std::int64_t level = 1;
};

/// Every cutoff used anywhere in the library.
struct Truncation
{
    int c_max = 300;
    int n_max = 20;
    int contour_nodes = 64;
    int series_terms = 400;              ///< iteration cap for the alpha series
    std::optional<double> t_cutoff;      ///< outer t-integral bound; chosen from v when empty
    double radius_factor = numerics::pi; ///< contour radius = radius_factor * |v|
    int t_panels = 8;
    int t_nodes = 16; ///< Gauss-Legendre nodes per panel
    unsigned threads = 1;

    void validate() const
    {
        if (c_max < 0) throw domain_error("truncation: c_max must be >= 0");
        if (n_max < 0) throw domain_error("truncation: n_max must be >= 0");
        if (contour_nodes < 1) throw domain_error("truncation: contour_nodes must be positive");
        if (series_terms < 1) throw domain_error("truncation: series_terms must be positive");
        if (t_cutoff && !(*t_cutoff > 1.0)) throw domain_error("truncation: t_cutoff must exceed 1");
        if (!(radius_factor > 0.0 && radius_factor < 2.0 * numerics::pi))
            throw domain_error("truncation: radius_factor must lie in (0, 2 pi)");
        if (t_panels < 1 || t_nodes < 1) throw domain_error("truncation: t quadrature needs positive sizes");
        if (threads < 1) throw domain_error("truncation: threads must be positive");
    }
};

/// A truncated coefficient with a rigorous bound on the omitted c-tail.
struct CoefficientValue
{
    double value = 0.0;
    double tail = 0.0;
    int c_max = 0;
};

/// principal[n] multiplies q^n (n < 0) together with the seed factor the
/// evaluator applies; holo[n] multiplies q^n (n >= 0); nonholo[n] multiplies
/// Gamma*(1-k, 4 pi n v) q^{-n} (n >= 1).
struct FourierExpansion
{
    int weight = 0;
    std::int64_t level = 1;
    int c_max = 0;
    std::map<std::int64_t, Complex> principal;
    std::map<std::int64_t, Complex> holo;
    std::map<std::int64_t, Complex> nonholo;
    std::map<std::int64_t, double> holo_tail;
    std::map<std::int64_t, double> nonholo_tail;

    Complex constant_term() const
    {
        auto it = holo.find(0);
        return it == holo.end() ? Complex{} : it->second;
    }
};

inline void require_maass(int k, std::int64_t m)
{
    if (k > -2 || k % 2 != 0) throw domain_error("Maass-Poincare weight must be even and <= -2, got " + std::to_string(k));
    if (m < 1) throw domain_error("Maass-Poincare index m must be >= 1 (series F_{k,-m})");
    if (1 - k > 170) throw overflow_error("weight too negative for double factorials");
}

inline void require_holomorphic(int kappa, std::int64_t m)
{
    if (kappa < 4 || kappa % 2 != 0) throw domain_error("holomorphic weight must be even and >= 4, got " + std::to_string(kappa));
    if (m == 0) throw domain_error("holomorphic index m must be nonzero");
}

namespace detail {

enum class Weight { bessel_j, bessel_i, inverse_power };

/// One c-sum: sum_{N | c <= c_max} K(m_arg, n_arg; c) * w(c), with
/// w(c) = B_nu(x/c)/c for Bessel rows and c^{-power} for power rows.
struct SumRow
{
    std::int64_t m_arg = 0;
    std::int64_t n_arg = 0;
    Weight weight = Weight::bessel_j;
    int order = 0; ///< Bessel order, or the power for inverse_power rows
    double x = 0.0;
};

inline double row_weight(const SumRow& row, std::int64_t c)
{
    const double cd = static_cast<double>(c);
    switch (row.weight) {
    case Weight::bessel_j: return numerics::bessel_j(row.order, row.x / cd) / cd;
    case Weight::bessel_i: return numerics::bessel_i(row.order, row.x / cd) / cd;
    case Weight::inverse_power: return numerics::ipow(cd, -row.order);
    }
    return 0.0;
}

/// Majorant of the omitted terms c > c_max using |K(m,n;c)| <= c,
/// |J_nu(y)| <= (y/2)^nu/nu! and I_nu(y) <= (y/2)^nu/nu! min(e^y, e^{y^2/4}),
/// summed by integral comparison.  Power rows use |K(m,0;c)| <= |m|.
inline double row_tail(const SumRow& row, int c_max)
{
    const double c1 = c_max + 1.0;
    if (row.weight == Weight::inverse_power) {
        const double bound = static_cast<double>(std::max<std::int64_t>(1, std::abs(row.m_arg)));
        const int p = row.order;
        return bound * (std::pow(c1, -p) + std::pow(c1, 1.0 - p) / (p - 1.0));
    }
    const int nu = row.order;
    const double lg = nu * std::log(0.5 * row.x) - std::lgamma(nu + 1.0);
    double log_growth = 0.0;
    if (row.weight == Weight::bessel_i) {
        const double y = row.x / c1;
        log_growth = std::min(y, 0.25 * y * y);
    }
    const double head = std::exp(lg + log_growth - nu * std::log(c1));
    return head * (1.0 + c1 / (nu - 1.0));
}

struct RowSums
{
    std::vector<double> value;
    std::vector<double> tail;
};

/// Evaluates every row with one Kloosterman table per c; per-c terms are
/// reduced in ascending c with compensated summation.
inline RowSums kloosterman_sums(const std::vector<SumRow>& rows, std::int64_t level, int c_max, unsigned threads)
{
    if (level < 1) throw domain_error("level must be positive");
    std::vector<std::int64_t> moduli;
    for (std::int64_t c = level; c <= c_max; c += level) moduli.push_back(c);

    std::vector<std::vector<double>> terms(moduli.size());
    maass::detail::parallel_for(moduli.size(), threads, [&](std::size_t i) {
        const arith::KloostermanTable table(moduli[i]);
        auto& out = terms[i];
        out.resize(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const double w = row_weight(rows[r], moduli[i]);
            out[r] = w == 0.0 ? 0.0 : table(rows[r].m_arg, rows[r].n_arg) * w;
        }
    });

    RowSums sums;
    sums.value.resize(rows.size());
    sums.tail.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        numerics::CompensatedSum<double> acc;
        for (const auto& t : terms) acc += t[r];
        sums.value[r] = acc.value();
        sums.tail[r] = row_tail(rows[r], c_max);
    }
    return sums;
}

inline double sign_pow(int half_weight) { return (half_weight % 2 == 0) ? 1.0 : -1.0; }

inline SumRow holomorphic_row(int kappa, std::int64_t m, std::int64_t n)
{
    const double x = 4.0 * numerics::pi * std::sqrt(std::abs(static_cast<double>(m) * static_cast<double>(n)));
    return SumRow{m, n, m > 0 ? Weight::bessel_j : Weight::bessel_i, kappa - 1, x};
}

inline CoefficientValue finish_holomorphic(int kappa, std::int64_t m, std::int64_t n, double sum, double tail, int c_max)
{
    const double ratio = std::abs(static_cast<double>(n) / static_cast<double>(m));
    const double scale = std::pow(ratio, 0.5 * (kappa - 1));
    const double eps = sign_pow(kappa / 2);
    CoefficientValue out;
    out.c_max = c_max;
    if (m > 0) {
        const double delta = (m == n) ? 1.0 : 0.0;
        out.value = scale * (delta + 2.0 * numerics::pi * eps * sum);
    } else {
        out.value = 2.0 * numerics::pi * eps * scale * sum;
    }
    out.tail = 2.0 * numerics::pi * scale * tail;
    return out;
}

inline SumRow maass_row(int k, std::int64_t m, int sign, std::int64_t n)
{
    const double x = 4.0 * numerics::pi * std::sqrt(static_cast<double>(m) * static_cast<double>(n));
    return SumRow{-m, sign * n, sign > 0 ? Weight::bessel_i : Weight::bessel_j, 1 - k, x};
}

inline CoefficientValue finish_maass(int k, std::int64_t m, std::int64_t n, double sum, double tail, int c_max)
{
    const double scale = std::pow(static_cast<double>(m) / static_cast<double>(n), 0.5 * (1 - k));
    const double pref = 2.0 * numerics::pi * sign_pow(k / 2) * scale;
    return CoefficientValue{pref * sum, std::abs(pref) * tail, c_max};
}

inline SumRow constant_row(int k, std::int64_t m) { return SumRow{-m, 0, Weight::inverse_power, 2 - k, 0.0}; }

/// (2 pi)^{2-k} (-1)^{k/2} m^{1-k} / (1-k)!
inline double constant_prefactor(int k, std::int64_t m)
{
    return numerics::ipow(2.0 * numerics::pi, 2 - k) * sign_pow(k / 2) *
           numerics::ipow(static_cast<double>(m), 1 - k) / numerics::factorial(1 - k);
}

} // namespace detail

/// b_{kappa,m}(n): coefficient of q^n in P_{kappa,m}, both the cusp-form
/// (m > 0, J-Bessel plus Kronecker delta) and weakly holomorphic (m < 0,
/// I-Bessel) branches.
inline CoefficientValue b_coeff(int kappa, std::int64_t m, std::int64_t n, std::int64_t level, const Truncation& trunc)
{
    require_holomorphic(kappa, m);
    if (n < 1) throw domain_error("b_coeff: n must be >= 1");
    trunc.validate();
    const auto sums = detail::kloosterman_sums({detail::holomorphic_row(kappa, m, n)}, level, trunc.c_max, trunc.threads);
    return detail::finish_holomorphic(kappa, m, n, sums.value[0], sums.tail[0], trunc.c_max);
}

/// Constant term a+_{k,-m}(0) of F_{k,-m}.
///
/// Sign note: this is the n -> 0 limit of the I-Bessel coefficient formula,
/// (2 pi)^{2-k} (-1)^{k/2} m^{1-k}/(1-k)! sum_c K(-m,0;c)/c^{2-k}.  It is
/// also exactly minus the beta+(0) terms produced by the contour
/// representation on the lower half-plane, which is what lets H+ cancel it.
inline CoefficientValue a_plus_zero(int k, std::int64_t m, std::int64_t level, const Truncation& trunc)
{
    require_maass(k, m);
    trunc.validate();
    const auto sums = detail::kloosterman_sums({detail::constant_row(k, m)}, level, trunc.c_max, trunc.threads);
    const double pref = detail::constant_prefactor(k, m);
    return CoefficientValue{pref * sums.value[0], std::abs(pref) * sums.tail[0], trunc.c_max};
}

enum class Part { plus, minus };

/// a^eps_{k,-m}(n), n >= 1: eps = plus is the holomorphic coefficient
/// (I-Bessel, K(-m, n; c)), eps = minus the non-holomorphic one
/// (J-Bessel, K(-m, -n; c)).
inline CoefficientValue a_coeff(int k, std::int64_t m, Part part, std::int64_t n, std::int64_t level, const Truncation& trunc)
{
    require_maass(k, m);
    if (n < 1) throw domain_error("a_coeff: n must be >= 1");
    trunc.validate();
    const int sign = part == Part::plus ? 1 : -1;
    const auto sums = detail::kloosterman_sums({detail::maass_row(k, m, sign, n)}, level, trunc.c_max, trunc.threads);
    return detail::finish_maass(k, m, n, sums.value[0], sums.tail[0], trunc.c_max);
}

/// Expansion of F_{k,-m}: principal[-m] = 1 (its seed factor
/// 1 - Gamma*(1-k, 4 pi m v) is applied by the evaluator), holo[0..n_max],
/// nonholo[1..n_max].
inline FourierExpansion maass_expansion(const FormParams& p, const Truncation& trunc)
{
    require_maass(p.k, p.m);
    trunc.validate();
    std::vector<detail::SumRow> rows{detail::constant_row(p.k, p.m)};
    for (std::int64_t n = 1; n <= trunc.n_max; ++n) {
        rows.push_back(detail::maass_row(p.k, p.m, +1, n));
        rows.push_back(detail::maass_row(p.k, p.m, -1, n));
    }
    const auto sums = detail::kloosterman_sums(rows, p.level, trunc.c_max, trunc.threads);

    FourierExpansion exp;
    exp.weight = p.k;
    exp.level = p.level;
    exp.c_max = trunc.c_max;
    exp.principal[-p.m] = 1.0;
    const double pref = detail::constant_prefactor(p.k, p.m);
    exp.holo[0] = pref * sums.value[0];
    exp.holo_tail[0] = std::abs(pref) * sums.tail[0];
    for (std::int64_t n = 1; n <= trunc.n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(2 * n - 1);
        const auto plus = detail::finish_maass(p.k, p.m, n, sums.value[i], sums.tail[i], trunc.c_max);
        const auto minus = detail::finish_maass(p.k, p.m, n, sums.value[i + 1], sums.tail[i + 1], trunc.c_max);
        exp.holo[n] = plus.value;
        exp.holo_tail[n] = plus.tail;
        exp.nonholo[n] = minus.value;
        exp.nonholo_tail[n] = minus.tail;
    }
    return exp;
}

/// Expansion of P_{kappa,m}: for m > 0 a cusp form (no principal part), for
/// m < 0 principal[m] = 1.  Coefficients holo[1..n_max]; no constant term.
inline FourierExpansion holo_expansion(int kappa, std::int64_t m, std::int64_t level, const Truncation& trunc)
{
    require_holomorphic(kappa, m);
    trunc.validate();
    std::vector<detail::SumRow> rows;
    for (std::int64_t n = 1; n <= trunc.n_max; ++n) rows.push_back(detail::holomorphic_row(kappa, m, n));
    const auto sums = detail::kloosterman_sums(rows, level, trunc.c_max, trunc.threads);

    FourierExpansion exp;
    exp.weight = kappa;
    exp.level = level;
    exp.c_max = trunc.c_max;
    if (m < 0) exp.principal[m] = 1.0;
    for (std::int64_t n = 1; n <= trunc.n_max; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        const auto b = detail::finish_holomorphic(kappa, m, n, sums.value[i], sums.tail[i], trunc.c_max);
        exp.holo[n] = b.value;
        exp.holo_tail[n] = b.tail;
    }
    return exp;
}

} // namespace maass::coeffs
