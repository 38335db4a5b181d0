#pragma once

// Special functions on integer parameters: Bessel J and I of integer order,
// upper/lower incomplete gamma of positive integer order (any real argument),
// negative-integer-order polylogarithms, Gauss-Legendre rules and a
// compensated accumulator.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "maass/errors.hpp"

namespace maass {

using Complex = std::complex<double>;

namespace numerics {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// e(x) = exp(2 pi i x); the argument is reduced mod 1 first.
inline Complex e2pi(double x)
{
    const double frac = x - std::round(x);
    return std::polar(1.0, two_pi * frac);
}

/// e(num/den) with the numerator reduced exactly before the division.
inline Complex e2pi_rational(std::int64_t num, std::int64_t den)
{
    std::int64_t r = num % den;
    if (r < 0) r += den;
    return e2pi(static_cast<double>(r) / static_cast<double>(den));
}

/// x^n for integer n (exact sign handling for negative bases).
inline double ipow(double x, int n)
{
    if (n < 0) return 1.0 / ipow(x, -n);
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

inline Complex ipow(Complex z, int n)
{
    if (n < 0) return 1.0 / ipow(z, -n);
    Complex result = 1.0;
    Complex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

/// n! as a double; exact through 22!, overflow past 170!.
inline double factorial(int n)
{
    if (n < 0) throw domain_error("factorial of negative integer");
    if (n > 170) throw overflow_error("factorial(" + std::to_string(n) + ") overflows double");
    static const auto table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

/// Neumaier-compensated running sum, for real or complex values.
template <class T>
class CompensatedSum
{
public:
    void add(T x)
    {
        if constexpr (std::is_same_v<T, Complex>) {
            add_component(sum_re_, comp_re_, x.real());
            add_component(sum_im_, comp_im_, x.imag());
        } else {
            add_component(sum_re_, comp_re_, x);
        }
    }
    CompensatedSum& operator+=(T x)
    {
        add(x);
        return *this;
    }
    T value() const
    {
        if constexpr (std::is_same_v<T, Complex>)
            return Complex(sum_re_ + comp_re_, sum_im_ + comp_im_);
        else
            return sum_re_ + comp_re_;
    }

private:
    static void add_component(double& sum, double& comp, double x)
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0;
    double sum_im_ = 0.0, comp_im_ = 0.0;
};

namespace detail {

// Power series sum_{j>=0} sign^j (x/2)^{2j+nu} / (j! (j+nu)!).
inline double bessel_series(int nu, double x, double sign)
{
    const double half = 0.5 * x;
    const double q = half * half;
    double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
    double sum = term;
    for (int j = 1; j < 100000; ++j) {
        term *= sign * q / (static_cast<double>(j) * (j + nu));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) && j > half) return sum;
    }
    throw consistency_error("Bessel power series failed to converge");
}

// Miller backward recurrence normalised by J0 + 2 sum_{k>=1} J_{2k} = 1.
inline double bessel_j_miller(int nu, double x)
{
    const double top = std::max(static_cast<double>(nu), x);
    int start = static_cast<int>(top + 10.0 * std::cbrt(top) + 40.0);
    start += start & 1;

    constexpr double big = 1e250;
    constexpr double small = 1e-250;
    const double two_over_x = 2.0 / x;
    double jp = 0.0;   // J_{n+1}
    double jc = 1e-30; // J_n
    double norm = 0.0;
    double result = 0.0;
    for (int n = start; n > 0; --n) {
        const double jm = n * two_over_x * jc - jp; // J_{n-1}
        jp = jc;
        jc = jm;
        if (std::abs(jc) > big) {
            jc *= small;
            jp *= small;
            norm *= small;
            result *= small;
        }
        const int order = n - 1;
        if (order == nu) result = jc;
        if (order > 0 && (order % 2 == 0)) norm += 2.0 * jc;
    }
    norm += jc;
    return result / norm;
}

} // namespace detail

/// Bessel function of the first kind J_nu(x), integer nu >= 0, x >= 0.
inline double bessel_j(int nu, double x)
{
    if (nu < 0) throw domain_error("bessel_j: negative order");
    if (!(x >= 0.0)) throw domain_error("bessel_j: argument must be >= 0");
    if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
    if (x > 1e4) throw domain_error("bessel_j: argument beyond supported range");
    // The alternating series loses about exp(x^2/(4(nu+1))) relative digits.
    if (0.25 * x * x <= 3.0 * (nu + 1)) return detail::bessel_series(nu, x, -1.0);
    return detail::bessel_j_miller(nu, x);
}

/// Modified Bessel function I_nu(x), integer nu >= 0, 0 <= x <= 700.
inline double bessel_i(int nu, double x)
{
    if (nu < 0) throw domain_error("bessel_i: negative order");
    if (!(x >= 0.0)) throw domain_error("bessel_i: argument must be >= 0");
    if (x > 700.0) throw overflow_error("bessel_i: exp(x) not representable for x=" + std::to_string(x));
    if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
    return detail::bessel_series(nu, x, 1.0);
}

/// Gamma(s, y) = (s-1)! e^{-y} sum_{j<s} y^j / j!, valid for every real y.
inline double incomplete_gamma(int s, double y)
{
    if (s < 1) throw domain_error("incomplete_gamma: order must be a positive integer");
    if (-y > 709.0) throw overflow_error("incomplete_gamma: exp(-y) overflows for y=" + std::to_string(y));
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < s; ++j) {
        term *= y / j;
        sum += term;
    }
    return factorial(s - 1) * std::exp(-y) * sum;
}

/// Normalised upper incomplete gamma Gamma(s, y) / Gamma(s).
inline double gamma_star(int s, double y)
{
    if (s < 1) throw domain_error("gamma_star: order must be a positive integer");
    if (-y > 709.0) throw overflow_error("gamma_star: exp(-y) overflows for y=" + std::to_string(y));
    if (y > 0.0) {
        // Terms in log space so very large y underflows cleanly to 0.
        const double ly = std::log(y);
        double sum = 0.0;
        for (int j = 0; j < s; ++j) sum += std::exp(-y + j * ly - std::lgamma(j + 1.0));
        return sum;
    }
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < s; ++j) {
        term *= y / j;
        sum += term;
    }
    return std::exp(-y) * sum;
}

/// 1 - gamma_star(s, y), accurate for small positive y where the difference
/// cancels.
inline double gamma_lower_star(int s, double y)
{
    if (s < 1) throw domain_error("gamma_lower_star: order must be a positive integer");
    if (y <= 0.0 || y >= s) return 1.0 - gamma_star(s, y);
    // e^{-y} y^s / s! * sum_{j>=0} y^j / ((s+1)...(s+j))
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < 10000; ++j) {
        term *= y / (s + j);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::exp(-y + s * std::log(y) - std::lgamma(s + 1.0)) * sum;
}

namespace detail {

inline constexpr int eulerian_cache_order = 48;

inline std::vector<double> eulerian_row_uncached(int p)
{
    // A(p, i), i = 0..p-1, from A(n, i) = (i+1) A(n-1, i) + (n-i) A(n-1, i-1).
    std::vector<double> row{1.0};
    for (int n = 2; n <= p; ++n) {
        std::vector<double> next(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            const double keep = i < n - 1 ? (i + 1) * row[static_cast<std::size_t>(i)] : 0.0;
            const double shift = i > 0 ? (n - i) * row[static_cast<std::size_t>(i - 1)] : 0.0;
            next[static_cast<std::size_t>(i)] = keep + shift;
        }
        row = std::move(next);
    }
    return row;
}

} // namespace detail

/// Eulerian numbers A(p, 0..p-1) for p >= 1; rows up to a fixed order are
/// built once and shared read-only.
inline const std::vector<double>& eulerian_row(int p)
{
    if (p < 1) throw domain_error("eulerian_row: order must be >= 1");
    static const auto cache = [] {
        std::vector<std::vector<double>> rows(detail::eulerian_cache_order + 1);
        for (int q = 1; q <= detail::eulerian_cache_order; ++q) rows[static_cast<std::size_t>(q)] = detail::eulerian_row_uncached(q);
        return rows;
    }();
    if (p <= detail::eulerian_cache_order) return cache[static_cast<std::size_t>(p)];
    thread_local std::vector<double> scratch;
    scratch = detail::eulerian_row_uncached(p);
    return scratch;
}

struct PolylogValue
{
    Complex value;
    bool precision_warning = false; ///< |w - 1| < 1e-8
};

/// Li_{-p}(w) = w * sum_i A(p,i) w^i / (1-w)^{p+1} for p >= 1, w/(1-w) for p = 0.
/// The rational form continues the defining series to all w != 1.
inline PolylogValue polylog_neg_checked(int p, Complex w)
{
    if (p < 0) throw domain_error("polylog_neg: order must be non-positive (p >= 0)");
    if (w == Complex(1.0, 0.0)) throw pole_error("polylog_neg: pole at w = 1");
    PolylogValue out;
    out.precision_warning = std::abs(w - 1.0) < 1e-8;
    if (p == 0) {
        out.value = w / (1.0 - w);
        return out;
    }
    const auto& a = eulerian_row(p);
    if (std::abs(w) <= 1e8) {
        Complex num = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) num = num * w + *it;
        out.value = w * num / ipow(1.0 - w, p + 1);
        return out;
    }
    // Same rational function with numerator and denominator divided by
    // w^{p+1}, so huge |w| does not overflow.
    const Complex z = 1.0 / w;
    Complex num = 0.0;
    for (double coeff : a) num = num * z + coeff;
    out.value = z * num / ipow(z - 1.0, p + 1);
    return out;
}

inline Complex polylog_neg(int p, Complex w) { return polylog_neg_checked(p, w).value; }

struct QuadratureRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline QuadratureRule gauss_legendre(int n)
{
    if (n < 1) throw domain_error("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double pn = n == 1 ? x : p1;
            const double pn1 = n == 1 ? 1.0 : p0;
            dp = n * (x * pn - pn1) / (x * x - 1.0);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

} // namespace numerics
} // namespace maass
