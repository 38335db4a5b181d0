#include <gtest/gtest.h>

#include <cmath>

#include "maass/continuation.hpp"

using namespace maass;
using namespace maass::continuation;
using coeffs::FormParams;
using coeffs::Part;
using coeffs::Truncation;
using forms::HalfPlanePoint;

namespace {

Truncation cut(int c_max, int n_max = 40)
{
    Truncation t;
    t.c_max = c_max;
    t.n_max = n_max;
    return t;
}

ContourSpec contour(const HalfPlanePoint& tau, int nodes = 64) { return ContourSpec{numerics::pi * std::abs(tau.v()), nodes}; }

double bessel_x(int m, int n, int c) { return 4.0 * M_PI * std::sqrt(static_cast<double>(m) * n) / c; }

/// e(x) = exp(2 pi i x)
Complex e(double x) { return std::polar(1.0, 2.0 * M_PI * x); }

double rel(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }

} // namespace

TEST(Contour, Validation)
{
    EXPECT_THROW((ContourSpec{0.0, 64}.validate(1.0)), domain_error);
    EXPECT_THROW((ContourSpec{2.0 * M_PI, 64}.validate(1.0)), domain_error);
    EXPECT_THROW((ContourSpec{1.0, 0}.validate(1.0)), domain_error);
    EXPECT_NO_THROW((ContourSpec{1.0, 8}.validate(-1.0)));
    const auto spec = ContourSpec::for_point(HalfPlanePoint(0.1, -0.8), cut(5));
    EXPECT_DOUBLE_EQ(spec.radius, M_PI * 0.8);
    EXPECT_EQ(spec.nodes, 64);
}

TEST(Alpha, SignRelation)
{
    const SeriesAlphaParams plus{2, 3, -4, Sign::plus}, minus{2, 3, -4, Sign::minus};
    for (Complex s : {Complex(0.7, 0.2), Complex(-1.5, 2.0), Complex(0.05, -0.3)})
        EXPECT_LE(std::abs(alpha(minus, s) + alpha(plus, -s)), 1e-14 * std::abs(alpha(plus, -s)));
    for (int j = 0; j < 6; ++j) EXPECT_EQ(beta(minus, j), (j % 2 ? -1.0 : 1.0) * beta(plus, j));
}

TEST(Alpha, LeadingTerm)
{
    // beta(0) = x^{1-k}/(1-k)! with x = 2 pi sqrt(m)/c
    const SeriesAlphaParams p{1, 2, -2, Sign::plus};
    EXPECT_NEAR(beta(p, 0), std::pow(M_PI, 3) / 6.0, 1e-14);
    // large |s| leaves the first two terms
    const Complex s(1e8, 0.0);
    EXPECT_LE(std::abs(alpha(p, s) * s - beta(p, 0) - beta(p, 1) / s), 1e-12);
}

TEST(Alpha, ResidueReproducesBesselI)
{
    for (auto [k, m, c] : std::vector<std::tuple<int, int, int>>{{-2, 1, 1}, {-4, 2, 3}}) {
        const SeriesAlphaParams p{m, c, k, Sign::plus};
        const ContourSpec spec{2.0, 64};
        for (int n : {1, 2, 3}) {
            Complex acc = 0.0;
            for (int l = 0; l < spec.nodes; ++l) {
                const Complex s = spec.node(l);
                acc += s * alpha(p, s) * std::exp(static_cast<double>(n) * s);
            }
            acc /= static_cast<double>(spec.nodes);
            const double ref = std::pow(n, 0.5 * (k - 1)) * std::cyl_bessel_i(1.0 - k, bessel_x(m, n, c));
            EXPECT_LE(std::abs(acc - ref), 1e-10 * ref) << k << " " << m << " " << c << " " << n;
        }
    }
}

TEST(Alpha, Errors)
{
    const SeriesAlphaParams p{1, 1, -2, Sign::plus};
    EXPECT_THROW(alpha(p, Complex(0.0, 0.0)), domain_error);
    EXPECT_THROW(alpha(p, Complex(0.01, 0.0), 3), consistency_error);
}

TEST(PhiPlus, NodeDoublingConverges)
{
    const HalfPlanePoint tau(0.2, 1.3);
    const Complex a = phi_plus(1, 0, -2, 1, tau, contour(tau, 64));
    const Complex b = phi_plus(1, 0, -2, 1, tau, contour(tau, 128));
    EXPECT_LT(std::abs(a - b), 1e-10);
}

TEST(PhiPlus, UpperPlaneSeries)
{
    const HalfPlanePoint tau(0.2, 1.3);
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {3, 2}, {5, 1}}) {
        const int k = -2, m = 1;
        const Complex w = e(static_cast<double>(d) / c) * tau.q_pow(1);
        Complex ref = 0.0;
        for (int n = 1; n <= 20; ++n) ref += std::pow(n, 0.5 * (k - 1)) * std::cyl_bessel_i(1.0 - k, bessel_x(m, n, c)) * std::pow(w, n);
        const Complex lhs = w * phi_plus(c, d, k, m, tau, contour(tau));
        EXPECT_LE(std::abs(lhs - ref), 1e-10 * std::abs(ref)) << c << " " << d;
    }
}

TEST(PhiPlus, LowerPlaneSeries)
{
    const HalfPlanePoint tau(0.2, -1.3);
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {3, 2}, {4, 3}}) {
        const int k = -4, m = 2;
        const SeriesAlphaParams p{m, c, k, Sign::plus};
        Complex ref = -beta(p, 0);
        for (int n = 1; n <= 20; ++n)
            ref -= e(-static_cast<double>(n) * d / c) * std::pow(n, 0.5 * (k - 1)) * std::cyl_bessel_j(1.0 - k, bessel_x(m, n, c)) * tau.q_pow(-n);
        const Complex w = e(static_cast<double>(d) / c) * tau.q_pow(1);
        const Complex lhs = w * phi_plus(c, d, k, m, tau, ContourSpec{1.5 * M_PI * 1.3, 128});
        EXPECT_LE(std::abs(lhs - ref), 1e-9 * std::abs(ref)) << c << " " << d;
    }
}

TEST(PhiPlus, Errors)
{
    const HalfPlanePoint tau(0.2, 1.3);
    EXPECT_THROW(phi_plus(4, 2, -2, 1, tau, contour(tau)), domain_error);
    EXPECT_THROW(phi_plus(1, 0, -2, 1, tau, ContourSpec{3.0 * M_PI, 64}), domain_error);

    // a node landing on the kernel pole: radius at the edge, u tuned to cancel the node's phase
    const int nodes = 131072;
    const double r = 2.0 * M_PI * (1.0 - 1e-12);
    const double u = -r * std::sin(M_PI / nodes) / (2.0 * M_PI);
    EXPECT_THROW(phi_plus(1, 0, -2, 1, HalfPlanePoint(u, 1.0), ContourSpec{r, nodes}), pole_error);

    EXPECT_THROW(continuation::detail::check_pole_distance(0.01, 1.0, 1.0), consistency_error);
    EXPECT_THROW(continuation::detail::check_pole_distance(1e-9, 1.0, 1.0), pole_error);
    EXPECT_NO_THROW(continuation::detail::check_pole_distance(0.01, 1.0, 5.0));
}

TEST(PhiMinus, SelfConvergence)
{
    const HalfPlanePoint tau(0.13, 0.8);
    Truncation base = cut(1);
    Truncation fine = base;
    fine.t_nodes = 32;
    fine.t_cutoff = 2.0 * auto_t_cutoff(-2, 0.8);
    const Complex a = phi_minus(2, 1, -2, 1, tau, contour(tau), base).value;
    const Complex b = phi_minus(2, 1, -2, 1, tau, contour(tau), fine).value;
    EXPECT_LT(std::abs(a - b), 1e-8 * std::max(1.0, std::abs(b)));
}

TEST(PhiMinus, UpperPlaneSeries)
{
    const int k = -2, m = 1;
    const HalfPlanePoint tau(0.2, 1.3);
    const double v = 1.3;
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {3, 2}, {5, 4}}) {
        Complex ref = 0.0;
        for (int n = 1; n <= 20; ++n)
            ref += std::pow(n, 0.5 * (k - 1)) * e(-static_cast<double>(n) * d / c) * std::cyl_bessel_j(1.0 - k, bessel_x(m, n, c)) *
                   numerics::gamma_star(1 - k, 4.0 * M_PI * n * v) * tau.q_pow(-n);
        const Complex phi = phi_minus(c, d, k, m, tau, contour(tau), cut(1)).value;
        const Complex lhs = numerics::ipow(4.0 * M_PI * v, 1 - k) / numerics::factorial(-k) * phi;
        EXPECT_LE(std::abs(lhs - ref), 1e-9 * std::abs(ref)) << c << " " << d;
    }
}

TEST(PhiMinus, LowerPlaneSeries)
{
    // (4 pi v)^{1-k} is negative here, which flips the sign against the positive I-Bessel sum
    const int k = -2, m = 1;
    const HalfPlanePoint tau(-0.4, -1.1);
    const double v = -1.1;
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {5, 3}}) {
        const Complex w = e(static_cast<double>(d) / c) * tau.q_pow(1);
        Complex ref = 0.0;
        for (int n = 1; n <= 20; ++n)
            ref -= std::pow(n, 0.5 * (k - 1)) * std::cyl_bessel_i(1.0 - k, bessel_x(m, n, c)) *
                   numerics::gamma_star(1 - k, 4.0 * M_PI * n * std::abs(v)) * std::pow(w, n);
        const Complex phi = phi_minus(c, d, k, m, tau, contour(tau), cut(1)).value;
        const Complex lhs = numerics::ipow(4.0 * M_PI * v, 1 - k) / numerics::factorial(-k) * phi;
        EXPECT_LE(std::abs(lhs - ref), 1e-9 * std::abs(ref)) << c << " " << d;
    }
}

TEST(PhiMinus, ShortCutoffIsReported)
{
    const HalfPlanePoint tau(0.2, 0.3);
    Truncation t = cut(1);
    t.t_cutoff = 1.05;
    EXPECT_THROW(phi_minus(1, 0, -2, 1, tau, contour(tau), t), truncation_error);
    EXPECT_THROW(phi_minus(2, 2, -2, 1, tau, contour(tau), cut(1)), domain_error);
}

TEST(HPlus, MatchesHolomorphicPartAtEqualTruncation)
{
    // per-modulus identity: with the same c_max on both sides only the n-truncation differs
    for (auto [k, m] : std::vector<std::pair<int, int>>{{-2, 1}, {-4, 1}}) {
        const FormParams p{k, m, 1};
        const auto t = cut(12, 40);
        const auto exp = coeffs::maass_expansion(p, t);
        for (const HalfPlanePoint tau : {HalfPlanePoint(0.2, 1.3), HalfPlanePoint(0.13, 0.8)}) {
            Complex ref = tau.q_pow(-m);
            for (const auto& [n, c] : exp.holo) ref += c * tau.q_pow(n);
            EXPECT_LE(rel(H_plus(p, tau, t).value, ref), 1e-9) << k << " " << tau.v();
        }
    }
}

TEST(HMinus, MatchesNonholomorphicPartAtEqualTruncation)
{
    for (auto [k, m] : std::vector<std::pair<int, int>>{{-2, 1}, {-4, 1}}) {
        const FormParams p{k, m, 1};
        const auto t = cut(12, 40);
        const auto exp = coeffs::maass_expansion(p, t);
        for (const HalfPlanePoint tau : {HalfPlanePoint(0.2, 1.3), HalfPlanePoint(0.13, 0.8)}) {
            const double v = tau.v();
            Complex ref = -numerics::gamma_star(1 - k, 4.0 * M_PI * m * v) * tau.q_pow(-m);
            for (const auto& [n, c] : exp.nonholo) ref += c * numerics::gamma_star(1 - k, 4.0 * M_PI * n * v) * tau.q_pow(-n);
            EXPECT_LE(rel(H_minus(p, tau, t).value, ref), 1e-9) << k << " " << v;
        }
    }
}

TEST(HPlus, LowerPlaneIsTheEichlerPart)
{
    const FormParams p{-2, 1, 1};
    const auto t = cut(12, 40);
    const forms::LowerPlaneRhs rhs(p, t);
    for (const HalfPlanePoint tau : {HalfPlanePoint(0.2, -1.3), HalfPlanePoint(-0.4, -1.1)}) {
        const Complex ref = rhs.parts(tau).eichler.value;
        EXPECT_LE(std::abs(H_plus(p, tau, t).value - ref), 1e-9 * (1.0 + std::abs(tau.q_pow(-1))));
    }
}

TEST(HMinus, LowerPlaneIsTheStarPart)
{
    const FormParams p{-2, 1, 1};
    const auto t = cut(12, 40);
    const forms::LowerPlaneRhs rhs(p, t);
    for (const HalfPlanePoint tau : {HalfPlanePoint(0.2, -1.3), HalfPlanePoint(-0.4, -1.1)}) {
        const Complex ref = rhs.parts(tau).star.value;
        EXPECT_LE(rel(H_minus(p, tau, t).value, ref), 1e-9);
    }
}

TEST(HMinus, VanishesHighInTheUpperPlane)
{
    const HalfPlanePoint tau(0.1, 5.0);
    EXPECT_LT(std::abs(H_minus({-2, 1, 1}, tau, cut(4)).value), 1e-10);
}

TEST(H, NoModuliLeavesThePrincipalTerm)
{
    const HalfPlanePoint tau(0.2, 1.3);
    const FormParams p{-2, 1, 1};
    EXPECT_EQ(H_plus(p, tau, cut(0)).value, tau.q_pow(-1));
    const Complex total = H(p, tau, cut(0)).value;
    const Complex seed = forms::maass_seed(-2, 1, tau.tau());
    EXPECT_LE(std::abs(total - seed), 1e-12 * std::abs(seed));
}

TEST(H, PeriodicInU)
{
    const FormParams p{-2, 1, 1};
    for (double v : {1.1, -1.1}) {
        const Complex a = H(p, HalfPlanePoint(-0.4, v), cut(8)).value;
        const Complex b = H(p, HalfPlanePoint(0.6, v), cut(8)).value;
        EXPECT_LE(rel(a, b), 1e-11);
    }
}

TEST(H, ThreadCountDoesNotChangeBits)
{
    const FormParams p{-2, 1, 1};
    Truncation one = cut(12), many = cut(12);
    many.threads = 3;
    for (double v : {1.3, -1.3}) {
        const HalfPlanePoint tau(0.2, v);
        EXPECT_EQ(H(p, tau, one).value, H(p, tau, many).value);
    }
}

TEST(H, Diagnostics)
{
    const FormParams p{-2, 1, 1};
    for (double v : {0.8, -0.8}) {
        const auto val = H(p, HalfPlanePoint(0.13, v), cut(10));
        EXPECT_GT(val.min_pole_distance, 0.5 * (1.0 - std::exp(-M_PI * std::abs(v))));
        EXPECT_GT(val.rounding, 0.0);
        EXPECT_LT(val.rounding, 1e-8 * (1.0 + std::abs(val.value)));
        EXPECT_GE(val.t_tail, 0.0);
        EXPECT_EQ(val.c_max, 10);
    }
}

TEST(H, RejectsBadParameters)
{
    const HalfPlanePoint tau(0.2, 1.3);
    EXPECT_THROW(H({-3, 1, 1}, tau, cut(2)), domain_error);
    EXPECT_THROW(H({-2, 0, 1}, tau, cut(2)), domain_error);
    Truncation bad = cut(2);
    bad.radius_factor = 0.0;
    EXPECT_THROW(H({-2, 1, 1}, tau, bad), domain_error);
}
