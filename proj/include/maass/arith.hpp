#pragma once

// Exact modular arithmetic: modular inverses, Kloosterman sums and
// representatives for the double cosets Gamma_inf \ Gamma_0(N) / Gamma_inf.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "maass/errors.hpp"
#include "maass/numerics.hpp"

namespace maass::arith {

/// Inverse of d modulo c in [0, c).  For c = 1 the answer is 0.
inline std::int64_t mod_inverse(std::int64_t d, std::int64_t c)
{
    if (c < 1) throw domain_error("mod_inverse: modulus must be positive");
    if (c == 1) return 0;
    std::int64_t r0 = c, r1 = ((d % c) + c) % c;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        const std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw domain_error("mod_inverse: gcd(" + std::to_string(d) + ", " + std::to_string(c) + ") != 1");
    return ((s0 % c) + c) % c;
}

/// Units d mod c together with their inverses; reused across many (m, n)
/// for the same modulus.
class KloostermanTable
{
public:
    explicit KloostermanTable(std::int64_t c) : c_(c)
    {
        if (c < 1) throw domain_error("kloosterman: modulus must be positive");
        for (std::int64_t d = 0; d < c; ++d) {
            if (std::gcd(d, c) != 1) continue;
            units_.push_back(d);
            inverses_.push_back(mod_inverse(d, c));
        }
    }

    std::int64_t modulus() const { return c_; }
    const std::vector<std::int64_t>& units() const { return units_; }
    const std::vector<std::int64_t>& inverses() const { return inverses_; }

    /// Complex value of sum_{d mod c}^* e((m dbar + n d)/c).
    Complex complex_sum(std::int64_t m, std::int64_t n) const
    {
        const std::int64_t mr = ((m % c_) + c_) % c_;
        const std::int64_t nr = ((n % c_) + c_) % c_;
        numerics::CompensatedSum<Complex> acc;
        for (std::size_t i = 0; i < units_.size(); ++i) {
            const std::int64_t phase = (mr * inverses_[i] + nr * units_[i]) % c_;
            acc += numerics::e2pi_rational(phase, c_);
        }
        return acc.value();
    }

    /// Real Kloosterman sum K(m, n; c); the imaginary part must vanish.
    double operator()(std::int64_t m, std::int64_t n) const
    {
        const Complex z = complex_sum(m, n);
        if (std::abs(z.imag()) > 1e-9)
            throw consistency_error("kloosterman: imaginary part " + std::to_string(z.imag()) + " for (m,n,c)=(" +
                                    std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(c_) + ")");
        return z.real();
    }

private:
    std::int64_t c_;
    std::vector<std::int64_t> units_;
    std::vector<std::int64_t> inverses_;
};

/// K(m, n; c) = sum_{d mod c, (d,c)=1} e((m dbar + n d)/c).
inline double kloosterman(std::int64_t m, std::int64_t n, std::int64_t c)
{
    return KloostermanTable(c)(m, n);
}

struct CosetRep
{
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

/// Identity plus, for each N | c <= c_max and each unit d mod c, one matrix
/// (a b; c d) of determinant 1.  Right translation by (1 l; 0 1) sends
/// d -> d + l c, so together with translates these cover Gamma_inf\Gamma_0(N).
inline std::vector<CosetRep> coset_reps(std::int64_t level, std::int64_t c_max)
{
    if (level < 1) throw domain_error("coset_reps: level must be positive");
    std::vector<CosetRep> reps{CosetRep{}};
    for (std::int64_t c = level; c <= c_max; c += level) {
        for (std::int64_t d = 0; d < c; ++d) {
            if (std::gcd(c, d) != 1) continue;
            const std::int64_t a = mod_inverse(d, c);
            reps.push_back(CosetRep{a, (a * d - 1) / c, c, d});
        }
    }
    return reps;
}

} // namespace maass::arith
