#pragma once

// Residue-level number theory over Q_ell for odd primes ell.

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"

namespace galrep {

struct PrimePower {
    std::int64_t p = 2;
    int exponent = 1;

    PrimePower() = default;
    PrimePower(std::int64_t p_, int e) : p(p_), exponent(e) {
        if (!is_prime(p_)) throw std::invalid_argument("PrimePower: base must be prime");
        if (e < 1) throw std::invalid_argument("PrimePower: exponent must be positive");
    }
    std::int64_t value() const { return ipow(p, exponent); }

    /// Recognise q as p^e, or throw.
    static PrimePower from_value(std::int64_t q) {
        if (q < 2) throw std::invalid_argument("PrimePower: q must be at least 2");
        for (std::int64_t p = 2; p <= q; ++p) {
            if (q % p != 0) continue;
            int e = 0;
            std::int64_t r = q;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            if (r != 1) throw std::invalid_argument("PrimePower: not a prime power");
            return PrimePower(p, e);
        }
        throw std::invalid_argument("PrimePower: not a prime power");
    }
};

inline bool is_prime_power(std::int64_t q) {
    try {
        PrimePower::from_value(q);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace detail {
inline void require_odd_prime(std::int64_t ell) {
    if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("ell must be an odd prime");
}
inline void require_coprime(std::int64_t a, std::int64_t ell, const char* what) {
    if (mod_floor(a, ell) == 0) throw std::invalid_argument(what);
}
}  // namespace detail

/// d_ell(q): multiplicative order of q mod ell.
inline std::int64_t mult_order(std::int64_t q, std::int64_t ell) {
    detail::require_odd_prime(ell);
    detail::require_coprime(q, ell, "mult_order: ell divides q");
    std::int64_t x = mod_floor(q, ell), d = 1;
    while (x != 1) {
        x = (x * mod_floor(q, ell)) % ell;
        ++d;
    }
    return d;
}

/// Euler's criterion.
inline bool is_square_mod(std::int64_t a, std::int64_t ell) {
    detail::require_odd_prime(ell);
    detail::require_coprime(a, ell, "is_square_mod: ell divides a");
    return pow_mod(a, (ell - 1) / 2, ell) == 1;
}

inline bool sqrt_q_fixed(const PrimePower& q, std::int64_t ell) { return is_square_mod(q.value(), ell); }
inline bool sqrt_minus_q_fixed(const PrimePower& q, std::int64_t ell) { return is_square_mod(-q.value(), ell); }

/// Smallest generator of (Z/ell)^x.
inline std::int64_t primitive_root(std::int64_t ell) {
    detail::require_odd_prime(ell);
    std::vector<std::int64_t> primes;
    std::int64_t m = ell - 1;
    for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);
    for (std::int64_t g = 2; g < ell; ++g) {
        bool ok = true;
        for (std::int64_t p : primes)
            if (pow_mod(g, (ell - 1) / p, ell) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;  // ell == 2 is excluded above
}

/// H_ell at modulus n: k = ell^e on the ell'-part, anything on the ell-part.
inline GaloisSubgroup hell_subgroup(std::int64_t ell, std::int64_t n) {
    detail::require_odd_prime(ell);
    if (n < 1) throw std::invalid_argument("hell_subgroup: modulus must be positive");
    const std::int64_t nprime = n / prime_part(n, ell);
    std::set<std::int64_t> powers;
    std::int64_t x = 1 % nprime;
    while (powers.insert(x).second) x = (x * (ell % nprime)) % nprime;
    std::vector<std::int64_t> res;
    for (std::int64_t k : unit_residues(n))
        if (powers.count(k % nprime)) res.push_back(k);
    return GaloisSubgroup(n, res);
}

/// H_[d] at modulus n: k = 1 mod d.
inline GaloisSubgroup hd_subgroup(std::int64_t d, std::int64_t n) {
    if (d < 1 || n < 1 || n % d != 0) throw std::invalid_argument("hd_subgroup: d must divide n");
    std::vector<std::int64_t> res;
    for (std::int64_t k : unit_residues(n))
        if (k % d == 1 % d) res.push_back(k);
    return GaloisSubgroup(n, res);
}

/// Does X^r - zeta_a have a zero in Q_ell.  Tested on an explicit u of order a in F_ell.
inline bool root_exists_in_Qell(std::int64_t r, std::int64_t a, std::int64_t ell) {
    detail::require_odd_prime(ell);
    if (r < 1 || a < 1) throw std::invalid_argument("root_exists_in_Qell: r and a must be positive");
    detail::require_coprime(r, ell, "root_exists_in_Qell: ell divides r");
    if ((ell - 1) % a != 0) throw std::invalid_argument("root_exists_in_Qell: a must divide ell-1");
    const std::int64_t u = pow_mod(primitive_root(ell), (ell - 1) / a, ell);
    return pow_mod(u, (ell - 1) / std::gcd(r, ell - 1), ell) == 1;
}

/// Does X^r - b have a zero in Q_ell (b a unit).
inline bool root_exists_for_integer(std::int64_t r, std::int64_t b, std::int64_t ell) {
    detail::require_odd_prime(ell);
    if (r < 1) throw std::invalid_argument("root_exists_for_integer: r must be positive");
    detail::require_coprime(r, ell, "root_exists_for_integer: ell divides r");
    detail::require_coprime(b, ell, "root_exists_for_integer: ell divides b");
    return pow_mod(b, (ell - 1) / std::gcd(r, ell - 1), ell) == 1;
}

/// r = ell^v * r' with ell not dividing r'.
inline std::pair<int, std::int64_t> split_ell(std::int64_t r, std::int64_t ell) {
    int v = 0;
    while (r % ell == 0) {
        r /= ell;
        ++v;
    }
    return {v, r};
}

/// X^r - zeta_a over Q_ell for any r >= 1.  Raising to the ell-th power is a
/// bijection on the (ell-1)-th roots of unity, so ell can be stripped from r.
inline bool root_exists_in_Qell_any_r(std::int64_t r, std::int64_t a, std::int64_t ell) {
    detail::require_odd_prime(ell);
    if (r < 1) throw std::invalid_argument("root_exists_in_Qell_any_r: r must be positive");
    return root_exists_in_Qell(split_ell(r, ell).second, a, ell);
}

/// X^r - b over Q_ell for a unit b and any r >= 1.  With r = ell^v r' the r-th
/// powers of Z_ell^x are mu_{ell-1}^{r'} x (1 + ell^{v+1} Z_ell), so b needs to
/// be an r'-th power mod ell and b^{ell-1} = 1 mod ell^{v+1}.  Only b mod
/// ell^{v+1} matters.
inline bool unit_root_exists_padic(std::int64_t r, std::int64_t b, std::int64_t ell) {
    detail::require_odd_prime(ell);
    if (r < 1) throw std::invalid_argument("unit_root_exists_padic: r must be positive");
    detail::require_coprime(b, ell, "unit_root_exists_padic: ell divides b");
    const auto [v, rp] = split_ell(r, ell);
    const std::int64_t M = ipow(ell, v + 1);
    if (pow_mod(mod_floor(b, ell), (ell - 1) / std::gcd(rp, ell - 1), ell) != 1) return false;
    return pow_mod(mod_floor(b, M), ell - 1, M) == 1;
}

/// Root condition for the central product of the relative Weyl group with <F_0>.
/// d must be d_ell(p^r0).
inline bool central_product_splits(int delta, std::int64_t d, std::int64_t r0, std::int64_t ell, std::int64_t p) {
    if (delta < 1 || delta > 3) throw std::invalid_argument("central_product_splits: delta must be 1, 2 or 3");
    if (r0 < 1) throw std::invalid_argument("central_product_splits: r0 must be positive");
    if (d != mult_order(pow_mod(p, r0, ell), ell))
        throw std::invalid_argument("central_product_splits: d is not d_ell(p^r0)");
    const std::int64_t d0 = std::lcm(static_cast<std::int64_t>(delta), d);
    return root_exists_in_Qell(r0 * delta, d0 / delta, ell);
}

}  // namespace galrep
