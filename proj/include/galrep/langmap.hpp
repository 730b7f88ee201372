#pragma once

// Torus-level Lang map for SL_n over F_q, q = p^e.
//
// F_{p^2} = F_p[t]/(t^2 - g), g the least quadratic non-residue mod p; for
// p = 2 the modulus is t^2 + t + 1.  Elements of F_p are those with b = 0.
// All constructed square roots of k in F_p lie in F_{p^2}, so that one field
// serves every q = p^e.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "numtheory.hpp"

namespace galrep {

class Fp2 {
   public:
    Fp2() = default;
    Fp2(std::int64_t p, std::int64_t a, std::int64_t b = 0) : p_(p), a_(mod_floor(a, p)), b_(mod_floor(b, p)) {
        if (!is_prime(p)) throw std::invalid_argument("Fp2: p must be prime");
    }

    /// Defining constant g (t^2 = g) for odd p.
    static std::int64_t non_residue(std::int64_t p) {
        for (std::int64_t g = 2; g < p; ++g)
            if (pow_mod(g, (p - 1) / 2, p) == p - 1) return g;
        throw std::logic_error("Fp2: no non-residue");
    }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool in_prime_field() const noexcept { return b_ == 0; }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) { return Fp2(x.p_, x.a_ + y.a_, x.b_ + y.b_); }
    friend Fp2 operator-(const Fp2& x) { return Fp2(x.p_, -x.a_, -x.b_); }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        if (x.p_ != y.p_) throw std::invalid_argument("Fp2: characteristic mismatch");
        const std::int64_t p = x.p_;
        const std::int64_t ac = x.a_ * y.a_ % p, bd = x.b_ * y.b_ % p, cross = (x.a_ * y.b_ + x.b_ * y.a_) % p;
        if (p == 2) return Fp2(p, ac + bd, cross + bd);  // t^2 = t + 1
        return Fp2(p, ac + bd * non_residue_cached(p), cross);
    }
    friend bool operator==(const Fp2&, const Fp2&) = default;

    Fp2 pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Fp2 r(p_, 1), x = *this;
        while (e) {
            if (e & 1) r = r * x;
            x = x * x;
            e >>= 1;
        }
        return r;
    }
    Fp2 inverse() const {
        if (is_zero()) throw std::domain_error("Fp2: inverse of zero");
        return pow(p_ * p_ - 2);
    }

    std::string to_string() const {
        if (b_ == 0) return std::to_string(a_);
        std::string s = a_ ? std::to_string(a_) + " + " : "";
        return s + (b_ == 1 ? "" : std::to_string(b_) + "*") + "t";
    }

   private:
    static std::int64_t non_residue_cached(std::int64_t p) {
        thread_local std::int64_t last_p = 0, last_g = 0;
        if (p != last_p) {
            last_p = p;
            last_g = non_residue(p);
        }
        return last_g;
    }
    std::int64_t p_ = 2, a_ = 0, b_ = 0;
};

/// All square roots of k in F_{p^2}, by exhaustive search.
inline std::vector<Fp2> sqrt_in_fp2(std::int64_t k, std::int64_t p) {
    const Fp2 target(p, k);
    std::vector<Fp2> out;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b) {
            Fp2 c(p, a, b);
            if (c * c == target) out.push_back(c);
        }
    return out;
}

/// Jacobi symbol (k/q); 1 when q is a power of 2.
inline int jacobi_symbol(std::int64_t k, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("jacobi_symbol: q must be positive");
    if (q % 2 == 0) {
        if ((q & (q - 1)) != 0) throw std::invalid_argument("jacobi_symbol: even q must be a power of 2");
        return 1;
    }
    if (std::gcd(mod_floor(k, q), q) != 1) throw std::invalid_argument("jacobi_symbol: k and q not coprime");
    std::int64_t a = mod_floor(k, q), n = q;
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

struct DiagonalTorusElement {
    std::vector<Fp2> entries;

    static DiagonalTorusElement scalar(std::size_t n, const Fp2& x) { return {std::vector<Fp2>(n, x)}; }
    Fp2 det() const {
        Fp2 d(entries.at(0).p(), 1);
        for (auto& e : entries) d = d * e;
        return d;
    }
    friend bool operator==(const DiagonalTorusElement&, const DiagonalTorusElement&) = default;
    std::string to_string() const {
        std::string s = "diag(";
        for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].to_string();
        return s + ")";
    }
};

/// lambda(c) = diag(c^{n-1}, c^{n-3}, ..., c^{-(n-1)})
inline DiagonalTorusElement principal_cochar_value(int n, const Fp2& c) {
    if (n < 2) throw std::invalid_argument("principal_cochar_value: n must be at least 2");
    if (c.is_zero()) throw std::invalid_argument("principal_cochar_value: c must be nonzero");
    DiagonalTorusElement t;
    for (int i = 0; i < n; ++i) t.entries.push_back(c.pow(n - 1 - 2 * i));
    if (t.det() != Fp2(c.p(), 1)) throw std::logic_error("principal_cochar_value: determinant is not 1");
    return t;
}

/// t^{-1} F(t), F the q-power Frobenius.
inline DiagonalTorusElement lang_image(const DiagonalTorusElement& t, std::int64_t q) {
    DiagonalTorusElement r;
    for (auto& x : t.entries) r.entries.push_back(x.inverse() * x.pow(q));
    return r;
}

struct LangImageResult {
    int n = 2;
    std::int64_t p = 2, k = 1, q = 2;
    int e = 1;
    Fp2 c;
    DiagonalTorusElement lang, expected;
    bool holds = false;    // L(t) = (k/q)^{n-1} Id
    bool central = false;  // L(t) in {Id, (-1)^{n-1} Id}
    bool key_identity = false;  // c^{2(q-1)} = 1
    bool entrywise = false;     // L(t) equals the entrywise (q-1)-th power
};

inline LangImageResult verify_cor55a_detail(int n, std::int64_t p, int e, std::int64_t k) {
    if (!is_prime(p)) throw std::invalid_argument("verify_cor55a: p must be prime");
    if (e < 1) throw std::invalid_argument("verify_cor55a: e must be positive");
    if (mod_floor(k, p) == 0) throw std::invalid_argument("verify_cor55a: k must be a unit mod p");
    LangImageResult R;
    R.n = n;
    R.p = p;
    R.e = e;
    R.k = k;
    R.q = ipow(p, e);
    auto roots = sqrt_in_fp2(k, p);
    if (roots.empty()) throw std::logic_error("verify_cor55a: no square root of k in F_{p^2}");
    R.c = roots.front();
    const auto t = principal_cochar_value(n, R.c);
    R.lang = lang_image(t, R.q);
    const Fp2 one(p, 1);
    const int j = jacobi_symbol(k, R.q);
    Fp2 s(p, 1);
    for (int i = 0; i < n - 1; ++i) s = s * Fp2(p, j);
    R.expected = DiagonalTorusElement::scalar(static_cast<std::size_t>(n), s);
    R.holds = R.lang == R.expected;
    const Fp2 z = n % 2 ? one : Fp2(p, -1);
    R.central = R.lang == DiagonalTorusElement::scalar(static_cast<std::size_t>(n), one) ||
                R.lang == DiagonalTorusElement::scalar(static_cast<std::size_t>(n), z);
    R.key_identity = R.c.pow(2 * (R.q - 1)) == one;
    DiagonalTorusElement pw;
    for (auto& x : t.entries) pw.entries.push_back(x.pow(R.q - 1));
    R.entrywise = pw == R.lang;
    return R;
}

inline bool verify_cor55a(int n, std::int64_t p, int e, std::int64_t k) {
    auto R = verify_cor55a_detail(n, p, e, k);
    return R.holds && R.central && R.key_identity && R.entrywise;
}

}  // namespace galrep
