#pragma once

// Exact elements of Q(zeta_n).
//
// Storage is the power basis 1, z, ..., z^{phi(n)-1}: any expression in z is
// reduced modulo the n-th cyclotomic polynomial, so equal field elements have
// identical coefficient vectors.  Trailing zeros are trimmed and zero is empty.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "rational.hpp"

namespace galrep {

namespace detail {

using IntPoly = std::vector<std::int64_t>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
inline IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("poly_div_exact: degree");
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

// Phi_n as int64 coefficients, lowest degree first, via prod (t^e - 1)^{mu(n/e)}.
inline IntPoly compute_cyclotomic(std::int64_t n) {
    IntPoly num{1}, den{1};
    for (std::int64_t e : divisors(n)) {
        int mu = mobius(n / e);
        if (mu == 0) continue;
        IntPoly f(static_cast<std::size_t>(e) + 1, 0);
        f[0] = -1;
        f[static_cast<std::size_t>(e)] = 1;
        if (mu == 1)
            num = poly_mul(num, f);
        else
            den = poly_mul(den, f);
    }
    // den is monic up to sign; normalise so division by a monic works
    if (den.back() < 0)
        for (auto& c : den) c = -c;
    IntPoly q = poly_div_exact(num, den);
    if (q.back() < 0)
        for (auto& c : q) c = -c;
    return q;
}

inline const IntPoly& cyclotomic_coeffs(std::int64_t n) {
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<const IntPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_shared<const IntPoly>(compute_cyclotomic(n))).first;
    return *it->second;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("galrep: cyclotomic overflow");
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("galrep: cyclotomic overflow");
    return r;
}

// Reduce a polynomial in z modulo Phi_n in place, leaving phi(n) coefficients.
template <class T>
void reduce_mod_cyclotomic(std::vector<T>& v, std::int64_t n) {
    const IntPoly& phi = cyclotomic_coeffs(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > deg;) {
        T c = v[i];
        if (c == T(0)) continue;
        v[i] = T(0);
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi[j] == 0) continue;
            if constexpr (std::is_same_v<T, std::int64_t>)
                v[i - deg + j] = checked_sub(v[i - deg + j], checked_mul(c, phi[j]));
            else
                v[i - deg + j] -= c * T(phi[j]);
        }
    }
    if (v.size() > deg) v.resize(deg);
}

}  // namespace detail

class CyclotomicNumber {
   public:
    CyclotomicNumber() = default;  // zero in Q(zeta_1)
    explicit CyclotomicNumber(std::int64_t n) : order_(check_order(n)) {}
    CyclotomicNumber(std::int64_t n, const Rational& r) : order_(check_order(n)) {
        if (!r.is_zero()) coeffs_ = {r};
    }

    /// Sum of c_e * zeta_n^e for an arbitrary exponent vector (index = exponent mod n).
    static CyclotomicNumber from_exponents(std::int64_t n, const std::vector<Rational>& by_exp) {
        std::vector<Rational> v(static_cast<std::size_t>(check_order(n)));
        for (std::size_t e = 0; e < by_exp.size(); ++e) v[e % v.size()] += by_exp[e];
        return from_poly(n, std::move(v));
    }
    static CyclotomicNumber from_exponents(std::int64_t n, const std::vector<std::int64_t>& by_exp) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(check_order(n)), 0);
        for (std::size_t e = 0; e < by_exp.size(); ++e) v[e % v.size()] += by_exp[e];
        return from_poly(n, std::move(v));
    }
    /// Sparse form: pairs (exponent, coefficient), exponents taken mod n.
    static CyclotomicNumber from_terms(std::int64_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
        std::vector<Rational> v(static_cast<std::size_t>(check_order(n)));
        for (const auto& [e, c] : terms) v[static_cast<std::size_t>(mod_floor(e, n))] += c;
        return from_poly(n, std::move(v));
    }

    std::int64_t order() const noexcept { return order_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_rational() const noexcept { return coeffs_.size() <= 1; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("CyclotomicNumber: not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }
    /// Power-basis coefficients, exponent 0 first, trailing zeros trimmed.
    const std::vector<Rational>& basis_coefficients() const noexcept { return coeffs_; }
    /// Nonzero (exponent, coefficient) pairs in the power basis.
    std::vector<std::pair<std::int64_t, Rational>> terms() const {
        std::vector<std::pair<std::int64_t, Rational>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) out.emplace_back(static_cast<std::int64_t>(i), coeffs_[i]);
        return out;
    }

    /// Re-express inside Q(zeta_N) for a multiple N of the current order.
    CyclotomicNumber lift(std::int64_t N) const {
        if (N % order_ != 0) throw std::invalid_argument("CyclotomicNumber::lift: order must divide target");
        if (N == order_) return *this;
        const std::int64_t step = N / order_;
        std::vector<Rational> v(static_cast<std::size_t>(N));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(step)] = coeffs_[i];
        return from_poly(N, std::move(v));
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.order_ != b.order_) {
            std::int64_t n = std::lcm(a.order_, b.order_);
            return a.lift(n) + b.lift(n);
        }
        CyclotomicNumber r(a.order_);
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }
    CyclotomicNumber operator-() const {
        CyclotomicNumber r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.order_ != b.order_) {
            std::int64_t n = std::lcm(a.order_, b.order_);
            return a.lift(n) * b.lift(n);
        }
        if (a.is_zero() || b.is_zero()) return CyclotomicNumber(a.order_);
        if (a.integral() && b.integral()) {
            std::vector<std::int64_t> p(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
            for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
                if (a.coeffs_[i].is_zero()) continue;
                for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                    std::int64_t t = detail::checked_mul(a.coeffs_[i].num(), b.coeffs_[j].num());
                    if (__builtin_add_overflow(p[i + j], t, &p[i + j]))
                        throw std::overflow_error("galrep: cyclotomic overflow");
                }
            }
            return from_poly(a.order_, std::move(p));
        }
        std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_poly(a.order_, std::move(p));
    }
    friend CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& x) {
        if (s.is_zero()) return CyclotomicNumber(x.order_);
        CyclotomicNumber r = x;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    /// Structural equality after lifting to a common order.
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        std::int64_t n = std::lcm(a.order_, b.order_);
        return a.lift(n).coeffs_ == b.lift(n).coeffs_;
    }

    /// Image under zeta_n -> zeta_n^k.
    CyclotomicNumber galois(std::int64_t k) const {
        if (std::gcd(mod_floor(k, order_), order_) != 1 && order_ != 1)
            throw std::invalid_argument("galois_apply: k must be coprime to the order");
        std::int64_t kk = mod_floor(k, order_);
        if (kk == 1 % order_ || is_rational()) return *this;
        std::vector<Rational> v(static_cast<std::size_t>(order_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            v[static_cast<std::size_t>((static_cast<__int128>(i) * kk) % order_)] += coeffs_[i];
        return from_poly(order_, std::move(v));
    }

    /// Complex conjugate (k = -1).
    CyclotomicNumber conj() const { return galois(order_ - 1); }

    /// Product over all Galois conjugates; rational.
    Rational norm() const {
        CyclotomicNumber p(order_, Rational(1));
        for (std::int64_t k : unit_residues(order_)) p *= galois(order_ == 1 ? 1 : k);
        return p.rational_value();
    }

    CyclotomicNumber inverse() const {
        if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
        if (is_rational()) return CyclotomicNumber(order_, Rational(1) / coeffs_[0]);
        // x^{-1} = (prod of the other conjugates) / N(x)
        CyclotomicNumber p(order_, Rational(1));
        for (std::int64_t k : unit_residues(order_))
            if (k != 1) p *= galois(k);
        Rational nrm = (p * *this).rational_value();
        return (Rational(1) / nrm) * p;
    }

    /// Smallest c dividing the order with this element in Q(zeta_c).
    std::int64_t conductor() const {
        if (is_rational()) return 1;
        const auto units = unit_residues(order_);
        for (std::int64_t c : divisors(order_)) {
            bool fixed = true;
            for (std::int64_t k : units) {
                if (k % c != 1 % c) continue;
                if (galois(k) != *this) {
                    fixed = false;
                    break;
                }
            }
            if (fixed) return c;
        }
        return order_;
    }

    /// Same element viewed inside Q(zeta_c), c = conductor().
    CyclotomicNumber minimize() const {
        std::int64_t c = conductor();
        if (c == order_) return *this;
        // solve by trying the reduced embedding: coefficients live on multiples of order/c
        // after a suitable change of basis, so rebuild through the exponent form.
        std::vector<Rational> by_exp = exponent_form();
        const std::int64_t step = order_ / c;
        std::vector<Rational> v(static_cast<std::size_t>(c));
        bool ok = true;
        for (std::size_t e = 0; e < by_exp.size(); ++e) {
            if (by_exp[e].is_zero()) continue;
            if (static_cast<std::int64_t>(e) % step != 0) {
                ok = false;
                break;
            }
            v[e / static_cast<std::size_t>(step)] += by_exp[e];
        }
        if (ok) {
            CyclotomicNumber r = from_poly(c, std::move(v));
            if (r.lift(order_) == *this) return r;
        }
        // fall back to averaging over the subgroup fixing zeta_c (trace form)
        return descend_by_trace(c);
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            bool neg = c < Rational(0);
            Rational a = neg ? -c : c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << a.to_string();
                continue;
            }
            if (a != Rational(1)) os << a.to_string() << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

   private:
    static std::int64_t check_order(std::int64_t n) {
        if (n < 1) throw std::invalid_argument("CyclotomicNumber: order must be positive");
        return n;
    }

    template <class T>
    static CyclotomicNumber from_poly(std::int64_t n, std::vector<T> v) {
        detail::reduce_mod_cyclotomic(v, n);
        CyclotomicNumber r(n);
        r.coeffs_.reserve(v.size());
        for (auto& c : v) r.coeffs_.emplace_back(c);
        r.trim();
        return r;
    }

    bool integral() const noexcept {
        for (const auto& c : coeffs_)
            if (!c.is_integer()) return false;
        return true;
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> exponent_form() const {
        std::vector<Rational> v(static_cast<std::size_t>(order_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
        return v;
    }

    // x lies in Q(zeta_c); write x in the power basis of Q(zeta_c) by linear algebra
    // on the images of zeta_c^j, j < phi(c).
    CyclotomicNumber descend_by_trace(std::int64_t c) const {
        const std::size_t fc = static_cast<std::size_t>(euler_phi(c));
        const std::size_t fn = static_cast<std::size_t>(euler_phi(order_));
        const std::int64_t step = order_ / c;
        // columns: basis images in Q(zeta_n)
        std::vector<std::vector<Rational>> M(fn, std::vector<Rational>(fc + 1));
        for (std::size_t j = 0; j < fc; ++j) {
            CyclotomicNumber z = CyclotomicNumber::from_terms(order_, {{static_cast<std::int64_t>(j) * step, Rational(1)}});
            for (std::size_t i = 0; i < z.coeffs_.size(); ++i) M[i][j] = z.coeffs_[i];
        }
        for (std::size_t i = 0; i < coeffs_.size(); ++i) M[i][fc] = coeffs_[i];
        // Gaussian elimination
        std::size_t row = 0;
        std::vector<std::size_t> pivcol;
        for (std::size_t col = 0; col < fc && row < fn; ++col) {
            std::size_t p = row;
            while (p < fn && M[p][col].is_zero()) ++p;
            if (p == fn) continue;
            std::swap(M[p], M[row]);
            Rational inv = Rational(1) / M[row][col];
            for (auto& e : M[row]) e *= inv;
            for (std::size_t r = 0; r < fn; ++r) {
                if (r == row || M[r][col].is_zero()) continue;
                Rational f = M[r][col];
                for (std::size_t k = col; k <= fc; ++k) M[r][k] -= f * M[row][k];
            }
            pivcol.push_back(col);
            ++row;
        }
        std::vector<Rational> sol(fc);
        for (std::size_t r = 0; r < pivcol.size(); ++r) sol[pivcol[r]] = M[r][fc];
        CyclotomicNumber out(c);
        out.coeffs_ = std::move(sol);
        out.trim();
        return out;
    }

    std::int64_t order_ = 1;
    std::vector<Rational> coeffs_;
};

inline CyclotomicNumber root_of_unity(std::int64_t n, std::int64_t k) {
    return CyclotomicNumber::from_terms(n, {{k, Rational(1)}});
}

inline CyclotomicNumber galois_apply(std::int64_t k, const CyclotomicNumber& x) { return x.galois(k); }

inline std::int64_t conductor(const CyclotomicNumber& x) { return x.conductor(); }

/// A subgroup of (Z/nZ)^x given by its residues.
class GaloisSubgroup {
   public:
    GaloisSubgroup(std::int64_t modulus, std::vector<std::int64_t> residues) : modulus_(modulus) {
        if (modulus < 1) throw std::invalid_argument("GaloisSubgroup: modulus must be positive");
        std::set<std::int64_t> s;
        for (std::int64_t r : residues) {
            std::int64_t k = mod_floor(r, modulus);
            if (modulus > 1 && std::gcd(k, modulus) != 1)
                throw std::invalid_argument("GaloisSubgroup: residue not coprime to modulus");
            s.insert(modulus == 1 ? 0 : k);
        }
        if (!s.count(1 % modulus)) throw std::invalid_argument("GaloisSubgroup: must contain 1");
        for (std::int64_t a : s)
            for (std::int64_t b : s)
                if (!s.count(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % modulus)))
                    throw std::invalid_argument("GaloisSubgroup: not closed under multiplication");
        residues_.assign(s.begin(), s.end());
    }

    static GaloisSubgroup full(std::int64_t n) { return GaloisSubgroup(n, unit_residues(n)); }
    static GaloisSubgroup trivial(std::int64_t n) { return GaloisSubgroup(n, {1 % n}); }

    std::int64_t modulus() const noexcept { return modulus_; }
    const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
    std::size_t size() const noexcept { return residues_.size(); }
    bool contains(std::int64_t k) const {
        return std::binary_search(residues_.begin(), residues_.end(), mod_floor(k, modulus_));
    }

    GaloisSubgroup intersect(const GaloisSubgroup& o) const {
        if (o.modulus_ != modulus_) throw std::invalid_argument("GaloisSubgroup: modulus mismatch");
        std::vector<std::int64_t> out;
        std::set_intersection(residues_.begin(), residues_.end(), o.residues_.begin(), o.residues_.end(),
                              std::back_inserter(out));
        return GaloisSubgroup(modulus_, out);
    }
    bool subset_of(const GaloisSubgroup& o) const {
        if (o.modulus_ != modulus_) throw std::invalid_argument("GaloisSubgroup: modulus mismatch");
        return std::includes(o.residues_.begin(), o.residues_.end(), residues_.begin(), residues_.end());
    }
    /// Image under reduction to a divisor m of the modulus.
    GaloisSubgroup restrict_to(std::int64_t m) const {
        if (m < 1 || modulus_ % m != 0) throw std::invalid_argument("GaloisSubgroup: m must divide modulus");
        std::vector<std::int64_t> out;
        for (std::int64_t k : residues_) out.push_back(k % m);
        return GaloisSubgroup(m, out);
    }
    friend bool operator==(const GaloisSubgroup&, const GaloisSubgroup&) = default;

   private:
    std::int64_t modulus_;
    std::vector<std::int64_t> residues_;
};

inline bool is_fixed_by(const CyclotomicNumber& x, const GaloisSubgroup& H) {
    if (H.modulus() != x.order()) throw std::invalid_argument("is_fixed_by: modulus mismatch");
    for (std::int64_t k : H.residues())
        if (x.galois(H.modulus() == 1 ? 1 : k) != x) return false;
    return true;
}

/// Fixedness for an element whose order divides the subgroup modulus, or vice versa.
inline bool is_fixed_by_any_order(const CyclotomicNumber& x, const GaloisSubgroup& H) {
    std::int64_t n = std::lcm(x.order(), H.modulus());
    if (n == H.modulus()) return is_fixed_by(x.lift(n), H);
    // extend H to modulus n: all units mod n whose reduction lies in H
    std::vector<std::int64_t> res;
    for (std::int64_t k : unit_residues(n))
        if (H.contains(k % H.modulus())) res.push_back(k);
    return is_fixed_by(x.lift(n), GaloisSubgroup(n, res));
}

}  // namespace galrep
