#pragma once

// Integer polynomials in q with arbitrary-precision coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "partitions.hpp"

namespace galrep {

using BigInt = boost::multiprecision::cpp_int;

class QPolynomial {
   public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<long long> coeffs) {
        for (long long x : coeffs) c_.emplace_back(x);
        trim();
    }
    static QPolynomial constant(const BigInt& a) { return QPolynomial(std::vector<BigInt>{a}); }
    /// q^k
    static QPolynomial monomial(int k, const BigInt& a = 1) {
        std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
        c.back() = a;
        return QPolynomial(std::move(c));
    }

    const std::vector<BigInt>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    BigInt evaluate(const BigInt& x) const {
        BigInt r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return QPolynomial(std::move(r));
    }
    QPolynomial operator-() const {
        QPolynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return QPolynomial(std::move(r));
    }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    /// Division with remainder by a polynomial with leading coefficient +-1.
    /// Returns false if the divisor is not unit-leading and the division is not exact over Z.
    static bool divmod(const QPolynomial& a, const QPolynomial& b, QPolynomial& quot, QPolynomial& rem) {
        if (b.is_zero()) throw std::domain_error("QPolynomial: division by zero");
        std::vector<BigInt> r = a.c_;
        const std::size_t db = b.c_.size() - 1;
        const BigInt& lead = b.c_.back();
        std::vector<BigInt> q(r.size() > db ? r.size() - db : 0);
        for (std::size_t i = r.size(); i-- > db;) {
            if (r[i] == 0) continue;
            if (r[i] % lead != 0) return false;
            BigInt f = r[i] / lead;
            q[i - db] = f;
            for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
        }
        quot = QPolynomial(std::move(q));
        rem = QPolynomial(std::move(r));
        return true;
    }
    /// Exact quotient; throws if b does not divide a.
    friend QPolynomial operator/(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial q, r;
        if (!divmod(a, b, q, r) || !r.is_zero()) throw std::domain_error("QPolynomial: inexact division");
        return q;
    }
    bool divisible_by(const QPolynomial& b) const {
        QPolynomial q, r;
        return divmod(*this, b, q, r) && r.is_zero();
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Descending powers, e.g. "q^2 + q".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            BigInt a = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
            os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
            first = false;
            if (i == 0 || a != 1) os << a;
            if (i > 0) os << (a != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// Phi_d by peeling the proper-divisor factors off q^d - 1.
inline QPolynomial cyclotomic_poly(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be positive");
    static std::mutex mu;
    static std::map<int, QPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    QPolynomial p = QPolynomial::monomial(d) - QPolynomial{1};
    for (std::int64_t e : divisors(d))
        if (e < d) p = p / cyclotomic_poly(static_cast<int>(e));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, p);
    return p;
}

inline int phi_d_valuation(QPolynomial P, int d) {
    if (P.is_zero()) throw std::invalid_argument("phi_d_valuation: zero polynomial");
    const QPolynomial phi = cyclotomic_poly(d);
    int k = 0;
    QPolynomial q, r;
    while (QPolynomial::divmod(P, phi, q, r) && r.is_zero()) {
        P = q;
        ++k;
    }
    return k;
}

/// Unipotent degree of GL_n for lambda: q^{n(lambda)} prod_i (q^i - 1) / prod_hooks (q^h - 1).
inline QPolynomial generic_degree_typeA(const Partition& la) {
    const int n = la.size();
    if (n < 1) throw std::invalid_argument("generic_degree_typeA: partition of n >= 1 required");
    QPolynomial num = QPolynomial::monomial(la.n_statistic());
    for (int i = 1; i <= n; ++i) num *= QPolynomial::monomial(i) - QPolynomial{1};
    QPolynomial den{1};
    for (int h : la.hook_lengths()) den *= QPolynomial::monomial(h) - QPolynomial{1};
    return num / den;
}

/// Definition of UCh_{[Phi_d]'} in type A: generic degree prime to Phi_d.
inline bool in_uch_phid_prime_typeA(const Partition& la, int d) {
    if (d < 1) throw std::invalid_argument("in_uch_phid_prime_typeA: d must be positive");
    return phi_d_valuation(generic_degree_typeA(la), d) == 0;
}

}  // namespace galrep
