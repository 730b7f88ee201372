#pragma once

// Exact character tables of small groups by simultaneous diagonalisation of
// the class matrices over a prime field, then lifting each value to Q(zeta_e)
// through its eigenvalue multiplicities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "finite_group.hpp"
#include "numtheory.hpp"

namespace galrep {

/// Fixed by every k = 1 mod d acting on the field of x (moduli reconciled by lcm).
inline bool is_hd_fixed(const CyclotomicNumber& x, std::int64_t d) {
    if (x.is_rational()) return true;
    const std::int64_t n = x.order(), N = std::lcm(n, d);
    const GaloisSubgroup H = hd_subgroup(d, N);
    for (std::int64_t k : H.residues())
        if (x.galois(k % n) != x) return false;
    return true;
}

struct CharacterTable {
    std::int64_t group_order = 0;
    std::int64_t exponent = 1;
    std::vector<std::int64_t> class_sizes;
    std::vector<std::int64_t> class_orders;
    std::vector<std::size_t> class_reps;     // element index of a representative
    std::vector<std::size_t> inverse_class;  // class of g^-1
    std::vector<int> class_of;               // element index -> class
    std::vector<std::vector<CyclotomicNumber>> values;  // [character][class]

    std::size_t num_classes() const { return class_sizes.size(); }
    std::size_t num_characters() const { return values.size(); }
    std::int64_t degree(std::size_t chi) const { return values[chi][0].rational_value().num(); }
    std::vector<std::int64_t> degrees() const {
        std::vector<std::int64_t> d;
        for (std::size_t i = 0; i < values.size(); ++i) d.push_back(degree(i));
        return d;
    }

    std::int64_t conductor(std::size_t chi) const {
        std::int64_t c = 1;
        for (const auto& v : values[chi]) c = std::lcm(c, v.conductor());
        return c;
    }
    bool hd_fixed(std::size_t chi, std::int64_t d) const {
        for (const auto& v : values[chi])
            if (!is_hd_fixed(v, d)) return false;
        return true;
    }

    /// Row and column orthogonality plus sum of squared degrees; message on failure.
    bool check_orthogonality(std::string* why = nullptr) const {
        auto fail = [&](const std::string& m) {
            if (why) *why = m;
            return false;
        };
        const std::size_t r = num_classes();
        if (values.size() != r) return fail("number of characters differs from number of classes");
        std::int64_t sq = 0;
        for (std::size_t i = 0; i < r; ++i) sq += degree(i) * degree(i);
        if (sq != group_order) return fail("sum of squared degrees is not the group order");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                CyclotomicNumber s(exponent);
                for (std::size_t k = 0; k < r; ++k)
                    s += Rational(class_sizes[k]) * (values[i][k] * values[j][inverse_class[k]]);
                if (s != CyclotomicNumber(exponent, Rational(i == j ? group_order : 0)))
                    return fail("row orthogonality fails");
            }
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t l = k; l < r; ++l) {
                CyclotomicNumber s(exponent);
                for (std::size_t i = 0; i < r; ++i) s += values[i][k] * values[i][inverse_class[l]];
                if (s != CyclotomicNumber(exponent, Rational(k == l ? group_order / class_sizes[k] : 0)))
                    return fail("column orthogonality fails");
            }
        return true;
    }

    /// (1/|G|) sum |C_k| a(g_k) conj b(g_k) for class functions a, b.
    CyclotomicNumber inner_product(const std::vector<CyclotomicNumber>& a, const std::vector<CyclotomicNumber>& b) const {
        CyclotomicNumber s(exponent);
        for (std::size_t k = 0; k < num_classes(); ++k) s += Rational(class_sizes[k]) * (a[k] * b[k].conj());
        return Rational(1, group_order) * s;
    }
};

namespace detail {

using ModMat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) { return pow_mod(mod_floor(a, p), p - 2, p); }

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref_mod(ModMat& A, std::int64_t p, std::size_t ncols) {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < A.size(); ++col) {
        std::size_t sel = row;
        while (sel < A.size() && A[sel][col] == 0) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[sel], A[row]);
        std::int64_t iv = inv_mod(A[row][col], p);
        for (auto& x : A[row]) x = x * iv % p;
        for (std::size_t r2 = 0; r2 < A.size(); ++r2) {
            if (r2 == row || A[r2][col] == 0) continue;
            std::int64_t f = A[r2][col];
            for (std::size_t c = 0; c < A[r2].size(); ++c) A[r2][c] = mod_floor(A[r2][c] - f * A[row][c], p);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

// Null space of a square matrix, as column vectors.
inline std::vector<std::vector<std::int64_t>> kernel_mod(ModMat A, std::int64_t p) {
    const std::size_t n = A.empty() ? 0 : A[0].size();
    auto piv = rref_mod(A, p, n);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::int64_t> v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = mod_floor(-A[r][f], p);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::int64_t dixon_prime(std::int64_t e, std::int64_t order) {
    const double bound = 2.0 * std::sqrt(static_cast<double>(order));
    for (std::int64_t p = e + 1;; p += e)
        if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

}  // namespace detail

inline CharacterTable dixon_character_table(const FiniteGroup& G) {
    using detail::ModMat;
    CharacterTable T;
    const auto classes = G.conjugacy_classes();
    const std::size_t r = classes.size(), N = G.size();
    T.group_order = static_cast<std::int64_t>(N);
    T.class_of.assign(N, -1);
    for (std::size_t k = 0; k < r; ++k) {
        for (auto x : classes[k]) T.class_of[x] = static_cast<int>(k);
        T.class_sizes.push_back(static_cast<std::int64_t>(classes[k].size()));
        T.class_reps.push_back(classes[k].front());
        T.class_orders.push_back(G.order_of(classes[k].front()));
    }
    std::vector<std::size_t> inv(N);
    for (std::size_t x = 0; x < N; ++x) inv[x] = G.inv(x);
    for (std::size_t k = 0; k < r; ++k) T.inverse_class.push_back(static_cast<std::size_t>(T.class_of[inv[T.class_reps[k]]]));
    T.exponent = 1;
    for (auto o : T.class_orders) T.exponent = std::lcm(T.exponent, o);
    const std::int64_t e = T.exponent, p = detail::dixon_prime(e, T.group_order);

    // a[j][i][k] = #{x in C_j : x^-1 g_k in C_i}
    std::vector<ModMat> M(r, ModMat(r, std::vector<std::int64_t>(r, 0)));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t x = 0; x < N; ++x) {
            std::size_t y = G.mul(inv[x], T.class_reps[k]);
            ++M[static_cast<std::size_t>(T.class_of[x])][static_cast<std::size_t>(T.class_of[y])][k];
        }
    for (auto& m : M)
        for (auto& row : m)
            for (auto& v : row) v %= p;

    // common eigenvectors: split subspaces until every piece is a line
    using Basis = std::vector<std::vector<std::int64_t>>;  // list of column vectors
    std::vector<Basis> spaces;
    {
        Basis id;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::int64_t> v(r, 0);
            v[i] = 1;
            id.push_back(v);
        }
        spaces.push_back(id);
    }
    for (std::size_t j = 1; j < r; ++j) {
        std::vector<Basis> next;
        for (auto& B : spaces) {
            const std::size_t s = B.size();
            if (s == 1) {
                next.push_back(B);
                continue;
            }
            // restricted matrix A with M_j B = B A
            ModMat aug(r, std::vector<std::int64_t>(2 * s, 0));
            for (std::size_t c = 0; c < s; ++c) {
                for (std::size_t i = 0; i < r; ++i) {
                    aug[i][c] = B[c][i];
                    std::int64_t acc = 0;
                    for (std::size_t k = 0; k < r; ++k) acc = (acc + M[j][i][k] * B[c][k]) % p;
                    aug[i][s + c] = acc;
                }
            }
            auto piv = detail::rref_mod(aug, p, s);
            if (piv.size() != s) throw std::logic_error("dixon: degenerate subspace basis");
            ModMat A(s, std::vector<std::int64_t>(s));
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = 0; b < s; ++b) A[a][b] = aug[a][s + b];
            std::size_t found = 0;
            for (std::int64_t lam = 0; lam < p && found < s; ++lam) {
                ModMat Al = A;
                for (std::size_t a = 0; a < s; ++a) Al[a][a] = mod_floor(Al[a][a] - lam, p);
                auto ker = detail::kernel_mod(Al, p);
                if (ker.empty()) continue;
                Basis piece;
                for (auto& cvec : ker) {
                    std::vector<std::int64_t> v(r, 0);
                    for (std::size_t b = 0; b < s; ++b)
                        for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + B[b][i] * cvec[b]) % p;
                    piece.push_back(v);
                }
                found += piece.size();
                next.push_back(std::move(piece));
            }
            if (found != s) throw std::logic_error("dixon: class matrix not diagonalisable mod p");
        }
        spaces = std::move(next);
    }
    for (auto& B : spaces)
        if (B.size() != 1) throw std::logic_error("dixon: class matrices do not separate characters");
    if (spaces.size() != r) throw std::logic_error("dixon: wrong number of characters");

    // power maps
    std::vector<std::vector<std::size_t>> powcls(r);
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t x = G.identity();
        for (std::int64_t l = 0; l < T.class_orders[k]; ++l) {
            powcls[k].push_back(static_cast<std::size_t>(T.class_of[x]));
            x = G.mul(x, T.class_reps[k]);
        }
    }
    const std::int64_t z = pow_mod(primitive_root(p), (p - 1) / e, p);
    std::int64_t maxdeg = 1;
    while ((maxdeg + 1) * (maxdeg + 1) <= T.group_order) ++maxdeg;

    for (auto& B : spaces) {
        std::vector<std::int64_t> w = B[0];
        std::int64_t w0inv = detail::inv_mod(w[0], p);
        for (auto& x : w) x = x * w0inv % p;
        std::int64_t S = 0;
        for (std::size_t k = 0; k < r; ++k)
            S = (S + w[k] * w[T.inverse_class[k]] % p * detail::inv_mod(T.class_sizes[k] % p, p)) % p;
        std::int64_t target = T.group_order % p * detail::inv_mod(S, p) % p, deg = -1;
        for (std::int64_t d = 1; d <= maxdeg; ++d)
            if (d * d % p == target) {
                deg = d;
                break;
            }
        if (deg < 0) throw std::logic_error("dixon: no degree found");
        std::vector<std::int64_t> chi(r);
        for (std::size_t k = 0; k < r; ++k)
            chi[k] = w[k] * (deg % p) % p * detail::inv_mod(T.class_sizes[k] % p, p) % p;
        std::vector<CyclotomicNumber> row;
        for (std::size_t k = 0; k < r; ++k) {
            const std::int64_t o = T.class_orders[k], zo = pow_mod(z, e / o, p), oinv = detail::inv_mod(o % p, p);
            std::vector<std::pair<std::int64_t, Rational>> terms;
            std::int64_t total = 0;
            for (std::int64_t t = 0; t < o; ++t) {
                std::int64_t acc = 0;
                for (std::int64_t l = 0; l < o; ++l)
                    acc = (acc + chi[powcls[k][static_cast<std::size_t>(l)]] * pow_mod(zo, mod_floor(-t * l, o), p)) % p;
                std::int64_t mt = acc * oinv % p;
                if (mt > deg) throw std::logic_error("dixon: eigenvalue multiplicity out of range");
                total += mt;
                if (mt) terms.emplace_back(t * (e / o), Rational(mt));
            }
            if (total != deg) throw std::logic_error("dixon: multiplicities do not sum to the degree");
            row.push_back(CyclotomicNumber::from_terms(e, terms));
        }
        T.values.push_back(std::move(row));
    }
    auto key = [](const std::vector<CyclotomicNumber>& row) {
        std::vector<std::vector<Rational>> k;
        for (auto& v : row) k.push_back(v.basis_coefficients());
        return k;
    };
    std::sort(T.values.begin(), T.values.end(), [&](const auto& a, const auto& b) {
        auto da = a[0].rational_value(), db = b[0].rational_value();
        if (da != db) return da < db;
        return key(a) > key(b);
    });
    return T;
}

}  // namespace galrep
