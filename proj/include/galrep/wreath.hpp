#pragma once

// Characters of C_m wr S_a and of its index-2 subgroup G(m,2,a).
//
// Irreducible characters and conjugacy classes are both indexed by m-tuples of
// partitions of total size a.  For a character label the s-th entry is the
// partition attached to the linear character j -> zeta_m^{s j} of C_m; for a
// class label the j-th entry lists the lengths of the cycles of colour j.
//
// Values come from the wreath Murnaghan-Nakayama rule
//   chi^L(g) = sum_s sum_{c-hooks R of L^(s)} (-1)^{ht R} zeta_m^{s j} chi^{L - R}(g')
// where (j, c) is one cycle of g and g' is g with that cycle removed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "dixon.hpp"
#include "finite_group.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"

namespace galrep {

/// m-tuple of partitions.
struct Multipartition {
    std::vector<Partition> parts;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> p) : parts(std::move(p)) {}
    static Multipartition empty(int m) { return Multipartition(std::vector<Partition>(static_cast<std::size_t>(m))); }

    int m() const noexcept { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (auto& p : parts) s += p.size();
        return s;
    }
    const Partition& operator[](std::size_t i) const { return parts[i]; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].to_string();
        return s + ")";
    }
    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
};

using WreathCharLabel = Multipartition;
using WreathClassLabel = Multipartition;

/// All m-tuples of partitions of total size a, in a fixed order.
inline std::vector<Multipartition> multipartitions(int m, int a) {
    if (m < 1) throw std::invalid_argument("multipartitions: m must be positive");
    if (a < 0) throw std::invalid_argument("multipartitions: a must be non-negative");
    std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(a) + 1);
    for (int n = 0; n <= a; ++n) by_size[static_cast<std::size_t>(n)] = partitions_of(n);
    std::vector<Multipartition> out;
    std::vector<Partition> cur(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int slot, int rem) -> void {
        if (slot == m - 1) {
            for (auto& p : by_size[static_cast<std::size_t>(rem)]) {
                cur[static_cast<std::size_t>(slot)] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int n = rem; n >= 0; --n)
            for (auto& p : by_size[static_cast<std::size_t>(n)]) {
                cur[static_cast<std::size_t>(slot)] = p;
                self(self, slot + 1, rem - n);
            }
    };
    rec(rec, 0, a);
    return out;
}

inline std::vector<WreathCharLabel> irr_labels(int m, int a) { return multipartitions(m, a); }

inline std::int64_t wreath_order(int m, int a) { return ipow(m, a) * factorial(a); }

/// prod_{j,c} k_{j,c}! (m c)^{k_{j,c}}
inline std::int64_t wreath_centralizer_order(const WreathClassLabel& cls) {
    const std::int64_t m = cls.m();
    std::int64_t z = 1;
    for (const auto& p : cls.parts) {
        std::map<int, int> mult;
        for (int c : p.parts()) ++mult[c];
        for (auto [c, k] : mult) z *= factorial(k) * ipow(m * c, k);
    }
    return z;
}

inline std::int64_t wreath_class_size(const WreathClassLabel& cls) {
    return wreath_order(cls.m(), cls.size()) / wreath_centralizer_order(cls);
}

/// Class of g^{-1}: colours negated.
inline WreathClassLabel inverse_class(const WreathClassLabel& cls) {
    const int m = cls.m();
    std::vector<Partition> p(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) p[static_cast<std::size_t>((m - j) % m)] = cls.parts[static_cast<std::size_t>(j)];
    return Multipartition(std::move(p));
}

/// Tensor with the linear character (-1)^{total colour}: components shift by m/2.
inline WreathCharLabel twist_label(const WreathCharLabel& L) {
    const int m = L.m();
    if (m % 2) throw std::invalid_argument("twist_label: m must be even");
    std::vector<Partition> p(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) p[static_cast<std::size_t>((s + m / 2) % m)] = L.parts[static_cast<std::size_t>(s)];
    return Multipartition(std::move(p));
}

/// Image of chi^L under zeta_m -> zeta_m^k: component s moves to k s.
inline WreathCharLabel galois_label(const WreathCharLabel& L, std::int64_t k) {
    const int m = L.m();
    std::vector<Partition> p(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) p[static_cast<std::size_t>(mod_floor(k * s, m))] = L.parts[static_cast<std::size_t>(s)];
    return Multipartition(std::move(p));
}

/// chi^L(1) = a! / prod |L^(s)|! * prod f^{L^(s)}
inline std::int64_t wreath_degree(const WreathCharLabel& L) {
    std::int64_t d = factorial(L.size());
    for (auto& p : L.parts) d = d / factorial(p.size()) * hook_length_degree(p);
    return d;
}

namespace detail {

struct HookMove {
    Partition rest;
    int sign;
};

// every c-rim hook of la with its leg-length sign
inline std::vector<HookMove> rim_hooks(const Partition& la, int c) {
    std::vector<HookMove> out;
    BetaSet b = beta_set(la, la.length());
    for (int x : b.beads())
        if (b.can_remove(x, c))
            out.push_back({remove_rim_hook(b, x, c).partition(), b.hook_height(x, c) % 2 ? -1 : 1});
    return out;
}

// direct recursion, peeling cycles from the end of the list
inline std::vector<std::int64_t> mn_recursive(const Multipartition& L, std::vector<std::pair<int, int>>& cycles) {
    const int m = L.m();
    std::vector<std::int64_t> v(static_cast<std::size_t>(m), 0);
    if (cycles.empty()) {
        v[0] = 1;
        return v;
    }
    auto [j, c] = cycles.back();
    cycles.pop_back();
    for (int s = 0; s < m; ++s)
        for (auto& h : rim_hooks(L.parts[static_cast<std::size_t>(s)], c)) {
            Multipartition sub = L;
            sub.parts[static_cast<std::size_t>(s)] = h.rest;
            auto w = mn_recursive(sub, cycles);
            const int shift = (s * j) % m;
            for (int e = 0; e < m; ++e) v[static_cast<std::size_t>((e + shift) % m)] += h.sign * w[static_cast<std::size_t>(e)];
        }
    cycles.emplace_back(j, c);
    return v;
}

inline std::vector<std::pair<int, int>> cycle_list(const WreathClassLabel& cls) {
    std::vector<std::pair<int, int>> cyc;
    for (int j = 0; j < cls.m(); ++j)
        for (int c : cls.parts[static_cast<std::size_t>(j)].parts()) cyc.emplace_back(j, c);
    return cyc;
}

}  // namespace detail

/// Value in the group ring Z[C_m]: entry e is the coefficient of zeta_m^e.
inline std::vector<std::int64_t> char_value_exponents(const WreathCharLabel& L, const WreathClassLabel& cls) {
    if (L.m() != cls.m() || L.size() != cls.size()) throw std::invalid_argument("char_value: inconsistent m or a");
    auto cyc = detail::cycle_list(cls);
    return detail::mn_recursive(L, cyc);
}

inline CyclotomicNumber char_value(const WreathCharLabel& L, const WreathClassLabel& cls, int m) {
    if (L.m() != m) throw std::invalid_argument("char_value: label has wrong number of components");
    return CyclotomicNumber::from_exponents(m, char_value_exponents(L, cls));
}

/// Linear reduction Z[C_m] -> power basis of Q(zeta_m) and the Galois action on it.
class CyclotomicReducer {
   public:
    explicit CyclotomicReducer(int m) : m_(m), phi_(static_cast<int>(euler_phi(m))) {
        for (int e = 0; e < m; ++e) {
            auto z = root_of_unity(m, e).basis_coefficients();
            std::vector<std::int64_t> col(static_cast<std::size_t>(phi_), 0);
            for (std::size_t i = 0; i < z.size(); ++i) col[i] = z[i].num();
            basis_.push_back(col);
        }
        units_ = unit_residues(m);
        for (std::int64_t k : units_) {
            // image of power-basis vector i under k, expressed in the basis
            std::vector<std::vector<std::int64_t>> g(static_cast<std::size_t>(phi_));
            for (int i = 0; i < phi_; ++i) g[static_cast<std::size_t>(i)] = basis_[static_cast<std::size_t>(mod_floor(k * i, m))];
            galois_.push_back(std::move(g));
        }
    }
    int m() const noexcept { return m_; }
    int phi() const noexcept { return phi_; }
    const std::vector<std::int64_t>& units() const noexcept { return units_; }

    std::vector<std::int64_t> reduce(const std::int64_t* v) const {
        std::vector<std::int64_t> r(static_cast<std::size_t>(phi_), 0);
        for (int e = 0; e < m_; ++e)
            if (v[e])
                for (int i = 0; i < phi_; ++i) r[static_cast<std::size_t>(i)] += v[e] * basis_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)];
        return r;
    }
    /// Is the reduced vector fixed by the unit with index u in units().
    bool fixed(const std::vector<std::int64_t>& r, std::size_t u) const {
        std::vector<std::int64_t> img(static_cast<std::size_t>(phi_), 0);
        for (int i = 0; i < phi_; ++i)
            if (r[static_cast<std::size_t>(i)])
                for (int t = 0; t < phi_; ++t) img[static_cast<std::size_t>(t)] += r[static_cast<std::size_t>(i)] * galois_[u][static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        return img == r;
    }
    CyclotomicNumber to_number(const std::vector<std::int64_t>& r) const {
        std::vector<std::pair<std::int64_t, Rational>> t;
        for (int i = 0; i < phi_; ++i)
            if (r[static_cast<std::size_t>(i)]) t.emplace_back(i, Rational(r[static_cast<std::size_t>(i)]));
        return CyclotomicNumber::from_terms(m_, t);
    }

   private:
    int m_, phi_;
    std::vector<std::vector<std::int64_t>> basis_;
    std::vector<std::int64_t> units_;
    std::vector<std::vector<std::vector<std::int64_t>>> galois_;
};

/// Column-at-a-time evaluation of the full character table of C_m wr S_a.
class WreathTable {
   public:
    WreathTable(int m, int a) : m_(m), a_(a) {
        if (m < 1 || a < 0) throw std::invalid_argument("WreathTable: bad parameters");
        for (int t = 0; t <= a; ++t) {
            levels_.push_back(multipartitions(m, t));
            std::map<Multipartition, std::size_t> idx;
            for (std::size_t i = 0; i < levels_.back().size(); ++i) idx.emplace(levels_.back()[i], i);
            index_.push_back(std::move(idx));
        }
        // moves[t][c][i]: (target index at level t-c, colour s, sign)
        moves_.resize(static_cast<std::size_t>(a) + 1);
        for (int t = 1; t <= a; ++t) {
            moves_[static_cast<std::size_t>(t)].resize(static_cast<std::size_t>(t) + 1);
            for (int c = 1; c <= t; ++c) {
                auto& mv = moves_[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
                mv.resize(levels_[static_cast<std::size_t>(t)].size());
                for (std::size_t i = 0; i < levels_[static_cast<std::size_t>(t)].size(); ++i) {
                    const auto& L = levels_[static_cast<std::size_t>(t)][i];
                    for (int s = 0; s < m; ++s)
                        for (auto& h : detail::rim_hooks(L.parts[static_cast<std::size_t>(s)], c)) {
                            Multipartition sub = L;
                            sub.parts[static_cast<std::size_t>(s)] = h.rest;
                            mv[i].push_back({index_[static_cast<std::size_t>(t - c)].at(sub), s, h.sign});
                        }
                }
            }
        }
    }

    int m() const noexcept { return m_; }
    int a() const noexcept { return a_; }
    const std::vector<WreathCharLabel>& labels() const { return levels_.back(); }
    const std::vector<WreathClassLabel>& classes() const { return levels_.back(); }
    std::size_t size() const { return levels_.back().size(); }
    std::size_t label_index(const WreathCharLabel& L) const { return index_.back().at(L); }

    /// Values of every character at one class, flattened [label * m + e].
    std::vector<std::int64_t> column(const WreathClassLabel& cls) const {
        if (cls.m() != m_ || cls.size() != a_) throw std::invalid_argument("WreathTable::column: class has wrong shape");
        const std::size_t m = static_cast<std::size_t>(m_);
        std::vector<std::int64_t> cur(m, 0);
        cur[0] = 1;
        int t = 0;
        for (auto [j, c] : detail::cycle_list(cls)) {
            const int nt = t + c;
            const auto& mv = moves_[static_cast<std::size_t>(nt)][static_cast<std::size_t>(c)];
            std::vector<std::int64_t> nxt(levels_[static_cast<std::size_t>(nt)].size() * m, 0);
            for (std::size_t i = 0; i < mv.size(); ++i) {
                std::int64_t* out = &nxt[i * m];
                for (const auto& x : mv[i]) {
                    const std::int64_t* in = &cur[x.target * m];
                    const std::size_t shift = static_cast<std::size_t>((x.colour * j) % m_);
                    for (std::size_t e = 0; e < m; ++e) {
                        std::size_t to = e + shift;
                        if (to >= m) to -= m;
                        out[to] += x.sign * in[e];
                    }
                }
            }
            cur = std::move(nxt);
            t = nt;
        }
        return cur;
    }

   private:
    struct Move {
        std::size_t target;
        int colour;
        int sign;
    };
    int m_, a_;
    std::vector<std::vector<Multipartition>> levels_;
    std::vector<std::map<Multipartition, std::size_t>> index_;
    std::vector<std::vector<std::vector<std::vector<Move>>>> moves_;
};

/// Per-character stabiliser in (Z/m)^x, from the values.  Bit u set means
/// units()[u] fixes every value.
struct WreathGaloisSummary {
    int m = 1, a = 0;
    std::vector<WreathCharLabel> labels;
    std::vector<std::int64_t> units;
    std::vector<std::vector<bool>> fixes;  // [label][unit index]
    std::vector<std::int64_t> degrees;

    /// Smallest c | m with every k = 1 mod c fixing the character.
    std::int64_t conductor(std::size_t i) const {
        for (std::int64_t c : divisors(m)) {
            bool ok = true;
            for (std::size_t u = 0; u < units.size() && ok; ++u)
                if (units[u] % c == 1 % c && !fixes[i][u]) ok = false;
            if (ok) return c;
        }
        return m;
    }
    /// All k = 1 mod d, reduced mod m, fix the character.
    bool hd_fixed(std::size_t i, std::int64_t d) const {
        const std::int64_t N = std::lcm(static_cast<std::int64_t>(m), d);
        const GaloisSubgroup H = hd_subgroup(d, N);
        for (std::int64_t k : H.residues()) {
            std::int64_t km = k % m;
            if (m == 1) continue;
            auto it = std::find(units.begin(), units.end(), km);
            if (!fixes[i][static_cast<std::size_t>(it - units.begin())]) return false;
        }
        return true;
    }
};

inline WreathGaloisSummary wreath_galois_summary(const WreathTable& T) {
    CyclotomicReducer R(T.m());
    WreathGaloisSummary S;
    S.m = T.m();
    S.a = T.a();
    S.labels = T.labels();
    S.units = R.units();
    const std::size_t n = T.size(), nu = S.units.size(), m = static_cast<std::size_t>(T.m());
    S.fixes.assign(n, std::vector<bool>(nu, true));
    S.degrees.assign(n, 0);
    std::vector<std::size_t> alive(n, nu);
    for (const auto& cls : T.classes()) {
        auto col = T.column(cls);
        const bool identity = cls.parts[0].size() == T.a() && cls.parts[0].parts() == std::vector<int>(static_cast<std::size_t>(T.a()), 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (identity) S.degrees[i] = col[i * m];
            if (alive[i] == 0 || m == 1) continue;
            auto r = R.reduce(&col[i * m]);
            for (std::size_t u = 0; u < nu; ++u) {
                if (!S.fixes[i][u]) continue;
                if (!R.fixed(r, u)) {
                    S.fixes[i][u] = false;
                    --alive[i];
                }
            }
        }
    }
    return S;
}

/// Lcm of the conductors of all values of one character.
inline std::int64_t conductor_of_char(const WreathCharLabel& L, int m, int a) {
    if (L.m() != m || L.size() != a) throw std::invalid_argument("conductor_of_char: inconsistent label");
    std::int64_t c = 1;
    for (const auto& cls : multipartitions(m, a)) c = std::lcm(c, char_value(L, cls, m).conductor());
    return c;
}

/// Every value of one character fixed by H_[d] at modulus lcm(m, d).
inline bool h_d_invariant(const WreathCharLabel& L, int m, int a, std::int64_t d) {
    if (L.m() != m || L.size() != a) throw std::invalid_argument("h_d_invariant: inconsistent label");
    for (const auto& cls : multipartitions(m, a))
        if (!is_hd_fixed(char_value(L, cls, m), d)) return false;
    return true;
}

/// Exact orthogonality of the C_m wr S_a table, computed with integer vectors.
inline bool wreath_table_orthogonal(const WreathTable& T, std::string* why = nullptr) {
    CyclotomicReducer R(T.m());
    const std::size_t n = T.size(), m = static_cast<std::size_t>(T.m()), ph = static_cast<std::size_t>(R.phi());
    const std::int64_t order = wreath_order(T.m(), T.a());
    // reduced values V[class][label] and the conjugate at the inverse class
    std::vector<std::vector<std::vector<std::int64_t>>> V(n);
    std::vector<std::size_t> inv(n);
    std::vector<std::int64_t> csize(n);
    std::map<Multipartition, std::size_t> cidx;
    for (std::size_t k = 0; k < n; ++k) cidx.emplace(T.classes()[k], k);
    for (std::size_t k = 0; k < n; ++k) {
        auto col = T.column(T.classes()[k]);
        for (std::size_t i = 0; i < n; ++i) V[k].push_back(R.reduce(&col[i * m]));
        inv[k] = cidx.at(inverse_class(T.classes()[k]));
        csize[k] = wreath_class_size(T.classes()[k]);
    }
    // products of power-basis elements: basis_i * basis_j reduced
    std::vector<std::vector<std::vector<std::int64_t>>> prod(ph, std::vector<std::vector<std::int64_t>>(ph));
    for (std::size_t i = 0; i < ph; ++i)
        for (std::size_t j = 0; j < ph; ++j) {
            std::vector<std::int64_t> g(m, 0);
            g[(i + j) % m] = 1;
            prod[i][j] = R.reduce(g.data());
        }
    auto mul_acc = [&](std::vector<std::int64_t>& acc, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y, std::int64_t w) {
        for (std::size_t i = 0; i < ph; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < ph; ++j) {
                if (!y[j]) continue;
                const std::int64_t f = w * x[i] * y[j];
                for (std::size_t t = 0; t < ph; ++t) acc[t] += f * prod[i][j][t];
            }
        }
    };
    auto is_scalar = [&](const std::vector<std::int64_t>& v, std::int64_t s) {
        if (v[0] != s) return false;
        for (std::size_t t = 1; t < ph; ++t)
            if (v[t]) return false;
        return true;
    };
    std::int64_t sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // the identity class is the one with all cycles of length one and colour 0
        for (std::size_t k = 0; k < n; ++k)
            if (T.classes()[k].parts[0].size() == T.a() && T.classes()[k].parts[0].length() == T.a()) sq += V[k][i][0] * V[k][i][0];
    }
    if (sq != order) {
        if (why) *why = "sum of squared degrees";
        return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::vector<std::int64_t> acc(ph, 0);
            for (std::size_t k = 0; k < n; ++k) mul_acc(acc, V[k][i], V[inv[k]][j], csize[k]);
            if (!is_scalar(acc, i == j ? order : 0)) {
                if (why) *why = "row orthogonality at " + T.labels()[i].to_string() + " " + T.labels()[j].to_string();
                return false;
            }
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            std::vector<std::int64_t> acc(ph, 0);
            for (std::size_t i = 0; i < n; ++i) mul_acc(acc, V[k][i], V[inv[l]][i], 1);
            if (!is_scalar(acc, k == l ? order / csize[k] : 0)) {
                if (why) *why = "column orthogonality";
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// Permutation model on m*a points: (i, x) -> (pi(i), x + c_i), point i*m + x.

inline Perm wreath_element(const std::vector<int>& pi, const std::vector<int>& colours, int m) {
    const std::size_t a = pi.size();
    Perm p(a * static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < a; ++i)
        for (int x = 0; x < m; ++x)
            p[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(x)] =
                static_cast<std::uint8_t>(static_cast<std::size_t>(pi[i]) * static_cast<std::size_t>(m) + static_cast<std::size_t>((x + colours[i]) % m));
    return p;
}

/// Cycle type with colours of a permutation in the wreath model.
inline WreathClassLabel wreath_class_of(const Perm& p, int m, int a) {
    std::vector<int> pi(static_cast<std::size_t>(a)), col(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
        int img = p[static_cast<std::size_t>(i * m)];
        pi[static_cast<std::size_t>(i)] = img / m;
        col[static_cast<std::size_t>(i)] = img % m;
    }
    std::vector<std::vector<int>> lens(static_cast<std::size_t>(m));
    std::vector<bool> seen(static_cast<std::size_t>(a), false);
    for (int i = 0; i < a; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, c = 0, x = i;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            c += col[static_cast<std::size_t>(x)];
            x = pi[static_cast<std::size_t>(x)];
            ++len;
        }
        lens[static_cast<std::size_t>(c % m)].push_back(len);
    }
    std::vector<Partition> parts;
    for (auto& l : lens) parts.push_back(Partition::from_unsorted(l));
    return Multipartition(std::move(parts));
}

/// Generators of G(m, p, a) for p in {1, 2} in the permutation model.
inline std::vector<Perm> imprimitive_generators(int m, int p, int a) {
    if (a < 1 || m < 1) throw std::invalid_argument("imprimitive_generators: bad parameters");
    if (p != 1 && p != 2) throw std::invalid_argument("imprimitive_generators: p must be 1 or 2");
    if (p == 2 && m % 2) throw std::invalid_argument("imprimitive_generators: m must be even for p = 2");
    std::vector<Perm> gens;
    std::vector<int> id(static_cast<std::size_t>(a));
    std::iota(id.begin(), id.end(), 0);
    std::vector<int> c(static_cast<std::size_t>(a), 0);
    c[0] = p;
    gens.push_back(wreath_element(id, c, m));
    if (a >= 2) {
        std::vector<int> c2(static_cast<std::size_t>(a), 0);
        c2[0] = 1;
        c2[1] = m - 1;
        gens.push_back(wreath_element(id, c2, m));
    }
    for (int i = 0; i + 1 < a; ++i) {
        std::vector<int> pi = id;
        std::swap(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(i + 1)]);
        gens.push_back(wreath_element(pi, std::vector<int>(static_cast<std::size_t>(a), 0), m));
    }
    return gens;
}

struct Constituent {
    std::string id;
    std::size_t table_index;  // row in the subgroup character table
    int multiplicity;
    std::int64_t degree;
};

/// G(m,2,a) with its exact table and the parent class of each of its classes.
class Index2Subgroup {
   public:
    Index2Subgroup(int m, int a)
        : m_(m), a_(a), group_(imprimitive_generators(m, 2, a), static_cast<std::size_t>(m * a)), table_(dixon_character_table(group_)) {
        for (auto rep : table_.class_reps) parent_class_.push_back(wreath_class_of(group_.element(rep), m, a));
    }
    int m() const noexcept { return m_; }
    int a() const noexcept { return a_; }
    const FiniteGroup& group() const noexcept { return group_; }
    const CharacterTable& table() const noexcept { return table_; }
    const std::vector<WreathClassLabel>& parent_classes() const noexcept { return parent_class_; }

    /// Restriction of chi^L as a class function on the subgroup, lifted to the table's field.
    std::vector<CyclotomicNumber> restricted(const WreathCharLabel& L) const {
        std::vector<CyclotomicNumber> v;
        for (auto& cls : parent_class_) v.push_back(char_value(L, cls, m_).lift(std::lcm(static_cast<std::int64_t>(m_), table_.exponent)));
        return v;
    }

   private:
    int m_, a_;
    FiniteGroup group_;
    CharacterTable table_;
    std::vector<WreathClassLabel> parent_class_;
};

/// Clifford decomposition of chi^L restricted to G(m,2,a).
inline std::vector<Constituent> restrict_index2(const WreathCharLabel& L, const Index2Subgroup& H) {
    if (H.m() % 2) throw std::invalid_argument("restrict_index2: m must be even");
    if (L.m() != H.m() || L.size() != H.a()) throw std::invalid_argument("restrict_index2: label does not match subgroup");
    const auto res = H.restricted(L);
    const auto& T = H.table();
    std::vector<Constituent> out;
    for (std::size_t i = 0; i < T.num_characters(); ++i) {
        std::vector<CyclotomicNumber> psi;
        for (auto& v : T.values[i]) psi.push_back(v.lift(res[0].order()));
        CyclotomicNumber ip = T.inner_product(res, psi);
        if (!ip.is_rational() || !ip.rational_value().is_integer()) throw std::logic_error("restrict_index2: non-integral multiplicity");
        std::int64_t mult = ip.rational_value().num();
        if (mult) out.push_back({"", i, static_cast<int>(mult), T.degree(i)});
    }
    const WreathCharLabel tw = twist_label(L);
    const bool fixed = tw == L;
    if (!fixed) {
        if (out.size() != 1 || out[0].multiplicity != 1) throw std::logic_error("restrict_index2: expected an irreducible restriction");
        out[0].id = std::min(L, tw).to_string();
        return out;
    }
    if (out.size() != 2 || out[0].multiplicity != 1 || out[1].multiplicity != 1)
        throw std::logic_error("restrict_index2: expected two constituents");
    // the constituent with the larger value at the first class where they differ is "+"
    const auto& a = T.values[out[0].table_index];
    const auto& b = T.values[out[1].table_index];
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) continue;
        if (a[k].basis_coefficients() < b[k].basis_coefficients()) std::swap(out[0], out[1]);
        break;
    }
    out[0].id = L.to_string() + "+";
    out[1].id = L.to_string() + "-";
    return out;
}

/// Degree multiset of C_m wr S_a, sorted.
inline std::vector<std::int64_t> wreath_degrees(int m, int a) {
    std::vector<std::int64_t> d;
    for (auto& L : irr_labels(m, a)) d.push_back(wreath_degree(L));
    std::sort(d.begin(), d.end());
    return d;
}

/// Degree multiset of G(m,2,a) from Clifford theory alone, sorted.
inline std::vector<std::int64_t> index2_degrees(int m, int a) {
    if (m % 2) throw std::invalid_argument("index2_degrees: m must be even");
    std::vector<std::int64_t> d;
    for (auto& L : irr_labels(m, a)) {
        auto tw = twist_label(L);
        if (tw == L) {
            d.push_back(wreath_degree(L) / 2);
            d.push_back(wreath_degree(L) / 2);
        } else if (L < tw) {
            d.push_back(wreath_degree(L));
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace galrep
