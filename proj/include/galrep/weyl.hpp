#pragma once

// Brute-force relative Weyl groups for the classical types.
//
// Elements are signed permutation matrices.  Type A_r lives on R^{r+1} with the
// reflection representation cut out by sum(v) = 0.  The d-regular element is an
// element of the (possibly twisted) coset whose zeta_d-eigenspace V has maximal
// dimension a(d); the oracle group is N_W(V) / C_W(V), realized as a quotient
// permutation group, and its character degrees come from the exact Dixon table.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "dixon.hpp"
#include "finite_group.hpp"
#include "wreath.hpp"

namespace galrep {

enum class WeylType { A, B, C, D };
enum class Twist { None, TypeA, TypeD };

inline std::string to_string(WeylType t) {
    switch (t) {
        case WeylType::A: return "A";
        case WeylType::B: return "B";
        case WeylType::C: return "C";
        case WeylType::D: return "D";
    }
    return "?";
}
inline std::string to_string(Twist t) {
    switch (t) {
        case Twist::None: return "id";
        case Twist::TypeA: return "2A";
        case Twist::TypeD: return "2D";
    }
    return "?";
}
inline WeylType parse_weyl_type(const std::string& s) {
    if (s == "A") return WeylType::A;
    if (s == "B") return WeylType::B;
    if (s == "C") return WeylType::C;
    if (s == "D") return WeylType::D;
    throw std::invalid_argument("unknown Weyl type: " + s);
}

/// e_i -> signs[i] e_{perm[i]}
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;

    SignedPermutation() = default;
    SignedPermutation(std::vector<int> p, std::vector<int> s) : perm(std::move(p)), signs(std::move(s)) {
        if (perm.size() != signs.size()) throw std::invalid_argument("SignedPermutation: size mismatch");
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] < 0 || perm[i] >= static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(perm[i])])
                throw std::invalid_argument("SignedPermutation: not a permutation");
            seen[static_cast<std::size_t>(perm[i])] = true;
            if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("SignedPermutation: signs must be +-1");
        }
    }
    static SignedPermutation identity(std::size_t n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return {p, std::vector<int>(n, 1)};
    }

    std::size_t dim() const noexcept { return perm.size(); }
    int negatives() const { return static_cast<int>(std::count(signs.begin(), signs.end(), -1)); }

    /// (a*b) v = a(b(v))
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
        SignedPermutation r;
        r.perm.resize(b.dim());
        r.signs.resize(b.dim());
        for (std::size_t i = 0; i < b.dim(); ++i) {
            const auto j = static_cast<std::size_t>(b.perm[i]);
            r.perm[i] = a.perm[j];
            r.signs[i] = b.signs[i] * a.signs[j];
        }
        return r;
    }
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

    template <class T>
    std::vector<T> apply(const std::vector<T>& v) const {
        std::vector<T> w(v.size(), T{});
        for (std::size_t i = 0; i < dim(); ++i) w[static_cast<std::size_t>(perm[i])] = signs[i] < 0 ? -v[i] : v[i];
        return w;
    }
    std::vector<CyclotomicNumber> apply(const std::vector<CyclotomicNumber>& v) const {
        std::vector<CyclotomicNumber> w(v);
        for (std::size_t i = 0; i < dim(); ++i) w[static_cast<std::size_t>(perm[i])] = signs[i] < 0 ? Rational(-1) * v[i] : v[i];
        return w;
    }

    /// Cycles as (length, product of signs).
    std::vector<std::pair<int, int>> cycles() const {
        std::vector<std::pair<int, int>> out;
        std::vector<bool> seen(dim(), false);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (seen[i]) continue;
            int len = 0, s = 1;
            for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
                seen[x] = true;
                s *= signs[x];
                ++len;
            }
            out.emplace_back(len, s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Permutation of the 2n points +-e_i (point i is e_i, point n + i is -e_i).
    Perm to_perm() const {
        const std::size_t n = dim();
        Perm p(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = static_cast<std::size_t>(perm[i]);
            p[i] = static_cast<std::uint8_t>(signs[i] > 0 ? j : j + n);
            p[i + n] = static_cast<std::uint8_t>(signs[i] > 0 ? j + n : j);
        }
        return p;
    }
};

struct WeylGroup {
    WeylType type;
    int rank;
    std::vector<SignedPermutation> elements;
    /// ambient dimension: rank + 1 for type A
    std::size_t ambient() const { return type == WeylType::A ? static_cast<std::size_t>(rank) + 1 : static_cast<std::size_t>(rank); }
};

inline WeylGroup weyl_group(WeylType type, int rank) {
    if (rank < 1) throw std::invalid_argument("weyl_group: rank must be positive");
    if (rank > 7) throw std::invalid_argument("weyl_group: rank bound exceeded (max 7)");
    if (type == WeylType::D && rank < 2) throw std::invalid_argument("weyl_group: type D needs rank >= 2");
    WeylGroup W{type, rank, {}};
    const int n = static_cast<int>(W.ambient());
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (type == WeylType::A) {
            W.elements.emplace_back(p, std::vector<int>(static_cast<std::size_t>(n), 1));
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (type == WeylType::D && std::popcount(mask) % 2) continue;
            std::vector<int> s(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
            W.elements.emplace_back(p, s);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return W;
}

/// The automorphism phi of the coset W phi, as a matrix on the ambient space.
inline SignedPermutation twist_matrix(WeylType type, int rank, Twist tw) {
    const std::size_t n = type == WeylType::A ? static_cast<std::size_t>(rank) + 1 : static_cast<std::size_t>(rank);
    switch (tw) {
        case Twist::None: return SignedPermutation::identity(n);
        case Twist::TypeA: {
            if (type != WeylType::A) throw std::invalid_argument("twist: type-A twist needs type A");
            // -w_0 with w_0 the reversal
            std::vector<int> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(n - 1 - i);
            return {p, std::vector<int>(n, -1)};
        }
        case Twist::TypeD: {
            if (type != WeylType::D) throw std::invalid_argument("twist: type-D twist needs type D");
            auto s = SignedPermutation::identity(n);
            s.signs.back() = -1;
            return s;
        }
    }
    throw std::invalid_argument("twist: unknown");
}

struct TwistedElement {
    SignedPermutation w;
    Twist phi = Twist::None;
    SignedPermutation matrix(WeylType type, int rank) const { return w * twist_matrix(type, rank, phi); }
};

/// dim of the zeta_d-eigenspace from the signed cycle type: a cycle (c, s) has
/// eigenvalues the roots of x^c = s.  For type A the line spanned by (1,...,1)
/// is removed; its eigenvalue is the common sign.
inline int eigenspace_dim_formula(const SignedPermutation& M, int d, bool type_a) {
    if (d < 1) throw std::invalid_argument("eigenspace_dim: d must be positive");
    auto hits = [d](int c, int s) { return s > 0 ? c % d == 0 : (c % d != 0 && (2 * c) % d == 0); };
    int dim = 0;
    for (auto [c, s] : M.cycles())
        if (hits(c, s)) ++dim;
    if (type_a && hits(1, M.signs[0])) --dim;
    return dim;
}

namespace detail {

// kernel of a matrix over Q(zeta_n) by Gauss-Jordan elimination
inline std::vector<std::vector<CyclotomicNumber>> cyclotomic_kernel(std::vector<std::vector<CyclotomicNumber>> A, std::size_t ncols, std::int64_t n) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < A.size(); ++c) {
        std::size_t piv = row;
        while (piv < A.size() && A[piv][c].is_zero()) ++piv;
        if (piv == A.size()) continue;
        std::swap(A[piv], A[row]);
        const CyclotomicNumber inv = A[row][c].inverse();
        for (auto& x : A[row]) x = x * inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][c].is_zero()) continue;
            const CyclotomicNumber f = A[r][c];
            for (std::size_t k = 0; k < ncols; ++k) A[r][k] = A[r][k] - f * A[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::vector<CyclotomicNumber>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<CyclotomicNumber> v(ncols, CyclotomicNumber(n));
        v[f] = CyclotomicNumber(n, Rational(1));
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Rational(-1) * A[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Exact basis of the zeta_d-eigenspace over Q(zeta_d).
inline std::vector<std::vector<CyclotomicNumber>> eigenspace_basis(const SignedPermutation& M, int d, bool type_a) {
    const std::size_t n = M.dim();
    const std::int64_t N = std::max(d, 1);
    const CyclotomicNumber z = root_of_unity(N, 1);
    std::vector<std::vector<CyclotomicNumber>> A(n, std::vector<CyclotomicNumber>(n, CyclotomicNumber(N)));
    for (std::size_t i = 0; i < n; ++i) {
        A[static_cast<std::size_t>(M.perm[i])][i] = CyclotomicNumber(N, Rational(M.signs[i]));
        A[i][i] = A[i][i] - z;
    }
    if (type_a) A.emplace_back(n, CyclotomicNumber(N, Rational(1)));
    return detail::cyclotomic_kernel(std::move(A), n, N);
}

struct DRegular {
    int a_d = 0;
    std::vector<TwistedElement> elements;
};

/// Elements of W phi with maximal zeta_d-eigenspace.  The cycle-type formula is
/// cross-checked against exact elimination once per signed cycle type.
inline DRegular d_regular_elements(const WeylGroup& W, int d, Twist phi) {
    const bool ta = W.type == WeylType::A;
    const SignedPermutation P = twist_matrix(W.type, W.rank, phi);
    std::map<std::vector<std::pair<int, int>>, int> checked;
    std::vector<int> dims;
    DRegular out;
    for (const auto& w : W.elements) {
        const SignedPermutation M = w * P;
        const int k = eigenspace_dim_formula(M, d, ta);
        auto key = M.cycles();
        if (!checked.count(key)) {
            const int exact = static_cast<int>(eigenspace_basis(M, d, ta).size());
            if (exact != k) throw std::logic_error("d_regular_elements: eigenspace formula disagrees with elimination");
            checked.emplace(key, k);
        }
        dims.push_back(k);
        out.a_d = std::max(out.a_d, k);
    }
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (dims[i] == out.a_d) out.elements.push_back({W.elements[i], phi});
    return out;
}

/// Invariant degrees with the eigenvalue of phi on the matching invariant.
inline std::vector<std::pair<int, int>> invariant_degrees(WeylType type, int rank, Twist phi) {
    std::vector<std::pair<int, int>> out;
    switch (type) {
        case WeylType::A:
            for (int k = 2; k <= rank + 1; ++k) out.emplace_back(k, phi == Twist::TypeA && k % 2 ? -1 : 1);
            break;
        case WeylType::B:
        case WeylType::C:
            for (int k = 1; k <= rank; ++k) out.emplace_back(2 * k, 1);
            break;
        case WeylType::D:
            for (int k = 1; k < rank; ++k) out.emplace_back(2 * k, 1);
            out.emplace_back(rank, phi == Twist::TypeD ? -1 : 1);
            break;
    }
    return out;
}

/// Multiplicity of Phi_d in prod (q^{d_i} - eps_i).
inline int a_from_degrees(WeylType type, int rank, Twist phi, int d) {
    int a = 0;
    for (auto [deg, eps] : invariant_degrees(type, rank, phi))
        if (eps > 0 ? deg % d == 0 : (deg % d != 0 && (2 * deg) % d == 0)) ++a;
    return a;
}

struct WreathShape {
    int d2 = 1;          // d''
    int a = 0;           // number of blocks
    bool index2 = false;  // G(d'',2,a) instead of C_{d''} wr S_a

    std::int64_t order() const { return wreath_order(d2, a) / (index2 ? 2 : 1); }
    std::vector<std::int64_t> degrees() const { return index2 ? index2_degrees(d2, a) : wreath_degrees(d2, a); }
    std::string to_string() const {
        return (index2 ? "G(" + std::to_string(d2) + ",2," + std::to_string(a) + ")" : "C" + std::to_string(d2) + " wr S" + std::to_string(a));
    }
};

/// Shape read off the eigenvalue structure of a d-regular element: blocks are
/// the cycles carrying a zeta_d eigenvalue.
inline WreathShape predicted_shape(WeylType type, int rank, int d, const TwistedElement& x) {
    const SignedPermutation M = x.matrix(type, rank);
    WreathShape s;
    int covered = 0, len = 0;
    for (auto [c, sg] : M.cycles()) {
        const bool hit = sg > 0 ? c % d == 0 : (c % d != 0 && (2 * c) % d == 0);
        if (!hit) continue;
        if (len && len != c) throw std::logic_error("predicted_shape: blocks of different lengths");
        len = c;
        ++s.a;
        covered += c;
    }
    if (type == WeylType::A) {
        s.d2 = len;
    } else {
        s.d2 = static_cast<int>(std::lcm(2, d));
        s.index2 = type == WeylType::D && covered == rank;
    }
    return s;
}

struct RelativeWeylGroup {
    WeylType type;
    int rank;
    int d;
    Twist phi;
    int a_d = 0;
    TwistedElement representative;
    std::size_t normalizer_order = 0, kernel_order = 0;
    std::int64_t order = 1;
    std::vector<std::int64_t> degrees;  // sorted
    CharacterTable table;
    bool all_hd_fixed = true;
    WreathShape shape;
};

/// W_d = N_W(V) / C_W(V) for the eigenspace V of the first d-regular element.
inline RelativeWeylGroup relative_weyl_group(WeylType type, int rank, int d, Twist phi) {
    if (d < 1) throw std::invalid_argument("relative_weyl_group: d must be positive");
    const WeylGroup W = weyl_group(type, rank);
    const bool ta = type == WeylType::A;
    RelativeWeylGroup R{};
    R.type = type;
    R.rank = rank;
    R.d = d;
    R.phi = phi;
    auto reg = d_regular_elements(W, d, phi);
    R.a_d = reg.a_d;
    R.representative = reg.elements.front();
    if (R.a_d == 0) {
        R.degrees = {1};
        return R;
    }
    const SignedPermutation M = R.representative.matrix(type, rank);
    const auto V = eigenspace_basis(M, d, ta);
    const CyclotomicNumber z = root_of_unity(std::max(d, 1), 1);
    std::vector<Perm> N, C;
    for (const auto& x : W.elements) {
        bool normal = true, trivial = true;
        for (const auto& v : V) {
            auto xv = x.apply(v);
            auto mxv = M.apply(xv);
            for (std::size_t i = 0; i < xv.size() && normal; ++i)
                if (mxv[i] != z * xv[i]) normal = false;
            if (!normal) break;
            if (xv != v) trivial = false;
        }
        if (!normal) continue;
        N.push_back(x.to_perm());
        if (trivial) C.push_back(x.to_perm());
    }
    R.normalizer_order = N.size();
    R.kernel_order = C.size();
    FiniteGroup::Canon canon;
    if (C.size() > 1)
        canon = [C](const Perm& p) {
            Perm best = perm_mul(p, C[0]);
            for (std::size_t i = 1; i < C.size(); ++i) best = std::min(best, perm_mul(p, C[i]));
            return best;
        };
    const std::size_t deg = 2 * W.ambient();
    std::vector<Perm> gens;
    FiniteGroup G(gens, deg, canon);
    for (const auto& x : N) {
        if (G.contains(x)) continue;
        gens.push_back(x);
        G = FiniteGroup(gens, deg, canon);
    }
    if (G.size() * C.size() != N.size()) throw std::logic_error("relative_weyl_group: quotient has the wrong order");
    R.order = static_cast<std::int64_t>(G.size());
    R.table = dixon_character_table(G);
    R.degrees = R.table.degrees();
    std::sort(R.degrees.begin(), R.degrees.end());
    for (const auto& row : R.table.values)
        for (const auto& v : row)
            if (!is_hd_fixed(v, d)) R.all_hd_fixed = false;
    R.shape = predicted_shape(type, rank, d, R.representative);
    return R;
}

inline bool matches_wreath_prediction(const RelativeWeylGroup& R) {
    if (R.a_d == 0) return false;
    return R.order == R.shape.order() && R.degrees == R.shape.degrees();
}

inline bool matches_wreath_prediction(WeylType type, int rank, int d, Twist phi) {
    return matches_wreath_prediction(relative_weyl_group(type, rank, d, phi));
}

struct WeylCase {
    WeylType type;
    int rank;
    Twist phi;
};

/// Classical types up to rank 5 (type D up to 4), with the twists where defined.
inline std::vector<WeylCase> weyl_sweep_cases(int max_rank = 5, int max_rank_d = 4) {
    std::vector<WeylCase> out;
    for (int r = 1; r <= max_rank; ++r) out.push_back({WeylType::A, r, Twist::None});
    for (int r = 2; r <= max_rank; ++r) out.push_back({WeylType::A, r, Twist::TypeA});
    for (int r = 2; r <= max_rank; ++r) out.push_back({WeylType::B, r, Twist::None});
    for (int r = 2; r <= max_rank; ++r) out.push_back({WeylType::C, r, Twist::None});
    for (int r = 2; r <= max_rank_d; ++r) out.push_back({WeylType::D, r, Twist::None});
    for (int r = 2; r <= max_rank_d; ++r) out.push_back({WeylType::D, r, Twist::TypeD});
    return out;
}

/// Largest d worth scanning: beyond twice the largest degree no eigenvalue can occur.
inline int weyl_max_d(WeylType type, int rank) { return 2 * (type == WeylType::A ? rank + 1 : 2 * rank); }

}  // namespace galrep
