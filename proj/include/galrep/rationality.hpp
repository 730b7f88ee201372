#pragma once

// Field-of-values rules for extensions of unipotent characters.
//
// A FieldDescriptor is a list of symbolic generators over Q (square roots of
// +-q and r-th roots of a Frobenius eigenvalue).  Resolving at (ell, q) reads
// every generator l-adically.  All generators are roots of l-adic units with
// ell not dividing the index, so each generates an unramified extension and the
// composite is pinned down by one number: its degree f over Q_ell.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "dixon.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"
#include "symbols.hpp"

namespace galrep {

enum class FrobeniusClass { One, MinusQ };

inline std::string to_string(FrobeniusClass w) { return w == FrobeniusClass::One ? "1" : "-q"; }

/// Smallest f with b an r-th power in F_{ell^f}.  Needs ell odd prime, ell not dividing r or b.
inline int root_residue_degree(std::int64_t r, std::int64_t b, std::int64_t ell) {
    detail::require_odd_prime(ell);
    detail::require_coprime(b, ell, "root_residue_degree: ell divides b");
    detail::require_coprime(r, ell, "root_residue_degree: ell divides r");
    const std::int64_t o = mult_order(b, ell);
    const std::int64_t mod = o * r;
    std::int64_t x = 1;
    for (int f = 1; f <= mod * 2 + 2; ++f) {
        x = static_cast<std::int64_t>((static_cast<__int128>(x) * (ell % mod)) % mod);
        // N = ell^f - 1; need o * gcd(r, N) | N
        const std::int64_t nm = mod_floor(x - 1, mod);
        const std::int64_t g = std::gcd(r, nm % r);
        if (nm % (o * g) == 0) return f;
    }
    throw std::logic_error("root_residue_degree: no degree found");
}

struct FieldGenerator {
    enum class Kind { Sqrt, Root };
    Kind kind = Kind::Sqrt;
    int sign = 1;                            // Sqrt: radicand sign * q
    int r = 1;                               // Root: index
    FrobeniusClass omega = FrobeniusClass::One;  // Root: X^r = omega

    static FieldGenerator sqrt(int sign) { return {Kind::Sqrt, sign, 2, FrobeniusClass::One}; }
    static FieldGenerator root(int r, FrobeniusClass w) { return {Kind::Root, 1, r, w}; }

    std::string to_string() const {
        if (kind == Kind::Sqrt) return sign > 0 ? "sqrt(q)" : "sqrt(-q)";
        return "root(X^" + std::to_string(r) + " = " + galrep::to_string(omega) + ")";
    }
    /// degree over Q_ell of the field it generates
    int residue_degree(std::int64_t ell, std::int64_t q) const {
        if (kind == Kind::Sqrt) return root_residue_degree(2, sign * q, ell);
        return root_residue_degree(r, omega == FrobeniusClass::One ? 1 : -q, ell);
    }
    friend bool operator==(const FieldGenerator&, const FieldGenerator&) = default;
    friend auto operator<=>(const FieldGenerator&, const FieldGenerator&) = default;
};

class FieldDescriptor {
   public:
    struct Resolution {
        std::int64_t ell = 0, q = 0;
        int degree = 1;
        friend bool operator==(const Resolution&, const Resolution&) = default;
    };

    FieldDescriptor() = default;
    static FieldDescriptor trivial() { return {}; }
    static FieldDescriptor adjoin_sqrt(int sign) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("adjoin_sqrt: sign must be +-1");
        FieldDescriptor f;
        f.add(FieldGenerator::sqrt(sign));
        return f;
    }
    static FieldDescriptor adjoin_root(int r, FrobeniusClass w) {
        if (r < 1) throw std::invalid_argument("adjoin_root: r must be positive");
        FieldDescriptor f;
        f.add(FieldGenerator::root(r, w));
        return f;
    }

    const std::vector<FieldGenerator>& generators() const noexcept { return gens_; }
    const std::optional<Resolution>& resolution() const noexcept { return res_; }
    bool symbolically_trivial() const noexcept { return gens_.empty(); }
    bool trivial_over_Qell() const {
        if (!res_) throw std::logic_error("FieldDescriptor: not resolved");
        return res_->degree == 1;
    }

    FieldDescriptor join(const FieldDescriptor& o) const {
        FieldDescriptor f = *this;
        for (auto& g : o.gens_) f.add(g);
        if (res_ && o.res_) {
            if (res_->ell != o.res_->ell || res_->q != o.res_->q) throw std::invalid_argument("join: resolved at different (ell, q)");
            f.res_ = Resolution{res_->ell, res_->q, static_cast<int>(std::lcm(res_->degree, o.res_->degree))};
        } else {
            f.res_.reset();
        }
        return f;
    }

    /// Read over Q_ell; generators that become trivial are dropped.
    FieldDescriptor resolve(std::int64_t ell, std::int64_t q) const {
        detail::require_odd_prime(ell);
        detail::require_coprime(q, ell, "resolve: ell divides q");
        if (res_ && (res_->ell != ell || res_->q != q)) throw std::invalid_argument("resolve: already resolved elsewhere");
        FieldDescriptor f;
        int deg = 1;
        for (auto& g : gens_) {
            const int k = g.residue_degree(ell, q);
            if (k > 1) f.add(g);
            deg = static_cast<int>(std::lcm(deg, k));
        }
        f.res_ = Resolution{ell, q, deg};
        return f;
    }

    /// Equality of the actual fields over Q_ell.
    bool same_field(const FieldDescriptor& o) const {
        if (!res_ || !o.res_) throw std::logic_error("same_field: both descriptors must be resolved");
        return *res_ == *o.res_;
    }

    std::string to_string() const {
        std::string s;
        if (gens_.empty()) {
            s = "trivial";
        } else {
            s = "Q(";
            for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
            s += ")";
        }
        if (res_) {
            s += res_->degree == 1 ? " over Q_" + std::to_string(res_->ell)
                                   : ", degree " + std::to_string(res_->degree) + " over Q_" + std::to_string(res_->ell);
        }
        return s;
    }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

   private:
    void add(FieldGenerator g) {
        // X^1 = w and X^r = 1 are rational; X^2 = -q is sqrt(-q)
        if (g.kind == FieldGenerator::Kind::Root) {
            if (g.r == 1 || g.omega == FrobeniusClass::One) return;
            if (g.r == 2) g = FieldGenerator::sqrt(-1);
        }
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
        std::sort(gens_.begin(), gens_.end());
    }

    std::vector<FieldGenerator> gens_;
    std::optional<Resolution> res_;
};

// ---------------------------------------------------------------------------
// Type A

inline bool two_core_irrational_locus(const Partition& la) {
    const int s = two_core(la).size() % 4;
    return s == 2 || s == 3;
}

/// omega_chi for twisted type A.  The -q locus is aligned with the
/// graph-automorphism irrationality locus; any 2-core-determined rule would do.
inline FrobeniusClass frobenius_class_typeA_twisted(const Partition& la) {
    return two_core_irrational_locus(la) ? FrobeniusClass::MinusQ : FrobeniusClass::One;
}

using FrobeniusRule = std::function<FrobeniusClass(const Partition&)>;

inline FieldDescriptor graph_extension_field_typeA(int eps, const Partition& la) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("graph_extension_field_typeA: eps must be +-1");
    return two_core_irrational_locus(la) ? FieldDescriptor::adjoin_sqrt(eps) : FieldDescriptor::trivial();
}

inline FieldDescriptor f0_extension_field(FrobeniusClass w, int r, std::int64_t ell, const PrimePower& q) {
    if (r < 1) throw std::invalid_argument("f0_extension_field: r must be positive");
    return FieldDescriptor::adjoin_root(r, w).resolve(ell, q.value());
}

inline FieldDescriptor extension_field_typeA(int eps, const Partition& la, std::int64_t ell, const PrimePower& q, int r,
                                             const FrobeniusRule& rule = frobenius_class_typeA_twisted) {
    const FrobeniusClass w = eps < 0 ? rule(la) : FrobeniusClass::One;
    return graph_extension_field_typeA(eps, la).resolve(ell, q.value()).join(f0_extension_field(w, r, ell, q));
}

struct CoreFieldRow {
    Partition lambda, core;
    FieldDescriptor field_lambda, field_core;
    bool equal = true;
};

struct CoreFieldReport {
    int eps = 1, n = 0, r = 1;
    std::int64_t ell = 3, q = 2, d_prime = 1;
    std::vector<CoreFieldRow> rows;
    bool pass = true;
};

/// Field of lambda against that of its d'-core, d' = d_ell(eps q).
inline CoreFieldReport check_prop75(int eps, int n, std::int64_t ell, const PrimePower& q, int r,
                                 const FrobeniusRule& rule = frobenius_class_typeA_twisted) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("check_prop75: eps must be +-1");
    if (n < 1) throw std::invalid_argument("check_prop75: n must be positive");
    CoreFieldReport rep;
    rep.eps = eps;
    rep.n = n;
    rep.r = r;
    rep.ell = ell;
    rep.q = q.value();
    rep.d_prime = mult_order(eps * q.value(), ell);
    for (const auto& la : partitions_of(n)) {
        CoreFieldRow row;
        row.lambda = la;
        row.core = d_core(la, static_cast<int>(rep.d_prime)).core;
        row.field_lambda = extension_field_typeA(eps, la, ell, q, r, rule);
        row.field_core = extension_field_typeA(eps, row.core, ell, q, r, rule);
        row.equal = row.field_lambda.same_field(row.field_core);
        if (!row.equal) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Types B, C, D: Frobenius eigenvalues are signs and depend only on the 1-core,
// i.e. on the defect.  Odd defect 2s+1 gets (-1)^{s(s+1)/2}, even defect 1.

inline int frobenius_sign_symbol(const SymbolBCD& S) {
    const int D = S.defect();
    if (D % 2 == 0) return 1;
    const int s = (D - 1) / 2;
    return (s * (s + 1) / 2) % 2 ? -1 : 1;
}

struct SeriesSignReport {
    int max_rank = 0;
    std::vector<int> ds;
    std::size_t pairs_checked = 0, pairs_skipped = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

/// Every pair of symbols with a common d-core gets one eigenvalue class.
inline SeriesSignReport corollary76_consistency(int max_rank, const std::vector<int>& odd_ds, int max_defect = 3) {
    SeriesSignReport rep;
    rep.max_rank = max_rank;
    rep.ds = odd_ds;
    for (int d : odd_ds)
        if (d < 1 || d % 2 == 0) throw std::invalid_argument("corollary76_consistency: d must be odd");
    for (int rank = 0; rank <= max_rank; ++rank) {
        std::vector<SymbolBCD> all;
        for (int D = 0; D <= max_defect; ++D)
            for (auto& S : symbols_of_rank(rank, D)) all.push_back(S);
        for (int d : odd_ds) {
            std::vector<SymbolBCD> cores;
            for (auto& S : all) cores.push_back(symbol_d_core(S, d));
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (frobenius_sign_symbol(all[i]) != frobenius_sign_symbol(cores[i]))
                    rep.counterexamples.push_back(all[i].to_string() + " vs its " + std::to_string(d) + "-core");
                for (std::size_t j = i + 1; j < all.size(); ++j) {
                    if (cores[i] != cores[j]) {
                        ++rep.pairs_skipped;
                        continue;
                    }
                    ++rep.pairs_checked;
                    if (frobenius_sign_symbol(all[i]) != frobenius_sign_symbol(all[j]))
                        rep.counterexamples.push_back(all[i].to_string() + " / " + all[j].to_string() + " d=" + std::to_string(d));
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Curated table of irrational cuspidal fields

struct Table1Field {
    enum class Kind { RootOfUnity, SqrtMinusQ, SqrtQ };
    Kind kind = Kind::RootOfUnity;
    int order = 0;  // root of unity order
    std::string to_string() const {
        switch (kind) {
            case Kind::RootOfUnity: return "Q(zeta_" + std::to_string(order) + ")";
            case Kind::SqrtMinusQ: return "Q(sqrt(-q))";
            case Kind::SqrtQ: return "Q(sqrt(q))";
        }
        return "?";
    }
};

struct Table1Row {
    std::string group;
    std::vector<int> ds;
    std::vector<std::string> characters;
    Table1Field field;
};

struct Table1Exception {
    std::string group, character;
    Table1Field field;
    std::string d_parity;
};

struct Table1 {
    std::vector<Table1Row> rows;
    std::vector<Table1Exception> exceptions;
};

namespace detail {
inline Table1Field parse_table1_field(const nlohmann::json& j) {
    Table1Field f;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "root_of_unity") {
        f.kind = Table1Field::Kind::RootOfUnity;
        f.order = j.at("order").get<int>();
        if (f.order != 3 && f.order != 4 && f.order != 5) throw std::runtime_error("table1: root of unity order must be 3, 4 or 5");
    } else if (kind == "sqrt_minus_q") {
        f.kind = Table1Field::Kind::SqrtMinusQ;
    } else if (kind == "sqrt_q") {
        f.kind = Table1Field::Kind::SqrtQ;
    } else {
        throw std::runtime_error("table1: unknown field kind '" + kind + "'");
    }
    return f;
}
}  // namespace detail

inline Table1 parse_table1(const nlohmann::json& j) {
    Table1 t;
    try {
        if (j.at("format").get<std::string>() != "galrep-table1") throw std::runtime_error("table1: wrong format tag");
        for (const auto& r : j.at("rows")) {
            Table1Row row;
            row.group = r.at("group").get<std::string>();
            row.ds = r.at("d").get<std::vector<int>>();
            row.characters = r.at("characters").get<std::vector<std::string>>();
            row.field = detail::parse_table1_field(r.at("field"));
            if (row.field.kind == Table1Field::Kind::SqrtQ) throw std::runtime_error("table1: sqrt(q) is not a rationality table field");
            if (row.ds.empty() || row.characters.empty()) throw std::runtime_error("table1: empty row");
            t.rows.push_back(std::move(row));
        }
        for (const auto& e : j.at("exceptions")) {
            Table1Exception ex;
            ex.group = e.at("group").get<std::string>();
            ex.character = e.at("character").get<std::string>();
            ex.field = detail::parse_table1_field(e.at("field"));
            ex.d_parity = e.at("d_parity").get<std::string>();
            t.exceptions.push_back(std::move(ex));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("table1: malformed data: ") + e.what());
    }
    return t;
}

/// $GALREP_TABLE1 if set, else the shipped file.
inline std::string default_table1_path() {
    if (const char* env = std::getenv("GALREP_TABLE1"); env && *env) return env;
#ifdef GALREP_DATA_DIR
    return std::string(GALREP_DATA_DIR) + "/table1.json";
#else
    return "data/table1.json";
#endif
}

inline Table1 load_table1(const std::string& path = default_table1_path()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("table1: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("table1: malformed JSON: ") + e.what());
    }
    return parse_table1(j);
}

struct Table1Report {
    std::size_t rows_checked = 0, exceptions_checked = 0, sweep_cases = 0;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Sweep over odd primes ell <= max_ell, prime powers q <= max_q: when
/// d_ell(q) satisfies pred, the radicand sign*q is a square mod ell.
inline std::vector<std::string> sqrt_sweep(int sign, const std::function<bool(std::int64_t)>& pred, std::int64_t max_ell, std::int64_t max_q,
                                           std::size_t* cases) {
    std::vector<std::string> bad;
    for (std::int64_t ell : primes_up_to(max_ell)) {
        if (ell == 2) continue;
        for (std::int64_t q = 2; q <= max_q; ++q) {
            if (!is_prime_power(q) || q % ell == 0) continue;
            if (!pred(mult_order(q, ell))) continue;
            if (cases) ++*cases;
            if (!is_square_mod(sign * q, ell)) bad.push_back("ell=" + std::to_string(ell) + " q=" + std::to_string(q));
        }
    }
    return bad;
}

inline Table1Report table1_consistency(const Table1& t) {
    Table1Report rep;
    bool has_e7 = false;
    for (const auto& row : t.rows) {
        ++rep.rows_checked;
        for (int d : row.ds) {
            const std::string where = row.group + " " + row.field.to_string() + " d=" + std::to_string(d);
            if (d < 1) {
                rep.violations.push_back(where + ": d must be positive");
                continue;
            }
            switch (row.field.kind) {
                case Table1Field::Kind::RootOfUnity:
                    if (d % row.field.order != 0) rep.violations.push_back(where + ": k does not divide d");
                    // and the Galois side: zeta_k is fixed by H_[d]
                    if (!is_hd_fixed(root_of_unity(row.field.order, 1), d)) rep.violations.push_back(where + ": zeta_k not H_[d]-fixed");
                    break;
                case Table1Field::Kind::SqrtMinusQ:
                    has_e7 = true;
                    if (d % 4 != 2) rep.violations.push_back(where + ": d is not 2 mod 4");
                    break;
                case Table1Field::Kind::SqrtQ:
                    rep.violations.push_back(where + ": unexpected sqrt(q) row");
                    break;
            }
        }
    }
    // d = 2 * odd gives sqrt(-q) in Q_ell
    if (has_e7) {
        auto bad = sqrt_sweep(-1, [](std::int64_t d) { return d % 4 == 2; }, 200, 200, &rep.sweep_cases);
        for (auto& b : bad) rep.violations.push_back("sqrt(-q) sweep: " + b);
    }
    for (const auto& ex : t.exceptions) {
        ++rep.exceptions_checked;
        if (ex.field.kind != Table1Field::Kind::SqrtQ) rep.violations.push_back(ex.character + ": exception field must be sqrt(q)");
        if (ex.d_parity != "odd") rep.violations.push_back(ex.character + ": exception must be flagged odd d only");
    }
    if (!t.exceptions.empty()) {
        auto bad = sqrt_sweep(1, [](std::int64_t d) { return d % 2 == 1; }, 200, 200, &rep.sweep_cases);
        for (auto& b : bad) rep.violations.push_back("sqrt(q) sweep: " + b);
    }
    return rep;
}

}  // namespace galrep
