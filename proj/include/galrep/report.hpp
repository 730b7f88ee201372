#pragma once

// Named verification suites and one-shot queries, with deterministic JSON and
// CSV rendering.  Every suite collects counterexamples; a suite passes iff it
// found none.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "langmap.hpp"
#include "numtheory.hpp"
#include "partitions.hpp"
#include "qpolynomial.hpp"
#include "rationality.hpp"
#include "symbols.hpp"
#include "weyl.hpp"
#include "wreath.hpp"
#include "wreath_certificate.hpp"

namespace galrep {

inline constexpr int kReportSchemaVersion = 1;

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;  // effective values, declaration order
    std::vector<std::pair<std::string, std::int64_t>> counts;
    std::vector<std::string> counterexamples;  // first kMaxListed only
    std::size_t counterexample_total = 0;
    double wall_seconds = 0;

    static constexpr std::size_t kMaxListed = 50;

    bool pass() const { return counterexample_total == 0; }
    std::string status() const { return pass() ? "pass" : "fail"; }

    void fail(const std::string& what) {
        if (counterexamples.size() < kMaxListed) counterexamples.push_back(what);
        ++counterexample_total;
    }
    std::int64_t& count(const std::string& key) {
        for (auto& [k, v] : counts)
            if (k == key) return v;
        counts.emplace_back(key, 0);
        return counts.back().second;
    }

    nlohmann::ordered_json to_json(bool with_time = false) const {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["status"] = status();
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (auto& [k, v] : params) p[k] = v;
        j["params"] = p;
        nlohmann::ordered_json c = nlohmann::ordered_json::object();
        for (auto& [k, v] : counts) c[k] = v;
        j["counts"] = c;
        j["counterexample_total"] = counterexample_total;
        j["counterexamples"] = counterexamples;
        if (with_time) j["wall_seconds"] = wall_seconds;
        return j;
    }
};

/// Key-value overrides for one suite.  Every key must be declared by the suite.
class SuiteParams {
   public:
    SuiteParams() = default;
    explicit SuiteParams(std::map<std::string, std::string> overrides) : overrides_(std::move(overrides)) {}

    /// "k=v,k=v" with integer values.
    static SuiteParams parse(const std::string& text) {
        std::map<std::string, std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw std::invalid_argument("invalid parameter '" + item + "': expected key=value");
            out[item.substr(0, eq)] = item.substr(eq + 1);
        }
        return SuiteParams(std::move(out));
    }

    const std::map<std::string, std::string>& overrides() const { return overrides_; }

    std::int64_t get(CheckReport& rep, const std::string& key, std::int64_t fallback, std::int64_t lo, std::int64_t hi) {
        std::int64_t v = fallback;
        if (auto it = overrides_.find(key); it != overrides_.end()) {
            std::size_t used = 0;
            try {
                v = std::stoll(it->second, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != it->second.size()) throw std::invalid_argument("invalid parameter " + key + "=" + it->second + ": not an integer");
            if (v < lo || v > hi)
                throw std::invalid_argument("invalid parameter " + key + "=" + it->second + ": allowed range " + std::to_string(lo) + ".." + std::to_string(hi));
            consumed_.insert(key);
        }
        rep.params.emplace_back(key, v);
        return v;
    }

    void finish(const std::string& suite) const {
        for (auto& [k, v] : overrides_)
            if (!consumed_.count(k)) throw std::invalid_argument("invalid parameter '" + k + "' for suite " + suite);
    }

   private:
    std::map<std::string, std::string> overrides_;
    std::set<std::string> consumed_;
};

struct SuiteOptions {
    std::string table1_path;  // empty: default location
    unsigned threads = 1;     // inner parallelism for the heavy table checks
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma22", "lemma71", "lemma82", "thm41", "lemma42", "cor74",
                                                "lemma72", "prop75",  "table1",  "cor55", "weyl-match"};
    return names;
}

/// Parameter keys each suite accepts, checked before any work starts.
inline const std::vector<std::string>& suite_param_keys(const std::string& name) {
    static const std::map<std::string, std::vector<std::string>> keys{
        {"lemma22", {"ell_max", "q_max", "n_max"}},
        {"lemma71", {"ell_max", "r_max", "p0_max"}},
        {"lemma82", {"p_max", "r0_max", "ell_max"}},
        {"thm41", {"m_max", "a_max", "d_max", "index2_m_max", "index2_a_max"}},
        {"lemma42", {"m_max", "a_max", "d_max", "exact_m_max", "exact_a_max", "index2_m_max", "index2_a_max", "table_sanity"}},
        {"cor74", {"n_max", "d_max"}},
        {"lemma72", {"rank_max", "defect_max", "d_max"}},
        {"prop75", {"n_max", "ell_max", "q_max", "r_max", "graph_n_max"}},
        {"table1", {}},
        {"cor55", {"p_max", "e_max", "n_max"}},
        {"weyl-match", {"rank_max", "rank_max_d", "table_sanity"}},
    };
    const auto it = keys.find(name);
    if (it == keys.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second;
}

namespace suites {

inline std::vector<std::int64_t> odd_primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (auto p : primes_up_to(n))
        if (p != 2) out.push_back(p);
    return out;
}

inline std::vector<std::int64_t> prime_powers_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = 2; q <= n; ++q)
        if (is_prime_power(q)) out.push_back(q);
    return out;
}

template <class... T>
std::string cat(const T&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

/// Order of u in (Z/ell)^x by repeated multiplication.
inline std::int64_t brute_order(std::int64_t u, std::int64_t ell) {
    std::int64_t x = u % ell, k = 1;
    while (x != 1) {
        x = x * u % ell;
        ++k;
    }
    return k;
}

/// Does the subgroup of r-th powers of F_ell^x contain an element of order a.
inline bool brute_root_of_unity_is_power(std::int64_t r, std::int64_t a, std::int64_t ell) {
    std::set<std::int64_t> pw;
    for (std::int64_t x = 1; x < ell; ++x) pw.insert(pow_mod(x, r, ell));
    for (std::int64_t u : pw)
        if (brute_order(u, ell) == a) return true;
    return false;
}

// -- lemma22 ---------------------------------------------------------------

inline void lemma22(CheckReport& rep, SuiteParams& P) {
    const auto ell_max = P.get(rep, "ell_max", 200, 3, 2000);
    const auto q_max = P.get(rep, "q_max", 200, 2, 2000);
    const auto n_max = P.get(rep, "n_max", 120, 1, 400);
    // (a) H_ell inside H_[d] for d | ell - 1
    for (auto ell : odd_primes_up_to(ell_max))
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const auto H = hell_subgroup(ell, n);
            for (auto d : divisors(std::gcd(ell - 1, n))) {
                ++rep.count("inclusion_cases");
                const auto Hd = hd_subgroup(d, n);
                for (auto k : H.residues())
                    if (!Hd.contains(k)) {
                        rep.fail(cat("H_ell not in H_[d]: ell=", ell, " n=", n, " d=", d, " k=", k));
                        break;
                    }
            }
        }
    // (b) H_[2m] = H_[m] for odd m
    for (std::int64_t n = 1; n <= n_max; ++n)
        for (std::int64_t m = 1; 2 * m <= n; m += 2) {
            if (n % (2 * m)) continue;
            ++rep.count("doubling_cases");
            if (hd_subgroup(2 * m, n).residues() != hd_subgroup(m, n).residues()) rep.fail(cat("H_[2m] != H_[m]: m=", m, " n=", n));
        }
    // (c), (d) with brute-force squares as the second route
    for (auto ell : odd_primes_up_to(ell_max)) {
        std::set<std::int64_t> squares;
        for (std::int64_t x = 1; x < ell; ++x) squares.insert(x * x % ell);
        for (auto q : prime_powers_up_to(q_max)) {
            if (q % ell == 0) continue;
            const auto Q = PrimePower::from_value(q);
            const auto d = mult_order(q, ell);
            const bool sq = sqrt_q_fixed(Q, ell), msq = sqrt_minus_q_fixed(Q, ell);
            if (sq != (squares.count(q % ell) > 0) || msq != (squares.count(mod_floor(-q, ell)) > 0))
                rep.fail(cat("Euler criterion disagrees with squares: ell=", ell, " q=", q));
            if (d % 2 == 1) {
                ++rep.count("odd_d_cases");
                if (!sq) rep.fail(cat("d odd but sqrt(q) not in Q_ell: ell=", ell, " q=", q, " d=", d));
            } else if ((d / 2) % 2 == 1) {
                ++rep.count("twice_odd_d_cases");
                if (!msq) rep.fail(cat("d = 2 odd but sqrt(-q) not in Q_ell: ell=", ell, " q=", q, " d=", d));
            }
        }
    }
}

// -- lemma71 ---------------------------------------------------------------

inline void lemma71(CheckReport& rep, SuiteParams& P) {
    const auto ell_max = P.get(rep, "ell_max", 100, 3, 400);
    const auto r_max = P.get(rep, "r_max", 20, 1, 40);
    const auto p0_max = P.get(rep, "p0_max", 50, 2, 200);
    for (auto ell : odd_primes_up_to(ell_max)) {
        // predicate against enumeration of r-th powers in F_ell^x
        for (std::int64_t r = 1; r <= r_max; ++r)
            for (auto a : divisors(ell - 1)) {
                ++rep.count("enumeration_cases");
                if (root_exists_in_Qell_any_r(r, a, ell) != brute_root_of_unity_is_power(r, a, ell))
                    rep.fail(cat("root predicate disagrees with enumeration: r=", r, " a=", a, " ell=", ell));
            }
        for (auto p0 : prime_powers_up_to(p0_max)) {
            if (p0 % ell == 0) continue;
            for (std::int64_t r = 1; r <= r_max; ++r) {
                // (a) q = p0^r, a | d_ell(q)
                const auto d = mult_order(pow_mod(p0, r, ell), ell);
                for (auto a : divisors(d)) {
                    ++rep.count("part_a_cases");
                    if (!root_exists_in_Qell_any_r(r, a, ell)) rep.fail(cat("(a): X^", r, " - zeta_", a, " has no zero over Q_", ell, ", p0=", p0));
                }
                // (b) q^2 = p0^r, so q = p0^{r/2}, or sqrt(p0)^r when p0 is a square
                std::int64_t base = p0;
                std::int64_t e = r;
                if (r % 2 == 0) {
                    e = r / 2;
                } else {
                    const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(p0))));
                    if (s * s != p0) continue;
                    base = s;
                }
                const auto [v, rp] = split_ell(r, ell);
                (void)rp;
                const std::int64_t M = ipow(ell, v + 1);
                for (int eps : {1, -1}) {
                    ++rep.count("part_b_cases");
                    const std::int64_t b = mod_floor(eps * pow_mod(base, e, M), M);
                    const bool root = unit_root_exists_padic(r, b, ell);
                    bool brute = false;
                    for (std::int64_t x = 1; x < M && !brute; ++x)
                        if (x % ell && pow_mod(x, r, M) == b) brute = true;
                    if (root != brute) rep.fail(cat("(b): root predicate disagrees with enumeration mod ", M, ": r=", r, " b=", b));
                    const auto dp = mult_order(b, ell);
                    if (!root && dp % 2 == 1) rep.fail(cat("(b): no zero but d' odd: ell=", ell, " p0=", p0, " r=", r, " eps=", eps));
                }
            }
        }
    }
}

// -- lemma82 ---------------------------------------------------------------

inline void lemma82(CheckReport& rep, SuiteParams& P) {
    const auto p_max = P.get(rep, "p_max", 23, 2, 200);
    const auto r0_max = P.get(rep, "r0_max", 8, 1, 30);
    const auto ell_max = P.get(rep, "ell_max", 61, 3, 400);
    for (int delta = 1; delta <= 3; ++delta)
        for (auto p : primes_up_to(p_max))
            for (std::int64_t r0 = 1; r0 <= r0_max; ++r0)
                for (auto ell : odd_primes_up_to(ell_max)) {
                    if (p == ell || (delta * r0) % ell == 0) continue;
                    ++rep.count("cases");
                    const auto d = mult_order(pow_mod(p, r0, ell), ell);
                    const bool ok = central_product_splits(delta, d, r0, ell, p);
                    const auto d0 = std::lcm(static_cast<std::int64_t>(delta), d);
                    if (ok != brute_root_of_unity_is_power(r0 * delta, d0 / delta, ell))
                        rep.fail(cat("root condition disagrees with enumeration: delta=", delta, " p=", p, " r0=", r0, " ell=", ell));
                    if (!ok) rep.fail(cat("no splitting: delta=", delta, " p=", p, " r0=", r0, " ell=", ell, " d=", d));
                }
}

// -- thm41 / lemma42 ---------------------------------------------------------

inline std::string wreath_name(int m, int a) { return cat("C", m, " wr S", a); }
inline std::string index2_name(int m, int a) { return cat("G(", m, ",2,", a, ")"); }

/// Smallest k' = k mod m that is a unit mod lcm(m, n).  Values lying in
/// Q(zeta_m) see the same automorphism whichever lift is taken.
inline std::int64_t lift_unit(std::int64_t k, std::int64_t m, std::int64_t n) {
    const auto N = std::lcm(m, n);
    for (std::int64_t x = mod_floor(k, m); x < N + m; x += m)
        if (std::gcd(x, N) == 1) return x;
    throw std::logic_error("lift_unit: no unit lift");
}

/// Index-2 tables with each irreducible tied to the labels it comes from.
struct Index2Labelled {
    std::unique_ptr<Index2Subgroup> H;
    // per table character: (label, split)
    std::vector<std::pair<WreathCharLabel, bool>> origin;
};

inline Index2Labelled labelled_index2(int m, int a) {
    Index2Labelled out;
    out.H = std::make_unique<Index2Subgroup>(m, a);
    const auto& T = out.H->table();
    out.origin.assign(T.num_characters(), {Multipartition::empty(m), false});
    std::vector<bool> seen(T.num_characters(), false);
    for (const auto& L : irr_labels(m, a)) {
        auto cons = restrict_index2(L, *out.H);
        const bool split = cons.size() == 2;
        for (auto& c : cons)
            if (!seen[c.table_index]) {
                seen[c.table_index] = true;
                out.origin[c.table_index] = {L, split};
            }
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("labelled_index2: character not reached by restriction");
    return out;
}

inline void thm41(CheckReport& rep, SuiteParams& P) {
    const auto m_max = P.get(rep, "m_max", 12, 1, 12);
    const auto a_max = P.get(rep, "a_max", 4, 1, 4);
    const auto d_max = P.get(rep, "d_max", 12, 1, 60);
    const auto i2_m_max = P.get(rep, "index2_m_max", 6, 2, 8);
    const auto i2_a_max = P.get(rep, "index2_a_max", 3, 1, 3);
    for (int m = 1; m <= m_max; ++m)
        for (int a = 1; a <= a_max; ++a) {
            const WreathTable T(m, a);
            const auto S = wreath_galois_summary(T);
            rep.count("characters") += static_cast<std::int64_t>(T.size());
            // value route against label route, unit by unit
            for (std::size_t i = 0; i < T.size(); ++i)
                for (std::size_t u = 0; u < S.units.size(); ++u)
                    if (S.fixes[i][u] != (galois_label(T.labels()[i], S.units[u]) == T.labels()[i]))
                        rep.fail(cat(wreath_name(m, a), " ", T.labels()[i].to_string(), ": value and label stabilisers differ at k=", S.units[u]));
            for (std::int64_t d = 1; d <= d_max; ++d) {
                if (std::lcm<std::int64_t>(2, d) % m) continue;
                for (std::size_t i = 0; i < T.size(); ++i) {
                    ++rep.count("wreath_checks");
                    if (!S.hd_fixed(i, d)) rep.fail(cat(wreath_name(m, a), " ", T.labels()[i].to_string(), " not H_[", d, "]-fixed"));
                }
            }
        }
    for (int m = 2; m <= i2_m_max; m += 2)
        for (int a = 1; a <= i2_a_max; ++a) {
            const auto X = labelled_index2(m, a);
            const auto& T = X.H->table();
            rep.count("index2_characters") += static_cast<std::int64_t>(T.num_characters());
            const auto units = unit_residues(m);
            for (std::size_t c = 0; c < T.num_characters(); ++c) {
                const auto& [L, split] = X.origin[c];
                // label route: sigma_k sends Res chi_L to Res chi_{kL}
                for (auto k : units) {
                    const auto kL = galois_label(L, k);
                    const bool label_fixed = kL == L || kL == twist_label(L);
                    bool value_fixed = true;
                    for (const auto& v : T.values[c])
                        if (v.galois(lift_unit(k, m, v.order())) != v) value_fixed = false;
                    if (!split && label_fixed != value_fixed)
                        rep.fail(cat(index2_name(m, a), " ", L.to_string(), ": value and label routes differ at k=", k));
                    if (split && value_fixed && kL != L)
                        rep.fail(cat(index2_name(m, a), " ", L.to_string(), "+-: fixed although k moves the label, k=", k));
                }
                for (std::int64_t d = 1; d <= d_max; ++d) {
                    if (std::lcm<std::int64_t>(2, d) % m) continue;
                    ++rep.count("index2_checks");
                    if (!T.hd_fixed(c, d)) rep.fail(cat(index2_name(m, a), " character ", c, " (from ", L.to_string(), ") not H_[", d, "]-fixed"));
                }
            }
        }
}

inline void lemma42(CheckReport& rep, SuiteParams& P, const SuiteOptions& opt) {
    const auto m_max = P.get(rep, "m_max", 12, 1, 12);
    const auto a_max = P.get(rep, "a_max", 4, 1, 4);
    const auto d_max = P.get(rep, "d_max", 12, 1, 60);
    const auto exact_m_max = P.get(rep, "exact_m_max", 6, 0, 12);
    const auto exact_a_max = P.get(rep, "exact_a_max", 3, 0, 4);
    const auto i2_m_max = P.get(rep, "index2_m_max", 6, 2, 8);
    const auto i2_a_max = P.get(rep, "index2_a_max", 3, 1, 3);
    const auto tables = P.get(rep, "table_sanity", 1, 0, 1);
    for (int m = 1; m <= m_max; ++m)
        for (int a = 1; a <= a_max; ++a) {
            const WreathTable T(m, a);
            const auto S = wreath_galois_summary(T);
            for (std::size_t i = 0; i < T.size(); ++i) {
                const auto& L = T.labels()[i];
                ++rep.count("characters");
                const auto c = S.conductor(i);
                if (m % c) rep.fail(cat(wreath_name(m, a), " ", L.to_string(), ": conductor ", c, " does not divide m"));
                // label route: smallest c | m with every k = 1 mod c fixing the label
                std::int64_t lc = m;
                for (auto cand : divisors(m)) {
                    bool ok = true;
                    for (auto k : unit_residues(m))
                        if (k % cand == 1 % cand && galois_label(L, k) != L) ok = false;
                    if (ok) {
                        lc = cand;
                        break;
                    }
                }
                // conductors are only defined up to Q(zeta_c) = Q(zeta_2c) for odd c
                auto norm = [](std::int64_t x) { return x % 4 == 2 ? x / 2 : x; };
                if (norm(lc) != norm(c)) rep.fail(cat(wreath_name(m, a), " ", L.to_string(), ": label conductor ", lc, " vs value conductor ", c));
                if (m <= exact_m_max && a <= exact_a_max) {
                    ++rep.count("exact_conductors");
                    const auto e = conductor_of_char(L, m, a);
                    if (norm(e) != norm(c)) rep.fail(cat(wreath_name(m, a), " ", L.to_string(), ": exact conductor ", e, " vs ", c));
                }
                for (std::int64_t d = 1; d <= d_max; ++d)
                    if (std::lcm<std::int64_t>(2, d) % m == 0 && std::lcm<std::int64_t>(2, d) % c)
                        rep.fail(cat(wreath_name(m, a), " ", L.to_string(), ": conductor does not divide lcm(2,", d, ")"));
            }
            const auto degs = wreath_degrees(m, a);
            std::int64_t sq = 0;
            for (auto x : degs) sq += x * x;
            if (sq != wreath_order(m, a)) rep.fail(cat(wreath_name(m, a), ": sum of squared degrees ", sq));
            if (tables) {
                ++rep.count("tables_certified");
                const auto C = wreath_orthogonality_certificate(T, opt.threads);
                if (!C.ok) rep.fail(cat(wreath_name(m, a), ": orthogonality certificate failed: ", C.why));
            }
        }
    for (int m = 2; m <= i2_m_max; m += 2)
        for (int a = 1; a <= i2_a_max; ++a) {
            const Index2Subgroup H(m, a);
            const auto& T = H.table();
            for (std::size_t c = 0; c < T.num_characters(); ++c) {
                ++rep.count("index2_characters");
                if (m % T.conductor(c)) rep.fail(cat(index2_name(m, a), " character ", c, ": conductor ", T.conductor(c), " does not divide m"));
            }
            auto d = T.degrees();
            std::sort(d.begin(), d.end());
            if (d != index2_degrees(m, a)) rep.fail(cat(index2_name(m, a), ": degrees differ from the Clifford prediction"));
            if (tables) {
                ++rep.count("tables_certified");
                std::string why;
                if (!T.check_orthogonality(&why)) rep.fail(cat(index2_name(m, a), ": ", why));
            }
        }
}

// -- cor74 -----------------------------------------------------------------

/// d-core by removing rim hooks cell by cell on the Young diagram.
inline Partition diagram_core(Partition la, int d) {
    for (;;) {
        bool removed = false;
        const auto& p = la.parts();
        for (int i = 0; i < la.length() && !removed; ++i)
            for (int j = 0; j < p[static_cast<std::size_t>(i)] && !removed; ++j) {
                if (la.hook(i, j) != d) continue;
                // rows i..i+leg lose the rim: row k takes row k+1 minus one, the last row keeps j cells
                const int leg = la.conjugate()[static_cast<std::size_t>(j)] - i - 1;
                std::vector<int> q = p;
                for (int k = i; k < i + leg; ++k) q[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k + 1)] - 1;
                q[static_cast<std::size_t>(i + leg)] = j;
                la = Partition::from_unsorted(q);
                removed = true;
            }
        if (!removed) return la;
    }
}

inline void cor74(CheckReport& rep, SuiteParams& P) {
    const auto n_max = P.get(rep, "n_max", 12, 0, 16);
    const auto d_max = P.get(rep, "d_max", 12, 2, 24);
    for (int n = 0; n <= n_max; ++n) {
        const auto parts = partitions_of(n);
        std::map<Partition, Partition> two;
        for (const auto& la : parts) {
            two[la] = two_core(la);
            if (two[la] != diagram_core(la, 2)) rep.fail(cat("2-core routes differ at ", la.to_string()));
        }
        for (int d = 2; d <= d_max; d += 2) {
            std::map<Partition, Partition> by_core;  // d-core -> 2-core of the first member
            for (const auto& la : parts) {
                const auto core = d_core(la, d).core;
                if (core != diagram_core(la, d)) rep.fail(cat(d, "-core routes differ at ", la.to_string()));
                auto [it, fresh] = by_core.emplace(core, two[la]);
                if (!fresh) {
                    ++rep.count("pairs");
                    if (it->second != two[la]) rep.fail(cat("equal ", d, "-cores but different 2-cores: ", la.to_string(), " core ", core.to_string()));
                }
                // every d-hook move factors through 2-hook moves
                const auto beta = beta_set(la, std::max(1, la.length()));
                for (int bead : beta.beads()) {
                    if (!beta.can_remove(bead, d)) continue;
                    ++rep.count("decompositions");
                    const auto steps = decompose_d_hook(beta, bead, d);
                    BetaSet cur = beta;
                    bool ok = static_cast<int>(steps.size()) == d / 2;
                    for (const auto& s : steps) {
                        if (!cur.can_remove(s.bead, 2)) {
                            ok = false;
                            break;
                        }
                        cur = remove_rim_hook(cur, s.bead, 2);
                        if (!(cur == s.after)) ok = false;
                    }
                    if (!ok || !(cur == remove_rim_hook(beta, bead, d)))
                        rep.fail(cat("decomposition does not recompose: ", la.to_string(), " bead ", bead, " d=", d));
                }
            }
        }
    }
}

// -- lemma72 ---------------------------------------------------------------

inline void lemma72(CheckReport& rep, SuiteParams& P) {
    const auto rank_max = P.get(rep, "rank_max", 6, 0, 8);
    const auto defect_max = P.get(rep, "defect_max", 3, 0, 5);
    const auto d_max = P.get(rep, "d_max", 7, 1, 15);
    std::vector<int> ds;
    for (int d = 1; d <= d_max; d += 2) ds.push_back(d);
    for (int rank = 0; rank <= rank_max; ++rank)
        for (int D = 0; D <= defect_max; ++D) {
            const auto syms = symbols_of_rank(rank, D);
            std::vector<int> staircase(static_cast<std::size_t>(D));
            std::iota(staircase.begin(), staircase.end(), 0);
            const SymbolBCD expected_one_core(staircase, {});
            for (int d : ds) {
                std::map<SymbolBCD, SymbolBCD> by_core;
                for (const auto& S : syms) {
                    ++rep.count("symbol_checks");
                    const auto core = symbol_d_core(S, d);
                    const auto one = symbol_d_core(S, 1);
                    if (one != expected_one_core) rep.fail(cat("1-core of ", S.to_string(), " is ", one.to_string()));
                    SymbolBCD explored;
                    if (!symbol_core_order_independent(S, d, &explored) || explored != core)
                        rep.fail(cat(d, "-core of ", S.to_string(), " depends on the removal order"));
                    auto [it, fresh] = by_core.emplace(core, one);
                    if (!fresh) {
                        ++rep.count("pairs");
                        if (it->second != one) rep.fail(cat("equal ", d, "-cores but different 1-cores: ", S.to_string()));
                    }
                }
            }
        }
    // Frobenius eigenvalues constant along the same series
    const auto c76 = corollary76_consistency(static_cast<int>(rank_max), ds, static_cast<int>(defect_max));
    rep.count("frobenius_pairs") += static_cast<std::int64_t>(c76.pairs_checked);
    for (const auto& v : c76.counterexamples) rep.fail("Frobenius sign: " + v);
}

// -- prop75 ----------------------------------------------------------------

inline void prop75(CheckReport& rep, SuiteParams& P) {
    const auto n_max = P.get(rep, "n_max", 10, 1, 14);
    const auto ell_max = P.get(rep, "ell_max", 31, 3, 200);
    const auto q_max = P.get(rep, "q_max", 9, 2, 64);
    const auto r_max = P.get(rep, "r_max", 2, 1, 6);
    const auto graph_n_max = P.get(rep, "graph_n_max", 12, 0, 16);
    for (int n = 1; n <= n_max; ++n)
        for (auto ell : odd_primes_up_to(ell_max))
            for (auto q : prime_powers_up_to(q_max)) {
                if (q % ell == 0) continue;
                const auto Q = PrimePower::from_value(q);
                for (int eps : {1, -1})
                    for (int r = 1; r <= r_max; ++r) {
                        if (r % ell == 0) continue;
                        const auto R = check_prop75(eps, n, ell, Q, r);
                        rep.count("partitions") += static_cast<std::int64_t>(R.rows.size());
                        for (const auto& row : R.rows)
                            if (!row.equal)
                                rep.fail(cat("field of ", row.lambda.to_string(), " differs from its ", R.d_prime, "-core ", row.core.to_string(), ": eps=", eps,
                                             " ell=", ell, " q=", q, " r=", r, " (", row.field_lambda.to_string(), " vs ", row.field_core.to_string(), ")"));
                    }
            }
    // graph-automorphism field is a function of the 2-core
    for (int n = 0; n <= graph_n_max; ++n)
        for (const auto& la : partitions_of(n))
            for (int eps : {1, -1}) {
                ++rep.count("graph_field_checks");
                if (graph_extension_field_typeA(eps, la) != graph_extension_field_typeA(eps, two_core(la)))
                    rep.fail(cat("graph field of ", la.to_string(), " differs from its 2-core, eps=", eps));
            }
}

// -- table1 ----------------------------------------------------------------

inline void table1(CheckReport& rep, SuiteParams&, const SuiteOptions& opt) {
    const auto t = opt.table1_path.empty() ? load_table1() : load_table1(opt.table1_path);
    const auto R = table1_consistency(t);
    rep.count("rows") += static_cast<std::int64_t>(R.rows_checked);
    rep.count("exceptions") += static_cast<std::int64_t>(R.exceptions_checked);
    rep.count("sweep_cases") += static_cast<std::int64_t>(R.sweep_cases);
    for (const auto& v : R.violations) rep.fail(v);
}

// -- cor55 -----------------------------------------------------------------

inline void cor55(CheckReport& rep, SuiteParams& P) {
    const auto p_max = P.get(rep, "p_max", 23, 2, 60);
    const auto e_max = P.get(rep, "e_max", 2, 1, 4);
    const auto n_max = P.get(rep, "n_max", 6, 2, 10);
    for (auto p : primes_up_to(p_max))
        for (int e = 1; e <= e_max; ++e)
            for (int n = 2; n <= n_max; ++n)
                for (std::int64_t k = 1; k < p; ++k) {
                    ++rep.count("cases");
                    const auto R = verify_cor55a_detail(n, p, e, k);
                    const std::string where = cat("n=", n, " p=", p, " e=", e, " k=", k);
                    if (!R.holds) rep.fail("Lang image " + R.lang.to_string() + " differs from the Jacobi formula " + R.expected.to_string() + " at " + where);
                    if (!R.central) rep.fail("Lang image not central at " + where);
                    if (!R.key_identity) rep.fail("c^{2(q-1)} != 1 at " + where);
                    if (!R.entrywise) rep.fail("Lang image differs from the entrywise (q-1)-th power at " + where);
                }
}

// -- weyl-match ------------------------------------------------------------

inline void weyl_match(CheckReport& rep, SuiteParams& P) {
    const auto rank_max = P.get(rep, "rank_max", 5, 1, 5);
    const auto rank_max_d = P.get(rep, "rank_max_d", 4, 2, 5);
    const auto tables = P.get(rep, "table_sanity", 1, 0, 1);
    for (const auto& cs : weyl_sweep_cases(static_cast<int>(rank_max), static_cast<int>(rank_max_d))) {
        const std::string name = cat(cs.phi == Twist::None ? "" : "twisted ", to_string(cs.type), cs.rank);
        for (int d = 1; d <= weyl_max_d(cs.type, cs.rank); ++d) {
            const int a = a_from_degrees(cs.type, cs.rank, cs.phi, d);
            const auto R = relative_weyl_group(cs.type, cs.rank, d, cs.phi);
            if (R.a_d != a) rep.fail(cat(name, " d=", d, ": eigenspace dimension ", R.a_d, " but degrees give ", a));
            if (a == 0) continue;
            ++rep.count("cases");
            if (!matches_wreath_prediction(R))
                rep.fail(cat(name, " d=", d, ": order ", R.order, " does not match ", R.shape.to_string()));
            if (!R.all_hd_fixed) rep.fail(cat(name, " d=", d, ": a character of W_d is not H_[d]-fixed"));
            rep.count("characters") += static_cast<std::int64_t>(R.table.num_characters());
            if (tables) {
                std::string why;
                if (!R.table.check_orthogonality(&why)) rep.fail(cat(name, " d=", d, ": ", why));
            }
        }
    }
}

}  // namespace suites

/// Run one named suite.  Throws std::invalid_argument for an unknown suite or
/// an invalid parameter.
inline CheckReport run_suite(const std::string& name, SuiteParams params = {}, const SuiteOptions& opt = {}) {
    const auto& keys = suite_param_keys(name);
    for (auto& [k, v] : params.overrides())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw std::invalid_argument("invalid parameter '" + k + "' for suite " + name);
    CheckReport rep;
    rep.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    if (name == "lemma22") suites::lemma22(rep, params);
    else if (name == "lemma71") suites::lemma71(rep, params);
    else if (name == "lemma82") suites::lemma82(rep, params);
    else if (name == "thm41") suites::thm41(rep, params);
    else if (name == "lemma42") suites::lemma42(rep, params, opt);
    else if (name == "cor74") suites::cor74(rep, params);
    else if (name == "lemma72") suites::lemma72(rep, params);
    else if (name == "prop75") suites::prop75(rep, params);
    else if (name == "table1") suites::table1(rep, params, opt);
    else if (name == "cor55") suites::cor55(rep, params);
    else if (name == "weyl-match") suites::weyl_match(rep, params);
    else throw std::invalid_argument("unknown suite '" + name + "'");
    params.finish(name);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline CheckReport run_suite(const std::string& name, const std::string& params, const SuiteOptions& opt = {}) {
    return run_suite(name, SuiteParams::parse(params), opt);
}

/// Several suites, up to jobs at a time; results come back in request order.
inline std::vector<CheckReport> run_suites(const std::vector<std::string>& names, const std::map<std::string, SuiteParams>& params, const SuiteOptions& opt,
                                           unsigned jobs = 1) {
    std::vector<CheckReport> out(names.size());
    jobs = std::max(1u, jobs);
    for (std::size_t start = 0; start < names.size(); start += jobs) {
        std::vector<std::future<CheckReport>> batch;
        for (std::size_t i = start; i < std::min(names.size(), start + jobs); ++i) {
            const auto it = params.find(names[i]);
            SuiteParams p = it == params.end() ? SuiteParams{} : it->second;
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [&, i, p]() mutable { return run_suite(names[i], p, opt); }));
        }
        for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
    }
    return out;
}

inline nlohmann::ordered_json report_json(const std::vector<CheckReport>& reps, bool with_time = false) {
    nlohmann::ordered_json j;
    j["format"] = "galrep-report";
    j["version"] = kReportSchemaVersion;
    bool pass = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reps) {
        pass = pass && r.pass();
        arr.push_back(r.to_json(with_time));
    }
    j["status"] = pass ? "pass" : "fail";
    j["suites"] = arr;
    return j;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}
}  // namespace detail

/// Long format: suite,section,key,value.
inline std::string report_csv(const std::vector<CheckReport>& reps) {
    std::ostringstream os;
    os << "suite,section,key,value\n";
    for (const auto& r : reps) {
        const auto s = detail::csv_field(r.name);
        os << s << ",status,," << r.status() << "\n";
        for (auto& [k, v] : r.params) os << s << ",param," << detail::csv_field(k) << "," << v << "\n";
        for (auto& [k, v] : r.counts) os << s << ",count," << detail::csv_field(k) << "," << v << "\n";
        os << s << ",count,counterexample_total," << r.counterexample_total << "\n";
        for (std::size_t i = 0; i < r.counterexamples.size(); ++i) os << s << ",counterexample," << i << "," << detail::csv_field(r.counterexamples[i]) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Queries

struct QueryResult {
    std::string text;
    nlohmann::ordered_json json;
};

inline const std::vector<std::string>& query_kinds() {
    static const std::vector<std::string> kinds{"d-core", "2-core", "symbol-core", "conductor", "generic-degree", "weyl", "field"};
    return kinds;
}

namespace detail {

/// Whitespace-separated tokens: key=value pairs plus positional words.
struct QueryArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> kv;
    std::set<std::string> used;

    explicit QueryArgs(const std::string& text) {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) positional.push_back(tok);
            else kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    std::string str(const std::string& key, std::size_t pos_index = std::string::npos) {
        if (auto it = kv.find(key); it != kv.end()) {
            used.insert(key);
            return it->second;
        }
        if (pos_index < positional.size()) return positional[pos_index];
        throw std::invalid_argument("malformed query: missing " + key);
    }
    std::string str_or(const std::string& key, const std::string& fallback) { return kv.count(key) ? str(key) : fallback; }
    std::int64_t integer(const std::string& key, std::size_t pos_index = std::string::npos) {
        const std::string s = str(key, pos_index);
        std::size_t used_chars = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used_chars);
        } catch (const std::exception&) {
            used_chars = 0;
        }
        if (used_chars == 0 || used_chars != s.size()) throw std::invalid_argument("malformed query: " + key + " is not an integer");
        return v;
    }
    void finish() const {
        for (auto& [k, v] : kv)
            if (!used.count(k)) throw std::invalid_argument("malformed query: unexpected key " + k);
    }
};

inline Partition parse_partition_arg(const std::string& s) {
    try {
        return Partition::parse(s);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed partition '") + s + "': " + e.what());
    }
}

/// "((2),(),(1))": comma-separated partitions inside one pair of parentheses.
inline Multipartition parse_multipartition(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("malformed multipartition '" + s + "'");
    std::vector<Partition> parts;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw std::invalid_argument("malformed multipartition '" + s + "'");
        if (c == ',' && depth == 0) {
            parts.push_back(parse_partition_arg(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw std::invalid_argument("malformed multipartition '" + s + "'");
    parts.push_back(parse_partition_arg(cur));
    return Multipartition(std::move(parts));
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("malformed integer list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

inline Twist parse_twist(const std::string& s, WeylType t) {
    if (s == "none" || s == "1") return Twist::None;
    if (s == "graph" || s == "2") {
        if (t == WeylType::A) return Twist::TypeA;
        if (t == WeylType::D) return Twist::TypeD;
    }
    throw std::invalid_argument("malformed query: twist '" + s + "' not defined for this type");
}

}  // namespace detail

/// One-shot computation.  Throws std::invalid_argument on an unknown kind or malformed arguments.
inline QueryResult query(const std::string& kind, const std::string& args) {
    detail::QueryArgs A(args);
    QueryResult R;
    R.json["kind"] = kind;
    R.json["args"] = args;
    if (kind == "d-core" || kind == "2-core") {
        const auto la = detail::parse_partition_arg(A.str("lambda", 0));
        const auto d = kind == "2-core" ? 2 : A.integer("d", 1);
        if (d < 1) throw std::invalid_argument("malformed query: d must be positive");
        const auto c = d_core(la, static_cast<int>(d));
        R.text = c.core.to_string();
        R.json["value"] = R.text;
        R.json["weight"] = c.weight;
    } else if (kind == "symbol-core") {
        const auto d = A.integer("d");
        if (d < 1 || d % 2 == 0) throw std::invalid_argument("malformed query: d must be odd and positive");
        const SymbolBCD S(detail::parse_int_list(A.str("row1")), detail::parse_int_list(A.str_or("row2", "")));
        const auto c = symbol_d_core(S, static_cast<int>(d));
        R.text = c.to_string();
        R.json["value"] = R.text;
        R.json["rank"] = c.rank();
        R.json["defect"] = c.defect();
    } else if (kind == "conductor") {
        const auto L = detail::parse_multipartition(A.str("label", 0));
        const auto c = conductor_of_char(L, L.m(), L.size());
        R.text = std::to_string(c);
        R.json["value"] = c;
        R.json["degree"] = wreath_degree(L);
    } else if (kind == "generic-degree") {
        const auto la = detail::parse_partition_arg(A.str("lambda", 0));
        R.text = generic_degree_typeA(la).to_string();
        R.json["value"] = R.text;
    } else if (kind == "weyl") {
        const auto type = parse_weyl_type(A.str("type"));
        const auto rank = A.integer("rank");
        const auto d = A.integer("d");
        const auto phi = detail::parse_twist(A.str_or("twist", "none"), type);
        if (rank < 1 || rank > 7 || d < 1) throw std::invalid_argument("malformed query: rank or d out of range");
        const auto W = relative_weyl_group(type, static_cast<int>(rank), static_cast<int>(d), phi);
        if (W.a_d == 0) {
            R.text = "no " + std::to_string(d) + "-regular element";
        } else {
            R.text = "order " + std::to_string(W.order) + ", " + W.shape.to_string() + (matches_wreath_prediction(W) ? ", matches" : ", does not match");
            R.json["order"] = W.order;
            R.json["shape"] = W.shape.to_string();
            R.json["degrees"] = W.degrees;
            R.json["matches"] = matches_wreath_prediction(W);
            R.json["hd_fixed"] = W.all_hd_fixed;
        }
        R.json["a_d"] = W.a_d;
        R.json["value"] = R.text;
    } else if (kind == "field") {
        const auto eps = A.integer("eps");
        if (eps != 1 && eps != -1) throw std::invalid_argument("malformed query: eps must be 1 or -1");
        const auto la = detail::parse_partition_arg(A.str("lambda"));
        const auto ell = A.integer("ell");
        const auto q = A.integer("q");
        const auto r = A.integer("r");
        if (r < 1) throw std::invalid_argument("malformed query: r must be positive");
        const auto F = extension_field_typeA(static_cast<int>(eps), la, ell, PrimePower::from_value(q), static_cast<int>(r));
        R.text = F.to_string();
        R.json["value"] = R.text;
        R.json["trivial"] = F.trivial_over_Qell();
    } else {
        throw std::invalid_argument("unknown query kind '" + kind + "'");
    }
    A.finish();
    return R;
}

}  // namespace galrep
