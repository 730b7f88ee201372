#pragma once

// Two-row symbols for unipotent characters of types B, C and D.
//
// Rows are strictly increasing.  The shift (prepend 0 to both rows, add 1 to
// every other entry) is undone until the rows no longer both start with 0.
// Rows are unordered: the longer row is stored first, equal-length rows are
// stored in lexicographic order.
//
// Rank convention: sum of entries minus floor(((N-1)/2)^2), N = total entries.
// This is shift invariant and gives rank = |alpha| + |beta| + c_D with
// c_D = 0, 0, 1, 2 for defect D = 0, 1, 2, 3.

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace galrep {

class SymbolBCD {
   public:
    SymbolBCD() = default;
    SymbolBCD(std::vector<int> row1, std::vector<int> row2) : r1_(std::move(row1)), r2_(std::move(row2)) {
        check_row(r1_);
        check_row(r2_);
        normalize();
    }

    /// Symbol with rows the beta-sets of alpha (length b + D) and beta (length b).
    static SymbolBCD from_partitions(const Partition& alpha, const Partition& beta, int defect) {
        if (defect < 0) throw std::invalid_argument("SymbolBCD: defect must be non-negative");
        int b = std::max({beta.length(), alpha.length() - defect, 0});
        return SymbolBCD(ascending(beta_set(alpha, b + defect)), ascending(beta_set(beta, b)));
    }

    const std::vector<int>& row1() const noexcept { return r1_; }
    const std::vector<int>& row2() const noexcept { return r2_; }
    int defect() const noexcept { return static_cast<int>(r1_.size() - r2_.size()); }
    bool degenerate() const noexcept { return r1_ == r2_; }

    int rank() const {
        long long s = std::accumulate(r1_.begin(), r1_.end(), 0LL) + std::accumulate(r2_.begin(), r2_.end(), 0LL);
        long long n = static_cast<long long>(r1_.size() + r2_.size());
        // floor(((n-1)/2)^2) = floor((n-1)^2 / 4)
        long long c = n == 0 ? 0 : ((n - 1) * (n - 1)) / 4;
        return static_cast<int>(s - c);
    }

    /// The pair (alpha, beta) read off the rows.
    std::pair<Partition, Partition> partitions() const {
        return {BetaSet(r1_).partition(), BetaSet(r2_).partition()};
    }

    std::string to_string() const {
        auto row = [](const std::vector<int>& r) {
            std::ostringstream os;
            os << "{";
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "}";
            return os.str();
        };
        return "(" + row(r1_) + "," + row(r2_) + ")";
    }

    friend bool operator==(const SymbolBCD&, const SymbolBCD&) = default;
    friend auto operator<=>(const SymbolBCD&, const SymbolBCD&) = default;

   private:
    static std::vector<int> ascending(const BetaSet& b) {
        std::vector<int> v = b.beads();
        std::reverse(v.begin(), v.end());
        return v;
    }
    static void check_row(const std::vector<int>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0) throw std::invalid_argument("SymbolBCD: entries must be non-negative");
            if (i > 0 && r[i] <= r[i - 1]) throw std::invalid_argument("SymbolBCD: rows must be strictly increasing");
        }
    }
    void normalize() {
        while (!r1_.empty() && !r2_.empty() && r1_.front() == 0 && r2_.front() == 0) {
            r1_.erase(r1_.begin());
            r2_.erase(r2_.begin());
            for (int& x : r1_) --x;
            for (int& x : r2_) --x;
        }
        if (r1_.size() < r2_.size() || (r1_.size() == r2_.size() && r2_ < r1_)) std::swap(r1_, r2_);
    }

    std::vector<int> r1_, r2_;
};

/// Move entry down by d inside one row (1 = first stored row).
inline SymbolBCD remove_symbol_hook(const SymbolBCD& S, int row, int entry, int d) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("remove_symbol_hook: d must be odd and positive");
    if (row != 1 && row != 2) throw std::invalid_argument("remove_symbol_hook: row must be 1 or 2");
    std::vector<int> r1 = S.row1(), r2 = S.row2();
    std::vector<int>& r = row == 1 ? r1 : r2;
    auto has = [&](int x) { return std::find(r.begin(), r.end(), x) != r.end(); };
    if (!has(entry)) throw RimHookError(RimHookErrorKind::MissingBead, "remove_symbol_hook: entry not in row");
    if (entry - d < 0) throw RimHookError(RimHookErrorKind::NegativeBead, "remove_symbol_hook: entry would become negative");
    if (has(entry - d)) throw RimHookError(RimHookErrorKind::Collision, "remove_symbol_hook: target occupied");
    for (int& x : r)
        if (x == entry) x = entry - d;
    std::sort(r.begin(), r.end());
    return SymbolBCD(r1, r2);
}

namespace detail {
inline std::vector<int> row_core(std::vector<int> r, int d) {
    // each residue class mod d is a runner; push its beads to the bottom
    std::vector<int> out;
    for (int c = 0; c < d; ++c) {
        int cnt = 0;
        for (int x : r)
            if (x % d == c) ++cnt;
        for (int k = 0; k < cnt; ++k) out.push_back(c + k * d);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace detail

/// Odd d: hooks stay inside a row, so the core is the row-wise beta-set core.
inline SymbolBCD symbol_d_core(const SymbolBCD& S, int d) {
    if (d < 1 || d % 2 == 0) throw std::invalid_argument("symbol_d_core: d must be odd and positive");
    return SymbolBCD(detail::row_core(S.row1(), d), detail::row_core(S.row2(), d));
}

/// Exhaustive exploration of every removal order; true iff all end in one symbol.
inline bool symbol_core_order_independent(const SymbolBCD& S, int d, SymbolBCD* core_out = nullptr) {
    std::set<SymbolBCD> seen{S}, terminals;
    std::vector<SymbolBCD> stack{S};
    while (!stack.empty()) {
        SymbolBCD cur = stack.back();
        stack.pop_back();
        bool terminal = true;
        for (int row = 1; row <= 2; ++row) {
            const auto& r = row == 1 ? cur.row1() : cur.row2();
            for (int x : r) {
                if (x - d < 0 || std::find(r.begin(), r.end(), x - d) != r.end()) continue;
                terminal = false;
                SymbolBCD nxt = remove_symbol_hook(cur, row, x, d);
                if (seen.insert(nxt).second) stack.push_back(nxt);
            }
        }
        if (terminal) terminals.insert(cur);
    }
    if (core_out && !terminals.empty()) *core_out = *terminals.begin();
    return terminals.size() == 1;
}

inline bool same_series_odd_d(const SymbolBCD& a, const SymbolBCD& b, int d) {
    if (a.rank() != b.rank()) throw std::invalid_argument("same_series_odd_d: ranks differ");
    return symbol_d_core(a, d) == symbol_d_core(b, d);
}

/// c_D in rank = |alpha| + |beta| + c_D.
inline int defect_offset(int defect) { return (defect * defect) / 4; }

/// Non-degenerate symbols of the given rank and defect, sorted.
inline std::vector<SymbolBCD> symbols_of_rank(int rank, int defect) {
    std::set<SymbolBCD> out;
    const int n = rank - defect_offset(defect);
    if (n < 0) return {};
    for (int k = 0; k <= n; ++k)
        for (const auto& alpha : partitions_of(k))
            for (const auto& beta : partitions_of(n - k)) {
                SymbolBCD s = SymbolBCD::from_partitions(alpha, beta, defect);
                if (!s.degenerate()) out.insert(s);
            }
    return {out.begin(), out.end()};
}

}  // namespace galrep
