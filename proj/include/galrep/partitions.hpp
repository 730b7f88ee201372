#pragma once

// Partitions, beta-sets, rim hooks and d-cores.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace galrep {

class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
    /// Sorts and drops zero parts before validating.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    /// Hook length of box (i, j), 0-based.
    int hook(int i, int j) const {
        Partition c = conjugate();
        return parts_[static_cast<std::size_t>(i)] - j + c[static_cast<std::size_t>(j)] - i - 1;
    }
    std::vector<int> hook_lengths() const {
        std::vector<int> out;
        Partition c = conjugate();
        for (int i = 0; i < length(); ++i)
            for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j)
                out.push_back(parts_[static_cast<std::size_t>(i)] - j + c[static_cast<std::size_t>(j)] - i - 1);
        return out;
    }
    /// n(lambda) = sum (i-1) lambda_i.
    int n_statistic() const {
        int s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
        return s;
    }
    bool is_staircase() const {
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i] != static_cast<int>(parts_.size() - i)) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }
    /// Accepts "(3,1)", "3,1", "" or "()".
    /// "(3,1)", "3,1", "()" or "".  Spaces are ignored.
    static Partition parse(const std::string& text) {
        std::string t;
        for (char ch : text)
            if (ch != ' ') t += ch;
        if (!t.empty() && t.front() == '(') {
            if (t.size() < 2 || t.back() != ')') throw std::invalid_argument("Partition::parse: unbalanced parentheses in '" + text + "'");
            t = t.substr(1, t.size() - 2);
        }
        std::vector<int> parts;
        if (t.empty()) return Partition(parts);
        std::string cur;
        for (char ch : t + ",") {
            if (ch == ',') {
                if (cur.empty() || cur.size() > 6) throw std::invalid_argument("Partition::parse: malformed part in '" + text + "'");
                parts.push_back(std::stoi(cur));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                cur += ch;
            } else {
                throw std::invalid_argument("Partition::parse: unexpected character in '" + text + "'");
            }
        }
        return Partition(parts);
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

   private:
    std::vector<int> parts_;
};

/// Number of standard Young tableaux, i.e. chi^lambda(1) for S_n.
inline std::int64_t hook_length_degree(const Partition& la) {
    if (la.size() > 30) throw std::overflow_error("hook_length_degree: n too large");
    __int128 num = 1, den = 1;
    for (int i = 2; i <= la.size(); ++i) num *= i;
    for (int h : la.hook_lengths()) den *= h;
    return static_cast<std::int64_t>(num / den);
}

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    rec(n, n);
    return out;
}

enum class RimHookErrorKind { MissingBead, NegativeBead, Collision, BadLength };

class RimHookError : public std::invalid_argument {
   public:
    RimHookError(RimHookErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    RimHookErrorKind kind() const noexcept { return kind_; }

   private:
    RimHookErrorKind kind_;
};

/// Distinct non-negative beads, kept strictly decreasing.
class BetaSet {
   public:
    BetaSet() = default;
    BetaSet(std::initializer_list<int> beads) : BetaSet(std::vector<int>(beads)) {}
    explicit BetaSet(std::vector<int> beads) : beads_(std::move(beads)) {
        std::sort(beads_.begin(), beads_.end(), std::greater<>());
        for (std::size_t i = 0; i < beads_.size(); ++i) {
            if (beads_[i] < 0) throw std::invalid_argument("BetaSet: beads must be non-negative");
            if (i > 0 && beads_[i] == beads_[i - 1]) throw std::invalid_argument("BetaSet: beads must be distinct");
        }
    }

    const std::vector<int>& beads() const noexcept { return beads_; }
    int length() const noexcept { return static_cast<int>(beads_.size()); }
    bool contains(int b) const { return std::binary_search(beads_.rbegin(), beads_.rend(), b); }

    Partition partition() const {
        std::vector<int> parts;
        const int L = length();
        for (int i = 0; i < L; ++i) {
            int p = beads_[static_cast<std::size_t>(i)] - (L - 1 - i);
            if (p > 0) parts.push_back(p);
        }
        return Partition(std::move(parts));
    }

    /// Add k staircase beads at the bottom.
    BetaSet shifted(int k) const {
        std::vector<int> b;
        for (int x : beads_) b.push_back(x + k);
        for (int i = k - 1; i >= 0; --i) b.push_back(i);
        return BetaSet(std::move(b));
    }

    /// Beads strictly between bead-d and bead: the leg length of the hook.
    int hook_height(int bead, int d) const {
        int h = 0;
        for (int x : beads_)
            if (x > bead - d && x < bead) ++h;
        return h;
    }

    bool can_remove(int bead, int d) const { return contains(bead) && bead - d >= 0 && !contains(bead - d); }

    std::string abacus(int d) const {
        std::ostringstream os;
        int top = beads_.empty() ? 0 : beads_.front();
        for (int row = 0; row * d <= top; ++row) {
            for (int c = 0; c < d; ++c) os << (contains(row * d + c) ? 'o' : '.');
            os << "\n";
        }
        return os.str();
    }

    /// Equality up to staircase shift.
    friend bool operator==(const BetaSet& a, const BetaSet& b) { return a.partition() == b.partition(); }

   private:
    std::vector<int> beads_;
};

inline BetaSet beta_set(const Partition& la, int length) {
    if (length < la.length()) throw std::invalid_argument("beta_set: length smaller than number of parts");
    std::vector<int> b;
    for (int i = 0; i < length; ++i) b.push_back(la[static_cast<std::size_t>(i)] + (length - 1 - i));
    return BetaSet(std::move(b));
}

inline BetaSet remove_rim_hook(const BetaSet& beta, int bead, int d) {
    if (d < 1) throw std::invalid_argument("remove_rim_hook: d must be positive");
    if (!beta.contains(bead)) throw RimHookError(RimHookErrorKind::MissingBead, "remove_rim_hook: bead not in beta-set");
    if (bead - d < 0) throw RimHookError(RimHookErrorKind::NegativeBead, "remove_rim_hook: bead would become negative");
    if (beta.contains(bead - d)) throw RimHookError(RimHookErrorKind::Collision, "remove_rim_hook: target position occupied");
    std::vector<int> b = beta.beads();
    for (int& x : b)
        if (x == bead) x = bead - d;
    return BetaSet(std::move(b));
}

struct CoreResult {
    Partition core;
    int weight = 0;
    friend bool operator==(const CoreResult&, const CoreResult&) = default;
};

/// Greedy removal of d-hooks from the top bead down.
inline CoreResult d_core(const Partition& la, int d) {
    if (d < 1) throw std::invalid_argument("d_core: d must be positive");
    std::vector<int> b = beta_set(la, la.length()).beads();
    std::set<int> s(b.begin(), b.end());
    int weight = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
            int x = *it;
            if (x - d >= 0 && !s.count(x - d)) {
                s.erase(x);
                s.insert(x - d);
                ++weight;
                moved = true;
                break;
            }
        }
    }
    return {BetaSet(std::vector<int>(s.begin(), s.end())).partition(), weight};
}

/// Explore every removal order; true iff all maximal paths end at the same core.
inline bool d_core_order_independent(const Partition& la, int d, Partition* core_out = nullptr) {
    std::set<Partition> seen{la}, terminals;
    std::vector<Partition> stack{la};
    while (!stack.empty()) {
        Partition cur = stack.back();
        stack.pop_back();
        BetaSet b = beta_set(cur, cur.length());
        bool terminal = true;
        for (int x : b.beads()) {
            if (!b.can_remove(x, d)) continue;
            terminal = false;
            Partition next = remove_rim_hook(b, x, d).partition();
            if (seen.insert(next).second) stack.push_back(next);
        }
        if (terminal) terminals.insert(cur);
    }
    if (core_out && !terminals.empty()) *core_out = *terminals.begin();
    return terminals.size() == 1;
}

inline Partition two_core(const Partition& la) { return d_core(la, 2).core; }

struct TwoHookStep {
    int bead;       // bead moved down by 2
    BetaSet after;  // beta-set after the move
};

/// Factor the removal of the d-hook at bead into d/2 removals of 2-hooks.
/// Works on the beta-set of length max(1, number of parts).
inline std::vector<TwoHookStep> decompose_d_hook(const BetaSet& beta, int bead, int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("decompose_d_hook: d must be even and positive");
    BetaSet cur = beta;
    // validate the full move up front so a bad request raises the rim-hook error
    (void)remove_rim_hook(beta, bead, d);
    std::vector<TwoHookStep> steps;
    int top = bead, span = d;
    while (span > 0) {
        int d1 = span - 2;
        while (d1 > 0 && !cur.contains(top - d1)) d1 -= 2;
        // slide the bead at top-d1 down to top-span; every slot on the way is free
        for (int x = top - d1; x > top - span; x -= 2) {
            cur = remove_rim_hook(cur, x, 2);
            steps.push_back({x, cur});
        }
        span = d1;
    }
    return steps;
}

inline std::vector<TwoHookStep> decompose_d_hook(const Partition& la, int bead, int d) {
    return decompose_d_hook(beta_set(la, std::max(1, la.length())), bead, d);
}

}  // namespace galrep
