#pragma once

// Small permutation groups enumerated in full, optionally modulo a normal
// subgroup (elements are then canonical coset representatives).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace galrep {

using Perm = std::vector<std::uint8_t>;

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline Perm perm_identity(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// (a*b)(x) = a(b(x)).
inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline Perm perm_inv(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

class FiniteGroup {
   public:
    using Canon = std::function<Perm(const Perm&)>;

    /// Closure of the generators.  If canon is set it must map each element to a
    /// fixed representative of its coset modulo some normal subgroup.
    FiniteGroup(std::vector<Perm> gens, std::size_t degree, Canon canon = {}, std::size_t limit = 200000)
        : canon_(std::move(canon)) {
        for (auto& g : gens) {
            if (g.size() != degree) throw std::invalid_argument("FiniteGroup: generator degree mismatch");
            gens_.push_back(c(g));
        }
        add(c(perm_identity(degree)));
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            for (const auto& g : gens_) {
                Perm x = c(perm_mul(elems_[i], g));
                if (!index_.count(x)) {
                    if (elems_.size() >= limit) throw std::length_error("FiniteGroup: group too large");
                    add(std::move(x));
                }
            }
        }
    }

    std::size_t size() const noexcept { return elems_.size(); }
    const Perm& element(std::size_t i) const { return elems_[i]; }
    const std::vector<Perm>& elements() const noexcept { return elems_; }
    const std::vector<Perm>& generators() const noexcept { return gens_; }

    std::size_t index_of(const Perm& p) const {
        auto it = index_.find(c(p));
        if (it == index_.end()) throw std::out_of_range("FiniteGroup: element not in group");
        return it->second;
    }
    bool contains(const Perm& p) const { return index_.count(c(p)) > 0; }

    std::size_t mul(std::size_t i, std::size_t j) const { return index_of(perm_mul(elems_[i], elems_[j])); }
    std::size_t inv(std::size_t i) const { return index_of(perm_inv(elems_[i])); }
    std::size_t identity() const noexcept { return 0; }

    std::size_t pow(std::size_t i, std::int64_t e) const {
        std::size_t r = identity();
        for (std::int64_t k = 0; k < e; ++k) r = mul(r, i);
        return r;
    }
    std::int64_t order_of(std::size_t i) const {
        std::int64_t o = 1;
        std::size_t x = i;
        while (x != identity()) {
            x = mul(x, i);
            ++o;
        }
        return o;
    }

    /// Conjugacy classes, ordered by their first element in enumeration order.
    std::vector<std::vector<std::size_t>> conjugacy_classes() const {
        std::vector<int> cls(size(), -1);
        std::vector<std::vector<std::size_t>> out;
        std::vector<Perm> ginv;
        for (auto& g : gens_) ginv.push_back(perm_inv(g));
        for (std::size_t i = 0; i < size(); ++i) {
            if (cls[i] >= 0) continue;
            int id = static_cast<int>(out.size());
            out.push_back({i});
            cls[i] = id;
            for (std::size_t t = 0; t < out.back().size(); ++t) {
                const Perm& x = elems_[out.back()[t]];
                for (std::size_t g = 0; g < gens_.size(); ++g) {
                    std::size_t y = index_of(perm_mul(perm_mul(gens_[g], x), ginv[g]));
                    if (cls[y] < 0) {
                        cls[y] = id;
                        out.back().push_back(y);
                    }
                }
            }
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    }

   private:
    Perm c(const Perm& p) const { return canon_ ? canon_(p) : p; }
    void add(Perm p) {
        index_.emplace(p, elems_.size());
        elems_.push_back(std::move(p));
    }

    Canon canon_;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;
    std::unordered_map<Perm, std::size_t, PermHash> index_;
};

}  // namespace galrep
