#pragma once

// Orthogonality of large C_m wr S_a tables by reduction modulo primes
// P = 1 mod m, sending zeta_m to an element omega of order m in F_P.
//
// Each Gram entry x = sum_C |C| chi_i(C) conj(chi_j(C)) - |G| delta_ij is an
// algebraic integer.  Writing a value as sum_e v_e zeta^e, every complex
// embedding of it is at most a = sum_e |v_e|, so by Cauchy-Schwarz every
// embedding of x is at most B = max_i sum_C |C| a_iC^2 + |G|.  The check
// shows x = 0 modulo the prime ideal picked by omega, and that
// omega -> omega^k permutes the rows, which carries the congruence to every
// prime ideal above P.  So x lies in P O, its norm is divisible by P^phi(m),
// and P > B forces x = 0.  Row orthogonality of a square table gives the
// column relations too (X D X* = |G| I makes X invertible).
//
// Residues are below P < 2^24 and n < 2^12, so the dot products are summed in
// plain uint64 without intermediate reduction.

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "wreath.hpp"

namespace galrep {

struct OrthogonalityCertificate {
    bool ok = false;
    std::int64_t prime = 0;
    std::int64_t bound = 0;
    std::string why;
};

namespace detail {

inline std::int64_t element_of_order(std::int64_t m, std::int64_t P) {
    for (std::int64_t g = 2; g < P; ++g) {
        const std::int64_t w = pow_mod(g, (P - 1) / m, P);
        bool exact = true;
        for (std::int64_t q : divisors(m))
            if (q < m && pow_mod(w, q, P) == 1) exact = false;
        if (exact) return w;
    }
    throw std::logic_error("element_of_order: none found");
}

/// out[r] = sum_k a_r[k] b[k] for four rows a_r; runtime dispatch picks the widest SIMD.
__attribute__((target_clones("avx512f", "avx2", "default"))) inline void dot4(const std::uint32_t* a, std::size_t stride, const std::uint32_t* b,
                                                                                 std::size_t n, std::uint64_t* out) {
    std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    const std::uint32_t *a0 = a, *a1 = a + stride, *a2 = a + 2 * stride, *a3 = a + 3 * stride;
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t x = b[k];
        s0 += a0[k] * x;
        s1 += a1[k] * x;
        s2 += a2[k] * x;
        s3 += a3[k] * x;
    }
    out[0] = s0;
    out[1] = s1;
    out[2] = s2;
    out[3] = s3;
}

}  // namespace detail

inline OrthogonalityCertificate wreath_orthogonality_certificate(const WreathTable& T, unsigned threads = 1) {
    OrthogonalityCertificate C;
    const int m = T.m();
    const std::size_t n = T.size(), mm = static_cast<std::size_t>(m);
    const std::int64_t order = wreath_order(m, T.a());

    std::vector<std::vector<std::int64_t>> columns(n);
    std::vector<std::int64_t> sizes(n), weight(n, 0);
    std::int64_t sq = 0;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& cls = T.classes()[c];
        columns[c] = T.column(cls);
        sizes[c] = wreath_class_size(cls);
        const bool identity = cls.parts[0].size() == T.a() && cls.parts[0].length() == T.a();
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t a = 0;
            for (std::size_t e = 0; e < mm; ++e) a += std::llabs(columns[c][i * mm + e]);
            weight[i] += sizes[c] * a * a;
            if (identity) sq += columns[c][i * mm] * columns[c][i * mm];
        }
    }
    if (sq != order) {
        C.why = "sum of squared degrees is " + std::to_string(sq);
        return C;
    }
    C.bound = *std::max_element(weight.begin(), weight.end()) + order;
    std::int64_t P = (C.bound / m + 1) * m + 1;
    while (!is_prime(P)) P += m;
    C.prime = P;
    if (P >= (std::int64_t{1} << 24) || n >= (std::size_t{1} << 12)) {
        C.why = "table too large for single-word accumulation";
        return C;
    }

    const auto units = unit_residues(m);
    std::vector<std::vector<std::size_t>> perm(units.size(), std::vector<std::size_t>(n));
    std::size_t conj_unit = 0;
    for (std::size_t u = 0; u < units.size(); ++u) {
        if (units[u] == mod_floor(-1, m)) conj_unit = u;
        for (std::size_t i = 0; i < n; ++i) perm[u][i] = T.label_index(galois_label(T.labels()[i], units[u]));
    }
    std::vector<std::size_t> inv_perm(n);
    for (std::size_t i = 0; i < n; ++i) inv_perm[perm[conj_unit][i]] = i;

    const std::int64_t omega = detail::element_of_order(m, P);
    std::vector<std::vector<std::int64_t>> wpow(units.size(), std::vector<std::int64_t>(mm));
    for (std::size_t u = 0; u < units.size(); ++u)
        for (std::size_t e = 0; e < mm; ++e) wpow[u][e] = pow_mod(omega, units[u] * static_cast<std::int64_t>(e), P);

    // rows padded to a multiple of four so the kernel never reads past the end
    const std::size_t rows = (n + 3) / 4 * 4;
    std::vector<std::uint32_t> X(rows * n, 0), Y(rows * n, 0);  // [label][class]
    std::vector<std::int64_t> r(units.size() * n);
    for (std::size_t c = 0; c < n; ++c) {
        const auto& col = columns[c];
        for (std::size_t u = 0; u < units.size(); ++u)
            for (std::size_t i = 0; i < n; ++i) {
                // |v_e| <= B < 2^24 and omega^e < 2^24: no overflow before reducing
                std::int64_t s = 0;
                for (std::size_t e = 0; e < mm; ++e) s += col[i * mm + e] * wpow[u][e];
                r[u * n + i] = mod_floor(s, P);
            }
        for (std::size_t u = 0; u < units.size(); ++u)
            for (std::size_t i = 0; i < n; ++i)
                if (r[u * n + i] != r[perm[u][i]]) {
                    C.why = "Galois action is not the label permutation at " + T.labels()[i].to_string() + ", k=" + std::to_string(units[u]);
                    return C;
                }
        const std::int64_t size = sizes[c] % P;
        for (std::size_t i = 0; i < n; ++i) {
            X[i * n + c] = static_cast<std::uint32_t>(r[i]);
            Y[i * n + c] = static_cast<std::uint32_t>(r[i] * size % P);
        }
    }

    // M = Y X^T is symmetric and M_ij is the Gram entry at (i, inv_perm[j])
    const std::int64_t target = order % P;
    auto expect = [&](std::size_t i, std::size_t j) -> std::int64_t { return inv_perm[j] == i ? target : 0; };
    threads = std::max(1u, threads);
    std::vector<std::string> failures(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            std::uint64_t out[4];
            for (std::size_t i0 = 4 * t; i0 < n && failures[t].empty(); i0 += 4 * threads)
                for (std::size_t j = i0; j < n; ++j) {
                    detail::dot4(&Y[i0 * n], n, &X[j * n], n, out);
                    for (std::size_t d = 0; d < 4 && i0 + d <= j; ++d) {
                        const std::size_t i = i0 + d;
                        const auto v = static_cast<std::int64_t>(out[d] % static_cast<std::uint64_t>(P));
                        if (v != expect(i, j) || v != expect(j, i)) {
                            failures[t] = "row orthogonality at " + T.labels()[i].to_string() + " " + T.labels()[inv_perm[j]].to_string();
                            break;
                        }
                    }
                    if (!failures[t].empty()) break;
                }
        });
    for (auto& th : pool) th.join();
    for (const auto& f : failures)
        if (!f.empty()) {
            C.why = f;
            return C;
        }
    C.ok = true;
    return C;
}

}  // namespace galrep
