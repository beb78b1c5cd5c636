#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"
#include "hecke/poly.hpp"

namespace hecke {

namespace detail {

// Partitions pi' with pi inside pi' inside bound and pi' minus pi a
// horizontal strip (at most one new cell per column). size < 0 means any
// size. The strip condition is pi'_{i} <= pi_{i-1}, which also keeps pi'
// weakly decreasing.
inline std::vector<Partition> add_horizontal_strips(const Partition& pi, const Partition& bound,
                                                    int size) {
    std::vector<Partition> out;
    const int rows = bound.length();
    std::vector<int> acc(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i > rows) {
            if (remaining == 0 || size < 0) {
                std::vector<int> parts;
                for (int v : acc)
                    if (v > 0) parts.push_back(v);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        int hi = bound.part(i);
        if (i > 1) hi = std::min(hi, pi.part(i - 1));
        for (int v = pi.part(i); v <= hi; ++v) {
            const int added = v - pi.part(i);
            if (size >= 0 && added > remaining) break;
            acc[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1, remaining - added);
        }
        acc[static_cast<std::size_t>(i - 1)] = 0;
    };
    if (!bound.contains(pi)) return out;
    rec(rec, 1, size < 0 ? 0 : size);
    return out;
}

// Same with pi' minus pi a vertical strip: each row grows by at most one
// cell, and the partition order must be kept explicitly.
inline std::vector<Partition> add_vertical_strips(const Partition& pi, const Partition& bound,
                                                  int size) {
    std::vector<Partition> out;
    const int rows = bound.length();
    std::vector<int> acc(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i > rows) {
            if (remaining == 0 || size < 0) {
                std::vector<int> parts;
                for (int v : acc)
                    if (v > 0) parts.push_back(v);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        for (int grow = 0; grow <= 1; ++grow) {
            const int v = pi.part(i) + grow;
            if (v > bound.part(i)) break;
            if (i > 1 && v > acc[static_cast<std::size_t>(i - 2)]) break;
            if (size >= 0 && grow > remaining) break;
            acc[static_cast<std::size_t>(i - 1)] = v;
            self(self, i + 1, remaining - grow);
        }
        acc[static_cast<std::size_t>(i - 1)] = 0;
    };
    if (!bound.contains(pi)) return out;
    rec(rec, 1, size < 0 ? 0 : size);
    return out;
}

template <class StageSizes>
Int count_chains(const Partition& lambda, const StageSizes& horizontal,
                 const StageSizes& vertical) {
    std::map<Partition, Int> layer;
    layer[Partition{}] = 1;
    auto advance = [&](int stage_size, bool is_vertical) {
        std::map<Partition, Int> next;
        for (const auto& [pi, count] : layer) {
            auto grown = is_vertical ? add_vertical_strips(pi, lambda, stage_size)
                                     : add_horizontal_strips(pi, lambda, stage_size);
            for (Partition& g : grown) next[std::move(g)] += count;
        }
        layer = std::move(next);
    };
    for (int a : horizontal) advance(a, false);
    for (int b : vertical) advance(b, true);
    auto it = layer.find(lambda);
    return it == layer.end() ? Int(0) : it->second;
}

}  // namespace detail

// Number of chains of partitions from empty to lambda adding horizontal
// strips of exactly the alpha sizes in order, then vertical strips of the
// beta sizes. Equivalently, fillings of lambda whose even letters are
// row-weak and column-strict while odd letters are column-weak and
// row-strict, with letter multiplicities w.
inline Int count_weight_tableaux(const Partition& lambda, const Bicomposition& w) {
    if (lambda.size() != w.size())
        throw SizeMismatch("count_weight_tableaux: |lambda| and |w| differ");
    return detail::count_chains(lambda, w.alpha.parts(), w.beta.parts());
}

// Number of fillings of lambda with m even and n odd letters as above, any
// letter multiplicities, zero included: m horizontal stages then n vertical
// stages of arbitrary size.
inline Int count_semistandard(int m, int n, const Partition& lambda) {
    if (m < 0 || n < 0) throw IndexOutOfRange("count_semistandard: negative alphabet sizes");
    std::vector<int> hs(static_cast<std::size_t>(m), -1);
    std::vector<int> vs(static_cast<std::size_t>(n), -1);
    return detail::count_chains(lambda, hs, vs);
}

}  // namespace hecke
