#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"

namespace hecke {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Difference of nested Young diagrams, stored as its cell set translated so
// the least occupied row and column are both 1. Two diagrams that differ by a
// translation therefore compare equal.
class SkewDiagram {
  public:
    SkewDiagram() = default;

    static SkewDiagram from_partitions(const Partition& outer, const Partition& inner) {
        if (!outer.contains(inner))
            throw std::invalid_argument("skew diagram: inner shape must fit inside outer shape");
        std::vector<Cell> cells;
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cells.push_back({i, j});
        return from_cells(std::move(cells));
    }

    static SkewDiagram straight(const Partition& outer) {
        return from_partitions(outer, Partition{});
    }

    // Validates that the set is a difference of nested partition diagrams:
    // each row is a contiguous run, consecutive occupied rows step weakly
    // left at both ends, and a row gap forces the lower block strictly left.
    static SkewDiagram from_cells(std::vector<Cell> cells) {
        SkewDiagram d;
        if (cells.empty()) return d;
        std::sort(cells.begin(), cells.end());
        if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
            throw std::invalid_argument("skew diagram: duplicate cell");

        int min_row = cells.front().row;
        int min_col = cells.front().col;
        for (const Cell& c : cells) min_col = std::min(min_col, c.col);
        for (Cell& c : cells) {
            c.row -= min_row - 1;
            c.col -= min_col - 1;
        }

        // Row runs: (first col, last col) per occupied row, ascending row.
        std::map<int, std::pair<int, int>> runs;
        for (const Cell& c : cells) {
            auto [it, fresh] = runs.try_emplace(c.row, std::pair{c.col, c.col});
            if (!fresh) {
                if (c.col != it->second.second + 1)
                    throw std::invalid_argument("skew diagram: row is not contiguous");
                it->second.second = c.col;
            }
        }
        for (auto prev = runs.begin(), it = std::next(runs.begin()); it != runs.end();
             prev = it, ++it) {
            auto [lo_hi_up, lo_hi_down] = std::pair{prev->second, it->second};
            if (it->first == prev->first + 1) {
                if (lo_hi_down.first > lo_hi_up.first || lo_hi_down.second > lo_hi_up.second)
                    throw std::invalid_argument("skew diagram: rows must step weakly left");
            } else {
                if (lo_hi_down.second >= lo_hi_up.first)
                    throw std::invalid_argument(
                        "skew diagram: blocks separated by an empty row must be strictly left");
            }
        }
        d.cells_ = std::move(cells);
        return d;
    }

    [[nodiscard]] const std::vector<Cell>& cells() const { return cells_; }
    [[nodiscard]] int size() const { return static_cast<int>(cells_.size()); }
    [[nodiscard]] bool empty() const { return cells_.empty(); }
    [[nodiscard]] bool contains(Cell c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }

    // Minimal nested pair (outer, inner) whose difference is this diagram.
    // Rows forced empty in the middle take the widest value the nesting
    // allows from below, which is the outer width of the next occupied row.
    [[nodiscard]] std::pair<Partition, Partition> to_partitions() const {
        if (cells_.empty()) return {};
        std::map<int, std::pair<int, int>> runs;
        for (const Cell& c : cells_) {
            auto [it, fresh] = runs.try_emplace(c.row, std::pair{c.col, c.col});
            if (!fresh) it->second.second = c.col;
        }
        const int rows = runs.rbegin()->first;
        std::vector<int> outer(static_cast<std::size_t>(rows), 0);
        std::vector<int> inner(static_cast<std::size_t>(rows), 0);
        for (int i = rows; i >= 1; --i) {
            auto it = runs.find(i);
            if (it != runs.end()) {
                outer[static_cast<std::size_t>(i - 1)] = it->second.second;
                inner[static_cast<std::size_t>(i - 1)] = it->second.first - 1;
            } else {
                outer[static_cast<std::size_t>(i - 1)] = outer[static_cast<std::size_t>(i)];
                inner[static_cast<std::size_t>(i - 1)] = outer[static_cast<std::size_t>(i)];
            }
        }
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
        return {Partition(std::move(outer)), Partition(std::move(inner))};
    }

    // Cells with no neighbour one step down-right; independent of the choice
    // of representing partition pair.
    [[nodiscard]] std::vector<Cell> rim() const {
        std::vector<Cell> out;
        for (const Cell& c : cells_)
            if (!contains({c.row + 1, c.col + 1})) out.push_back(c);
        return out;
    }

    // Difference of cell sets; the result is validated and recanonicalized.
    [[nodiscard]] SkewDiagram remove(const std::vector<Cell>& strip) const {
        std::vector<Cell> rest;
        rest.reserve(cells_.size());
        for (const Cell& c : cells_)
            if (!std::binary_search(strip.begin(), strip.end(), c)) rest.push_back(c);
        if (rest.size() + strip.size() != cells_.size())
            throw std::invalid_argument("remove: strip is not a subset of the diagram");
        return from_cells(std::move(rest));
    }

    [[nodiscard]] int component_count() const { return component_stats(cells_).first; }

    // Sum over connected components of (occupied rows - 1).
    [[nodiscard]] int length() const { return component_stats(cells_).second; }

    auto operator<=>(const SkewDiagram&) const = default;

    // Shared with rim strips: (component count, total of rows - 1 per
    // component) for an arbitrary edge-connected decomposition of cells.
    static std::pair<int, int> component_stats(const std::vector<Cell>& cells) {
        const std::size_t n = cells.size();
        std::vector<int> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
        for (std::size_t i = 0; i < n; ++i) {
            Cell right{cells[i].row, cells[i].col + 1};
            Cell down{cells[i].row + 1, cells[i].col};
            for (Cell nb : {right, down}) {
                auto it = std::lower_bound(cells.begin(), cells.end(), nb);
                if (it != cells.end() && *it == nb)
                    unite(static_cast<int>(i), static_cast<int>(it - cells.begin()));
            }
        }
        std::map<int, std::vector<int>> rows_of;
        for (std::size_t i = 0; i < n; ++i) rows_of[find(static_cast<int>(i))].push_back(cells[i].row);
        int length = 0;
        for (auto& [root, rows] : rows_of) {
            std::sort(rows.begin(), rows.end());
            rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
            length += static_cast<int>(rows.size()) - 1;
        }
        return {static_cast<int>(rows_of.size()), length};
    }

  private:
    std::vector<Cell> cells_;
};

// Subset of the rim removable in one recursion step. length and components
// are the statistics entering the removal weight.
struct BrokenRimStrip {
    std::vector<Cell> cells;  // sorted
    int length = 0;           // sum over components of (occupied rows - 1)
    int components = 0;
};

namespace detail {

// No excluded rim cell may lie weakly down-right of any chosen cell;
// otherwise removing the chosen set would disconnect a row or column run.
inline bool removal_valid(const std::vector<Cell>& chosen, const std::vector<Cell>& excluded) {
    for (const Cell& e : excluded)
        for (const Cell& s : chosen)
            if (e.row >= s.row && e.col >= s.col) return false;
    return true;
}

inline bool has_two_by_two(const std::vector<Cell>& cells) {
    auto present = [&](Cell c) { return std::binary_search(cells.begin(), cells.end(), c); };
    for (const Cell& c : cells)
        if (present({c.row, c.col + 1}) && present({c.row + 1, c.col}) &&
            present({c.row + 1, c.col + 1}))
            return true;
    return false;
}

}  // namespace detail

// Every k-subset of the rim that avoids 2x2 blocks and passes the removal
// predicate, in lexicographic order of its cell list. k must be positive;
// there are no strips when k exceeds the rim size.
inline std::vector<BrokenRimStrip> enumerate_rim_strips(const SkewDiagram& shape, int k) {
    if (k < 1) throw IndexOutOfRange("enumerate_rim_strips: strip size must be positive");
    const std::vector<Cell> rim = shape.rim();
    std::vector<BrokenRimStrip> out;
    if (static_cast<int>(rim.size()) < k) return out;

    std::vector<Cell> chosen;
    std::vector<Cell> excluded;
    auto emit = [&]() {
        if (detail::has_two_by_two(chosen)) return;
        if (!detail::removal_valid(chosen, excluded)) return;
        auto [components, length] = SkewDiagram::component_stats(chosen);
        out.push_back({chosen, length, components});
    };
    // Depth-first subset walk over rim cells in order, pruning when the tail
    // cannot complete the strip.
    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (static_cast<int>(chosen.size()) == k) {
            excluded.insert(excluded.end(), rim.begin() + static_cast<std::ptrdiff_t>(idx),
                            rim.end());
            emit();
            excluded.resize(excluded.size() - (rim.size() - idx));
            return;
        }
        if (rim.size() - idx < static_cast<std::size_t>(k) - chosen.size()) return;
        chosen.push_back(rim[idx]);
        self(self, idx + 1);
        chosen.pop_back();
        excluded.push_back(rim[idx]);
        self(self, idx + 1);
        excluded.pop_back();
    };
    walk(walk, 0);
    return out;
}

// Skew diagram whose components are horizontal strips of the alpha sizes
// followed by vertical strips of the beta sizes, laid out down the
// anti-diagonal. Consecutive blocks share no rows or columns and are kept a
// full column apart, so components never touch, corners included.
inline SkewDiagram build_strip_shape(const Bicomposition& w) {
    struct Block {
        int height;
        int width;
    };
    std::vector<Block> blocks;
    for (int a : w.alpha.parts()) blocks.push_back({1, a});
    for (int b : w.beta.parts()) blocks.push_back({b, 1});

    int col_start = 1;
    for (const Block& b : blocks) col_start += b.width + 1;
    std::vector<Cell> cells;
    int row = 1;
    for (const Block& b : blocks) {
        col_start -= b.width + 1;
        for (int i = 0; i < b.height; ++i)
            for (int j = 0; j < b.width; ++j) cells.push_back({row + i, col_start + j});
        row += b.height;
    }
    return SkewDiagram::from_cells(std::move(cells));
}

}  // namespace hecke
