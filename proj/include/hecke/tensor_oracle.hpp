#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/partitions.hpp"
#include "hecke/poly.hpp"

namespace hecke {

// Word basis of the r-fold tensor power of a space with m even letters
// (0 .. m-1) and n odd letters (m .. m+n-1). Words are base-(m+n) encoded,
// slot p in digit p. All oracle arithmetic stays in the s-ring with s^2 = q.
class SuperSpace {
  public:
    SuperSpace(int m, int n, int r) : m_(m), n_(n), r_(r) {
        if (m < 0 || n < 0 || m + n < 1 || r < 1)
            throw IndexOutOfRange("SuperSpace: need m, n >= 0, m + n >= 1, r >= 1");
        dim_ = 1;
        for (int i = 0; i < r; ++i) {
            dim_ *= static_cast<std::uint64_t>(m + n);
            if (dim_ > (1u << 22))
                throw IndexOutOfRange("SuperSpace: dimension beyond desk scale");
        }
    }

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return r_; }
    [[nodiscard]] int letters() const { return m_ + n_; }
    [[nodiscard]] std::uint32_t dimension() const { return static_cast<std::uint32_t>(dim_); }
    [[nodiscard]] bool odd(int letter) const { return letter >= m_; }

    // Digit of word at slot p, 0-based.
    [[nodiscard]] int letter(std::uint32_t word, int p) const {
        for (int i = 0; i < p; ++i) word /= static_cast<std::uint32_t>(letters());
        return static_cast<int>(word % static_cast<std::uint32_t>(letters()));
    }

    [[nodiscard]] std::uint32_t with_letters(std::uint32_t word, int p, int x, int y) const {
        const auto d = static_cast<std::uint32_t>(letters());
        std::uint32_t scale = 1;
        for (int i = 0; i < p; ++i) scale *= d;
        const int old_x = letter(word, p);
        const int old_y = letter(word, p + 1);
        return word + scale * static_cast<std::uint32_t>(x - old_x) +
               scale * d * static_cast<std::uint32_t>(y - old_y);
    }

  private:
    int m_, n_, r_;
    std::uint64_t dim_;
};

// Linear operator on the word basis, one sorted sparse row per input word.
class SparseOperator {
  public:
    using Term = std::pair<std::uint32_t, SPoly>;
    using Row = std::vector<Term>;

    explicit SparseOperator(std::uint32_t dim) : rows_(dim) {}

    static SparseOperator identity(std::uint32_t dim) {
        SparseOperator op(dim);
        for (std::uint32_t w = 0; w < dim; ++w) op.rows_[w].emplace_back(w, SPoly(1));
        return op;
    }

    [[nodiscard]] std::uint32_t dimension() const { return static_cast<std::uint32_t>(rows_.size()); }
    [[nodiscard]] const Row& row(std::uint32_t w) const { return rows_[w]; }

    void set_row(std::uint32_t w, Row terms) { rows_[w] = normalize(std::move(terms)); }

    [[nodiscard]] SPoly diagonal_coeff(std::uint32_t w) const {
        for (const Term& t : rows_[w])
            if (t.first == w) return t.second;
        return {};
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.rows_ == b.rows_;
    }

    static Row normalize(Row terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Row out;
        for (Term& t : terms) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
        return out;
    }

  private:
    std::vector<Row> rows_;
};

namespace detail {

inline const SPoly& s_one_minus_q() {
    static const SPoly p(std::vector<Int>{1, 0, -1});
    return p;
}

inline const SPoly& s_neg_q() {
    static const SPoly p = SPoly::monomial(-1, 2);
    return p;
}

// Image of a basis word under the crossing operator on slots p, p+1.
// Ascending pairs keep a diagonal 1 - q besides the signed swap; descending
// pairs only swap; equal letters are scalar 1 (even) or -q (odd). The two
// off-diagonal entries of an unequal pair multiply to q and the block has
// trace 1 - q and determinant -q, matching the quadratic relation.
inline void apply_crossing(const SuperSpace& space, int p, std::uint32_t word,
                           const SPoly& carry, SparseOperator::Row& out) {
    const int x = space.letter(word, p);
    const int y = space.letter(word, p + 1);
    if (x == y) {
        out.emplace_back(word, carry * (space.odd(x) ? s_neg_q() : SPoly(1)));
        return;
    }
    const bool both_odd = space.odd(x) && space.odd(y);
    const SPoly eps_s = SPoly::monomial(both_odd ? -1 : 1, 1);
    const std::uint32_t swapped = space.with_letters(word, p, y, x);
    if (x < y) out.emplace_back(word, carry * s_one_minus_q());
    out.emplace_back(swapped, carry * eps_s);
}

}  // namespace detail

// Crossing operator acting on slots i, i+1 of the tensor power, 1 <= i < r.
inline SparseOperator build_generator(const SuperSpace& space, int i) {
    if (i < 1 || i >= space.r()) throw IndexOutOfRange("build_generator: slot index out of range");
    SparseOperator op(space.dimension());
    for (std::uint32_t w = 0; w < space.dimension(); ++w) {
        SparseOperator::Row row;
        detail::apply_crossing(space, i - 1, w, SPoly(1), row);
        op.set_row(w, std::move(row));
    }
    return op;
}

// Apply a then b on row vectors: rows of the product of the two matrices.
inline SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
    if (a.dimension() != b.dimension()) throw SizeMismatch("compose: dimensions differ");
    SparseOperator out(a.dimension());
    for (std::uint32_t w = 0; w < a.dimension(); ++w) {
        SparseOperator::Row row;
        for (const auto& [u, c] : a.row(w))
            for (const auto& [v, c2] : b.row(u)) row.emplace_back(v, c * c2);
        out.set_row(w, std::move(row));
    }
    return out;
}

inline SparseOperator add(const SparseOperator& a, const SparseOperator& b) {
    if (a.dimension() != b.dimension()) throw SizeMismatch("add: dimensions differ");
    SparseOperator out(a.dimension());
    for (std::uint32_t w = 0; w < a.dimension(); ++w) {
        SparseOperator::Row row = a.row(w);
        row.insert(row.end(), b.row(w).begin(), b.row(w).end());
        out.set_row(w, std::move(row));
    }
    return out;
}

inline SparseOperator scale(const SparseOperator& a, const SPoly& factor) {
    SparseOperator out(a.dimension());
    for (std::uint32_t w = 0; w < a.dimension(); ++w) {
        SparseOperator::Row row = a.row(w);
        for (auto& [v, c] : row) c *= factor;
        out.set_row(w, std::move(row));
    }
    return out;
}

inline SPoly trace(const SparseOperator& a) {
    SPoly out;
    for (std::uint32_t w = 0; w < a.dimension(); ++w) out += a.diagonal_coeff(w);
    return out;
}

struct RelationCheck {
    std::string name;
    bool pass = false;
};

struct RelationsReport {
    std::vector<RelationCheck> checks;
    [[nodiscard]] bool all_pass() const {
        for (const RelationCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Quadratic, commuting and braid relations of the crossing operators on the
// full tensor power, checked exactly in the s-ring. Vacuous for r < 2.
inline RelationsReport check_relations(const SuperSpace& space) {
    RelationsReport report;
    if (space.r() < 2) return report;
    std::vector<SparseOperator> gen;
    for (int i = 1; i < space.r(); ++i) gen.push_back(build_generator(space, i));
    const SparseOperator id = SparseOperator::identity(space.dimension());
    auto tag = [](const char* base, int i, int j = 0) {
        std::string s = base;
        s += ' ';
        s += std::to_string(i);
        if (j) s += ' ' + std::to_string(j);
        return s;
    };
    for (int i = 1; i < space.r(); ++i) {
        const SparseOperator& R = gen[static_cast<std::size_t>(i - 1)];
        SparseOperator lhs = compose(R, R);
        SparseOperator rhs = add(scale(R, detail::s_one_minus_q()), scale(id, -detail::s_neg_q()));
        report.checks.push_back({tag("quadratic", i), lhs == rhs});
    }
    for (int i = 1; i < space.r(); ++i)
        for (int j = i + 2; j < space.r(); ++j) {
            const auto& A = gen[static_cast<std::size_t>(i - 1)];
            const auto& B = gen[static_cast<std::size_t>(j - 1)];
            report.checks.push_back({tag("commute", i, j), compose(A, B) == compose(B, A)});
        }
    for (int i = 1; i + 1 < space.r(); ++i) {
        const auto& A = gen[static_cast<std::size_t>(i - 1)];
        const auto& B = gen[static_cast<std::size_t>(i)];
        report.checks.push_back(
            {tag("braid", i), compose(compose(A, B), A) == compose(compose(B, A), B)});
    }
    return report;
}

namespace detail {

// Generator slots of the standard element for cycle type mu: a run of
// consecutive crossings inside each part, empty for parts of size 1.
inline std::vector<int> standard_element_slots(const Partition& mu) {
    std::vector<int> slots;
    int offset = 0;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int t = offset + 1; t <= offset + mu.part(i) - 1; ++t) slots.push_back(t);
        offset += mu.part(i);
    }
    return slots;
}

}  // namespace detail

// Trace of the standard element of cycle type mu on the tensor power,
// expanded word by word so memory stays linear in the dimension. Only even
// powers of s can survive in the total.
inline SPoly standard_element_trace_s(const SuperSpace& space, const Partition& mu) {
    if (mu.size() != space.r())
        throw SizeMismatch("standard_element_trace: |mu| must equal the tensor power");
    const std::vector<int> slots = detail::standard_element_slots(mu);
    SPoly total;
    for (std::uint32_t w = 0; w < space.dimension(); ++w) {
        std::map<std::uint32_t, SPoly> terms{{w, SPoly(1)}};
        for (int slot : slots) {
            std::map<std::uint32_t, SPoly> next;
            for (const auto& [word, coeff] : terms) {
                SparseOperator::Row expanded;
                detail::apply_crossing(space, slot - 1, word, coeff, expanded);
                for (auto& [v, c] : expanded) {
                    auto [it, fresh] = next.try_emplace(v, c);
                    if (!fresh) it->second += c;
                }
            }
            terms = std::move(next);
        }
        auto it = terms.find(w);
        if (it != terms.end()) total += it->second;
    }
    return total;
}

inline QPoly standard_element_trace(const SuperSpace& space, const Partition& mu) {
    return lower_from_s(standard_element_trace_s(space, mu));
}

}  // namespace hecke
