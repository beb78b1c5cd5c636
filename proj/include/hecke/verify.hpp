#pragma once

#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/tensor_oracle.hpp"
#include "hecke/text.hpp"

namespace hecke::verify {

struct CaseResult {
    std::string label;
    bool pass = false;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseResult> cases;

    [[nodiscard]] bool all_pass() const {
        for (const CaseResult& c : cases)
            if (!c.pass) return false;
        return true;
    }

    [[nodiscard]] std::size_t failure_count() const {
        std::size_t n = 0;
        for (const CaseResult& c : cases)
            if (!c.pass) ++n;
        return n;
    }
};

namespace detail {

using Job = std::pair<std::string, std::function<bool()>>;

// Run the jobs on up to `threads` workers, results in job order. A throwing
// job fails its case and keeps the message on the label.
inline std::vector<CaseResult> run_jobs(std::vector<Job> jobs, int threads) {
    std::vector<CaseResult> results(jobs.size());
    auto run_one = [&](std::size_t i) {
        results[i].label = std::move(jobs[i].first);
        try {
            results[i].pass = jobs[i].second();
        } catch (const std::exception& e) {
            results[i].pass = false;
            results[i].label += std::string(" [threw: ") + e.what() + "]";
        }
    };
    if (threads <= 1 || jobs.size() < 2) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
        return results;
    }
    std::atomic<std::size_t> cursor{0};
    const std::size_t workers =
        std::min(static_cast<std::size_t>(threads), jobs.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = cursor.fetch_add(1); i < jobs.size(); i = cursor.fetch_add(1))
                run_one(i);
        });
    for (std::thread& t : pool) t.join();
    return results;
}

inline std::string mu_label(const Partition& mu) { return "mu=" + format_partition(mu); }

inline std::string mn_label(int m, int n) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

// Integer character of the symmetric group by bead moves on first column
// hook lengths: move one bead down by k, sign by the beads jumped over.
// Shares nothing with the strip removal recursion on purpose.
inline long long classical_character_rec(const std::vector<int>& lambda,
                                         const std::vector<int>& parts, std::size_t next) {
    if (lambda.empty()) return next == parts.size() ? 1 : 0;
    if (next == parts.size()) return 0;
    const int k = parts[next];
    const int rows = static_cast<int>(lambda.size());
    std::set<int> beads;
    for (int i = 0; i < rows; ++i) beads.insert(lambda[static_cast<std::size_t>(i)] + rows - 1 - i);
    long long total = 0;
    for (int b : beads) {
        if (b < k || beads.count(b - k)) continue;
        int jumped = 0;
        for (int c : beads)
            if (c > b - k && c < b) ++jumped;
        std::set<int> moved = beads;
        moved.erase(b);
        moved.insert(b - k);
        std::vector<int> smaller;
        int position = rows - 1;
        for (auto it = moved.rbegin(); it != moved.rend(); ++it, --position) {
            const int part = *it - position;
            if (part > 0) smaller.push_back(part);
        }
        const long long sign = jumped % 2 == 0 ? 1 : -1;
        total += sign * classical_character_rec(smaller, parts, next + 1);
    }
    return total;
}

inline long long classical_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw SizeMismatch("classical_character: sizes differ");
    return classical_character_rec(lambda.parts(), mu.parts(), 0);
}

// All partitions fitting inside outer row by row.
inline std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int row, int bound) -> void {
        out.emplace_back(std::vector<int>(current));
        if (row > outer.length()) return;
        const int cap = std::min(bound, outer.part(row));
        for (int v = cap; v >= 1; --v) {
            current.push_back(v);
            self(self, row + 1, v);
            current.pop_back();
        }
    };
    rec(rec, 1, outer.part(1));
    return out;
}

}  // namespace detail

inline const std::vector<std::pair<int, int>>& default_trace_pairs() {
    static const std::vector<std::pair<int, int>> pairs{{1, 0}, {0, 1}, {1, 1},
                                                        {2, 0}, {2, 1}, {2, 2}};
    return pairs;
}

inline const std::vector<std::pair<int, int>>& default_decomposition_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> out{{1, 0}, {0, 1}};
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) out.emplace_back(m, n);
        return out;
    }();
    return pairs;
}

// Quadratic, commuting and braid relations of the crossing operators for
// every letter split of total weight at most max_letters.
inline SuiteReport run_relations(int max_letters = 4, int min_r = 2, int max_r = 4,
                                 int threads = 1) {
    std::vector<detail::Job> jobs;
    for (int m = 0; m <= max_letters; ++m) {
        for (int n = (m == 0 ? 1 : 0); m + n <= max_letters; ++n) {
            for (int r = min_r; r <= max_r; ++r) {
                jobs.emplace_back(detail::mn_label(m, n) + " r=" + std::to_string(r),
                                  [m, n, r] { return check_relations(SuperSpace(m, n, r)).all_pass(); });
            }
        }
    }
    return {"relations", detail::run_jobs(std::move(jobs), threads)};
}

// Combinatorial sign permutation character against the trace of the standard
// element on the tensor power.
inline SuiteReport run_sign_rep_vs_trace(
    int max_r = 5, const std::vector<std::pair<int, int>>& pairs = default_trace_pairs(),
    int threads = 1) {
    std::vector<detail::Job> jobs;
    for (auto [m, n] : pairs) {
        for (int r = 1; r <= max_r; ++r) {
            for (const Partition& mu : enumerate_partitions(r)) {
                jobs.emplace_back(detail::mn_label(m, n) + " " + detail::mu_label(mu),
                                  [m, n, r, mu] {
                                      SuperSpace space(m, n, r);
                                      return standard_element_trace(space, mu) ==
                                             sign_rep_character(m, n, mu);
                                  });
            }
        }
    }
    return {"trace-oracle", detail::run_jobs(std::move(jobs), threads)};
}

// Sign permutation character against its expansion into hook characters
// weighted by semistandard counts.
inline SuiteReport run_hook_decomposition(
    int max_r = 8, const std::vector<std::pair<int, int>>& pairs = default_decomposition_pairs(),
    int threads = 1) {
    auto cache = std::make_shared<CharCache>();
    std::vector<detail::Job> jobs;
    for (auto [m, n] : pairs) {
        for (int r = 1; r <= max_r; ++r) {
            jobs.emplace_back(detail::mn_label(m, n) + " r=" + std::to_string(r), [m, n, r, cache] {
                for (const Partition& mu : enumerate_partitions(r))
                    if (hook_decomposition_sum(m, n, mu, *cache) != sign_rep_character(m, n, mu))
                        return false;
                return true;
            });
        }
    }
    return {"hook-decomposition", detail::run_jobs(std::move(jobs), threads)};
}

// Hook character sums: strip removal against the closed form, and the q = 1
// specialization seeing only all-odd cycle types.
inline SuiteReport run_hook_sums(int max_r = 10, int threads = 1) {
    auto cache = std::make_shared<CharCache>();
    std::vector<detail::Job> jobs;
    for (int r = 1; r <= max_r; ++r) {
        for (const Partition& mu : enumerate_partitions(r)) {
            jobs.emplace_back(detail::mu_label(mu), [mu, cache] {
                const QPoly closed = hook_sum_closed_form(mu);
                if (hook_sum_via_mn(mu, *cache) != closed) return false;
                bool all_odd = true;
                for (int i = 1; i <= mu.length(); ++i)
                    if (mu.part(i) % 2 == 0) all_odd = false;
                const Int expected = all_odd ? Int(1) << (mu.length() - 1) : Int(0);
                return closed.eval_at_one() == expected;
            });
        }
    }
    return {"hook-sums", detail::run_jobs(std::move(jobs), threads)};
}

// Product closed form for two even letters and one odd letter.
inline SuiteReport run_21_closed_form(int max_r = 10, int threads = 1) {
    std::vector<detail::Job> jobs;
    for (int r = 1; r <= max_r; ++r) {
        for (const Partition& mu : enumerate_partitions(r)) {
            jobs.emplace_back(detail::mu_label(mu), [mu] {
                return sign_rep_21_closed_form(mu) == sign_rep_character(2, 1, mu);
            });
        }
    }
    return {"closed-form-21", detail::run_jobs(std::move(jobs), threads)};
}

// Weighted sum over two column hooks against its closed form.
inline SuiteReport run_weighted_hook_sum(int max_r = 8, int threads = 1) {
    auto cache = std::make_shared<CharCache>();
    std::vector<detail::Job> jobs;
    for (int r = 2; r <= max_r; ++r) {
        for (const Partition& mu : enumerate_partitions(r)) {
            jobs.emplace_back(detail::mu_label(mu),
                              [mu, cache] { return weighted_hook_sum_21(mu, *cache).consistent(); });
        }
    }
    return {"weighted-hooks", detail::run_jobs(std::move(jobs), threads)};
}

// Staircase strip shape characters against their expansions into
// irreducibles weighted by tableau counts.
inline SuiteReport run_strip_shape_identities(int max_r = 6, int max_stages = 2,
                                              int threads = 1) {
    auto cache = std::make_shared<CharCache>();
    std::vector<detail::Job> jobs;
    for (int r = 1; r <= max_r; ++r) {
        for (const Bicomposition& w : enumerate_bicompositions(r)) {
            if (w.alpha.length() > max_stages || w.beta.length() > max_stages) continue;
            for (const Partition& mu : enumerate_partitions(r)) {
                jobs.emplace_back("w=" + format_bicomposition(w) + " " + detail::mu_label(mu),
                                  [w, mu, cache] {
                                      return strip_shape_character_identity(w, mu, *cache)
                                          .consistent();
                                  });
            }
        }
    }
    return {"strip-shapes", detail::run_jobs(std::move(jobs), threads)};
}

// Two block strips split into one or two adjacent hooks, and the tableau
// count of such a weight is the indicator of that hook list.
inline SuiteReport run_branching(int max_r = 8, int threads = 1) {
    auto cache = std::make_shared<CharCache>();
    std::vector<detail::Job> jobs;
    for (int r = 2; r <= max_r; ++r) {
        for (int a = 1; a < r; ++a) {
            jobs.emplace_back("a=" + std::to_string(a) + " r=" + std::to_string(r),
                              [a, r, cache] {
                                  const Bicomposition w{Composition{a}, Composition{r - a}};
                                  const SkewDiagram shape = build_strip_shape(w);
                                  const std::vector<Partition> hooks = hook_branching(a, r);
                                  for (const Partition& mu : enumerate_partitions(r)) {
                                      QPoly expanded;
                                      for (const Partition& lambda : hooks)
                                          expanded += irreducible_character(lambda, mu, *cache);
                                      if (skew_character(shape, mu, *cache) != expanded)
                                          return false;
                                  }
                                  for (const Partition& lambda : enumerate_partitions(r)) {
                                      const bool branching =
                                          std::find(hooks.begin(), hooks.end(), lambda) != hooks.end();
                                      if (count_weight_tableaux(lambda, w) != (branching ? 1 : 0))
                                          return false;
                                  }
                                  return true;
                              });
        }
    }
    return {"branching", detail::run_jobs(std::move(jobs), threads)};
}

// Divisibility of the defect against the q -> 1 product form, and the value
// of the character at q = 1.
inline SuiteReport run_q1_specialization(int max_r = 8, int max_letters = 3, int threads = 1) {
    std::vector<detail::Job> jobs;
    for (int m = 0; m <= max_letters; ++m) {
        for (int n = (m == 0 ? 1 : 0); n <= max_letters; ++n) {
            for (int r = 1; r <= max_r; ++r) {
                jobs.emplace_back(detail::mn_label(m, n) + " r=" + std::to_string(r), [m, n, r] {
                    for (const Partition& mu : enumerate_partitions(r)) {
                        q1_defect(m, n, mu);  // throws when not divisible
                        Int product = 1;
                        for (int i = 1; i <= mu.length(); ++i)
                            product *= mu.part(i) % 2 == 1 ? Int(m + n) : Int(m - n);
                        if (sign_rep_character(m, n, mu).eval_at_one() != product) return false;
                    }
                    return true;
                });
            }
        }
    }
    return {"q1", detail::run_jobs(std::move(jobs), threads)};
}

// Frozen semistandard count families.
inline SuiteReport run_tableau_counts(int max_r = 10, int max_band_r = 8, int threads = 1) {
    std::vector<detail::Job> jobs;
    for (int r = 1; r <= max_r; ++r) {
        jobs.emplace_back("hooks of " + std::to_string(r) + " with one even one odd", [r] {
            for (const Partition& lambda : hook_partitions(1, 1, r))
                if (count_semistandard(1, 1, lambda) != 2) return false;
            return true;
        });
        jobs.emplace_back("row of " + std::to_string(r) + " with two even one odd", [r] {
            return count_semistandard(2, 1, Partition(std::vector<int>{r})) == 2 * r + 1;
        });
    }
    for (int r = 2; r <= max_band_r; ++r) {
        jobs.emplace_back("band shapes of " + std::to_string(r) + " with two even one odd", [r] {
            for (const Partition& lambda : hook_partitions(2, 1, r)) {
                if (lambda.part(2) == 0) continue;
                if (count_semistandard(2, 1, lambda) != 4 * (lambda.part(1) - lambda.part(2) + 1))
                    return false;
            }
            return true;
        });
    }
    for (int m = 0; m <= 3; ++m) {
        for (int n = (m == 0 ? 1 : 0); n <= 3; ++n) {
            jobs.emplace_back(detail::mn_label(m, n) + " positivity", [m, n, max_band_r] {
                for (int r = 1; r <= max_band_r; ++r) {
                    const auto hooks = hook_partitions(m, n, r);
                    for (const Partition& lambda : enumerate_partitions(r)) {
                        const bool in_band =
                            std::find(hooks.begin(), hooks.end(), lambda) != hooks.end();
                        if ((count_semistandard(m, n, lambda) > 0) != in_band) return false;
                    }
                }
                return true;
            });
        }
    }
    return {"tableau-counts", detail::run_jobs(std::move(jobs), threads)};
}

// Strip removal at q = 1 against an independent integer recursion.
inline SuiteReport run_classical_cross_check(int max_r = 7, int threads = 1) {
    auto cache = std::make_shared<CharCache>();
    std::vector<detail::Job> jobs;
    for (int r = 1; r <= max_r; ++r) {
        for (const Partition& lambda : enumerate_partitions(r)) {
            jobs.emplace_back("lambda=" + format_partition(lambda), [lambda, r, cache] {
                for (const Partition& mu : enumerate_partitions(r))
                    if (irreducible_character(lambda, mu, *cache).eval_at_one() !=
                        detail::classical_character(lambda, mu))
                        return false;
                return true;
            });
        }
    }
    return {"classical", detail::run_jobs(std::move(jobs), threads)};
}

// The strip removal recursion gives one value no matter the part order.
inline SuiteReport run_removal_order(int max_outer = 6, int max_mu_length = 3, int threads = 1) {
    std::vector<detail::Job> jobs;
    for (int size = 1; size <= max_outer; ++size) {
        for (const Partition& outer : enumerate_partitions(size)) {
            for (const Partition& inner : detail::subpartitions(outer)) {
                SkewDiagram shape = SkewDiagram::from_partitions(outer, inner);
                if (shape.empty()) continue;
                jobs.emplace_back(
                    "shape=" + format_partition(outer) + "/" + format_partition(inner),
                    [shape, max_mu_length] {
                        for (const Partition& mu : enumerate_partitions(shape.size())) {
                            if (mu.length() > max_mu_length) continue;
                            const QPoly reference = skew_character(shape, mu);
                            std::vector<int> parts = mu.parts();
                            std::sort(parts.begin(), parts.end());
                            do {
                                if (skew_character_with_order(shape, parts) != reference)
                                    return false;
                            } while (std::next_permutation(parts.begin(), parts.end()));
                        }
                        return true;
                    });
            }
        }
    }
    return {"removal-order", detail::run_jobs(std::move(jobs), threads)};
}

}  // namespace hecke::verify
