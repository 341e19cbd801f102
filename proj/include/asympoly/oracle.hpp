#pragma once

/// Exhaustive ground-truth solver.  Enumerates every k-subset of the 2n
/// endpoints in lexicographic order, optionally filters out selections with
/// an antipodal pair, and keeps the maximum area.  Intentionally depends on
/// nothing but the core geometry, so it can arbitrate between the real
/// solvers.

#include <cstdint>

#include "geometry.hpp"

namespace asympoly {

struct oracle_options {
    bool require_asymmetric = true;
    /// Maximum number of combinations to enumerate before refusing.
    std::int64_t budget = 5'000'000;
};

/// C(m, k), saturating at a large cap instead of overflowing.
[[nodiscard]] inline auto combination_count(int m, int k) -> std::int64_t {
    if (k < 0 || k > m) return 0;
    constexpr std::int64_t cap = std::int64_t{1} << 62;
    k = std::min(k, m - k);
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        if (c > cap / (m - k + i)) return cap;
        c = c * (m - k + i) / i;  // exact: product of i consecutive integers is divisible by i!
    }
    return c;
}

/// Maximum-area selection by full enumeration.  Ties keep the
/// lexicographically first index set.  Throws when C(2n, k) exceeds the
/// budget — the oracle never silently samples.
[[nodiscard]] inline auto oracle_solve(const diameter_set& ds, int k,
                                       const oracle_options& opt = {}) -> solution {
    const int m = ds.point_count();
    if (k < 3)
        throw std::invalid_argument("oracle_solve: need k >= 3 (not a polygon)");
    if (k > m)
        throw std::invalid_argument("oracle_solve: k exceeds the number of endpoints");
    const std::int64_t combos = combination_count(m, k);
    if (combos > opt.budget)
        throw std::runtime_error("oracle_solve: " + std::to_string(combos) +
                                 " combinations exceed the budget of " + std::to_string(opt.budget));

    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;

    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_sel;
    while (true) {
        vertex_selection sel{comb};
        if (!opt.require_asymmetric || is_asymmetric(sel, ds)) {
            const double a = polygon_area(ds, sel);
            if (a > best) {
                best = a;
                best_sel = comb;
            }
        }
        // next combination in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
        if (pos < 0) break;
        ++comb[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
    }
    if (best_sel.empty())
        throw std::runtime_error("oracle_solve: no admissible selection exists");
    return solution{vertex_selection::of(std::move(best_sel), ds), best, solver_kind::oracle};
}

}  // namespace asympoly
