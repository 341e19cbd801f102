#pragma once

/// Closed-form maximum-area constructions for evenly spaced diameters.
///
/// With n evenly spaced diameters the 2n endpoints form a regular lattice on
/// the circle, and a selection of k endpoints is described up to rotation by
/// its interval vector: the k counterclockwise gaps (in lattice steps)
/// between consecutive chosen points, summing to 2n.  A selection contains a
/// diameter exactly when some run of fewer than k consecutive gaps sums to n.

#include <numeric>
#include <vector>

#include "geometry.hpp"

namespace asympoly {

/// Splits `total` into `parts` positive integers that differ by at most one,
/// larger parts first.  This is the gap multiset of the unconstrained
/// maximum-area polygon on a lattice of `total` points.
[[nodiscard]] inline auto balanced_partition(int total, int parts) -> std::vector<int> {
    if (parts < 1 || total < parts)
        throw std::invalid_argument("balanced_partition: need 1 <= parts <= total");
    const int q = total / parts;
    const int r = total % parts;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(parts));
    out.insert(out.end(), static_cast<std::size_t>(r), q + 1);
    out.insert(out.end(), static_cast<std::size_t>(parts - r), q);
    return out;
}

struct interval_vector {
    std::vector<int> gaps;  // each >= 1; sum is the lattice size

    [[nodiscard]] auto k() const noexcept -> int { return static_cast<int>(gaps.size()); }

    [[nodiscard]] auto lattice_points() const -> int {
        return std::accumulate(gaps.begin(), gaps.end(), 0);
    }

    /// Endpoint indices of this vector anchored at lattice point 0.
    [[nodiscard]] auto to_selection(const diameter_set& ds) const -> vertex_selection {
        std::vector<int> idx;
        idx.reserve(gaps.size());
        int p = 0;
        for (int g : gaps) {
            idx.push_back(p);
            p += g;
        }
        if (p != ds.point_count())
            throw std::invalid_argument("interval_vector: gaps do not sum to the lattice size");
        return vertex_selection::of(std::move(idx), ds);
    }

    /// True when no run of fewer than k consecutive gaps sums to exactly
    /// half the lattice, i.e. the selection has no antipodal pair.
    [[nodiscard]] auto asymmetric() const -> bool {
        const int m = lattice_points();
        if (m % 2 != 0) return true;
        const int half = m / 2;
        const int kk = k();
        for (int start = 0; start < kk; ++start) {
            int s = 0;
            for (int len = 1; len < kk; ++len) {
                s += gaps[static_cast<std::size_t>((start + len - 1) % kk)];
                if (s == half) return false;
                if (s > half) break;
            }
        }
        return true;
    }

    /// Lexicographically smallest rotation, for order-insensitive comparison.
    [[nodiscard]] auto canonical_rotation() const -> interval_vector {
        const int kk = k();
        std::vector<int> best = gaps;
        std::vector<int> rot(gaps.size());
        for (int s = 1; s < kk; ++s) {
            for (int i = 0; i < kk; ++i)
                rot[static_cast<std::size_t>(i)] = gaps[static_cast<std::size_t>((i + s) % kk)];
            if (rot < best) best = rot;
        }
        return interval_vector{best};
    }

    friend auto operator==(const interval_vector& a, const interval_vector& b) -> bool = default;
};

/// Area of the inscribed polygon with these gaps on the 2n-point lattice.
[[nodiscard]] inline auto lattice_area(const interval_vector& iv, int n) -> double {
    double s = 0.0;
    for (int g : iv.gaps) s += std::sin(pi * static_cast<double>(g) / n);
    return 0.5 * s;
}

/// Interval vector of the selected endpoints on a lattice of `m` points.
/// The first gap starts at the smallest selected index.
[[nodiscard]] inline auto intervals_of(const vertex_selection& sel, int m) -> interval_vector {
    const int k = sel.k();
    if (k < 1)
        throw std::invalid_argument("intervals_of: empty selection");
    std::vector<int> gaps(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int a = sel.indices[static_cast<std::size_t>(i)];
        const int b = sel.indices[static_cast<std::size_t>((i + 1) % k)];
        gaps[static_cast<std::size_t>(i)] = ((b - a) % m + m) % m;
    }
    return interval_vector{std::move(gaps)};
}

/// Maximum-area k-gon on an m-point lattice with no constraint: the balanced
/// gap vector.  For even k on an even lattice it always contains a diameter,
/// which is why the asymmetric optimum below differs.
[[nodiscard]] inline auto max_subpolygon_lattice(int m, int k) -> interval_vector {
    if (k < 3 || k > m)
        throw std::invalid_argument("max_subpolygon_lattice: need 3 <= k <= m");
    return interval_vector{balanced_partition(m, k)};
}

/// Maximum-area asymmetric k-gon on the 2n lattice, k odd.  The balanced
/// vector is rearranged so that every run of fewer than k gaps avoids the
/// sum n; for odd k a reordering of the balanced multiset suffices, so the
/// area matches the unconstrained optimum.
[[nodiscard]] inline auto max_asymmetric_lattice_odd(int n, int k) -> interval_vector {
    if (k % 2 == 0 || k < 3 || k >= n)
        throw std::invalid_argument("max_asymmetric_lattice_odd: need odd 3 <= k < n");
    const int q = (2 * n) / k;
    const int r = (2 * n) % k;
    std::vector<int> g;
    g.reserve(static_cast<std::size_t>(k));
    auto rep = [&g](int count, int value) { g.insert(g.end(), static_cast<std::size_t>(count), value); };
    if (r % 2 == 0) {
        rep(r / 2, q + 1);
        rep((k - r - 1) / 2, q);
        rep(r / 2, q + 1);
        rep((k - r + 1) / 2, q);
    } else {
        rep((k - r) / 2, q);
        rep((r - 1) / 2, q + 1);
        rep((k - r) / 2, q);
        rep((r + 1) / 2, q + 1);
    }
    return interval_vector{std::move(g)};
}

/// Maximum-area asymmetric k-gon on the 2n lattice, k even.  No reordering
/// of the balanced multiset is asymmetric, so one gap shrinks to q-1 and one
/// grows to q+1; the interleaving below is the area-maximal arrangement.
[[nodiscard]] inline auto max_asymmetric_lattice_even(int n, int k) -> interval_vector {
    if (k % 2 != 0 || k < 4 || k >= n)
        throw std::invalid_argument("max_asymmetric_lattice_even: need even 4 <= k < n");
    const int q = (2 * n) / k;
    const int r = (2 * n) % k;  // even, since k and 2n are even
    std::vector<int> g;
    g.reserve(static_cast<std::size_t>(k));
    auto rep = [&g](int count, int value) { g.insert(g.end(), static_cast<std::size_t>(count), value); };
    g.push_back(q - 1);
    rep(r / 2, q + 1);
    rep((k - r - 2) / 2, q);
    rep((r + 2) / 2, q + 1);
    rep((k - r - 2) / 2, q);
    return interval_vector{std::move(g)};
}

/// Maximum-area asymmetric k-gon for n evenly spaced diameters, by closed
/// form.  Requires 3 <= k < n.
[[nodiscard]] inline auto solve_lattice(int n, int k) -> solution {
    if (k < 3 || k >= n)
        throw std::invalid_argument("solve_lattice: need 3 <= k < n");
    const interval_vector iv = (k % 2 == 0) ? max_asymmetric_lattice_even(n, k)
                                            : max_asymmetric_lattice_odd(n, k);
    const diameter_set ds = diameter_set::evenly_spaced(n);
    vertex_selection sel = iv.to_selection(ds);
    const double area = polygon_area(ds, sel);
    return solution{std::move(sel), area, solver_kind::lattice};
}

}  // namespace asympoly
