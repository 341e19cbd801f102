#pragma once

/// Linear-time maximum-area solvers for triangles and asymmetric
/// quadrilaterals.
///
/// Triangle: every maximum triangle has a "critical" vertex whose two far
/// vertices straddle the arc thresholds 2pi/3 and 4pi/3 measured from it.
/// Sweeping all 2n endpoints as the critical vertex with two monotone
/// pointers (last point within 2pi/3, last point within 4pi/3) visits both
/// candidate triangles per vertex in O(n) total.  The maximum triangle
/// never contains a diameter, so no asymmetry filter is needed.
///
/// Quadrilateral: some optimal asymmetric quadrilateral has a diagonal
/// (x, next(x) + n), i.e. one endpoint and the antipode of its circular
/// successor.  For each x the best partner pair is the farthest admissible
/// point from the diagonal on one side, paired with the point that makes
/// the opposite side mirror it; distance from the fixed diagonal is
/// unimodal along each side, so two hill-climbing pointers cover all 2n
/// diagonals in linear time.  Candidates are asymmetric by construction.

#include <array>

#include "geometry.hpp"

namespace asympoly {

/// First index at or after `current` (circularly) satisfying the boundary
/// predicate.  The pointer only moves forward; a full futile lap throws.
template <typename Predicate>
[[nodiscard]] auto advance_pointer(const diameter_set& ds, int current, Predicate&& satisfied) -> int {
    const int m = ds.point_count();
    for (int step = 0; step < m; ++step) {
        const int idx = (current + step) % m;
        if (satisfied(idx)) return idx;
    }
    throw std::runtime_error("advance_pointer: no index satisfies the predicate");
}

/// Threshold pointers for a critical vertex i of the triangle sweep:
///   j — last index with arc(i -> j) <= 2pi/3
///   k — first index with arc(i -> k) >= 2pi/3
///   l — last index with arc(i -> l) <= 4pi/3
///   m — first index with arc(i -> m) >= 4pi/3, or -1 when no arc reaches it
struct critical_pointers {
    int j = -1;
    int k = -1;
    int l = -1;
    int m = -1;
};

[[nodiscard]] inline auto critical_pointers_at(const diameter_set& ds, int i) -> critical_pointers {
    const int m = ds.point_count();
    const double th1 = two_pi / 3.0;
    const double th2 = 2.0 * two_pi / 3.0;
    auto next = [m](int x) { return (x + 1) % m; };
    critical_pointers cp;
    cp.j = advance_pointer(ds, i, [&](int x) {
        return ds.arc(i, x) <= th1 && (next(x) == i || ds.arc(i, next(x)) > th1);
    });
    cp.k = advance_pointer(ds, next(i), [&](int x) { return ds.arc(i, x) >= th1; });
    cp.l = advance_pointer(ds, cp.j, [&](int x) {
        return ds.arc(i, x) <= th2 && (next(x) == i || ds.arc(i, next(x)) > th2);
    });
    cp.m = -1;
    for (int x = cp.l; x != i; x = next(x)) {
        if (ds.arc(i, x) >= th2) {
            cp.m = x;
            break;
        }
    }
    return cp;
}

/// Maximum-area triangle with vertices on the diameter endpoints, in linear
/// time.  The result never contains a diameter.
[[nodiscard]] inline auto solve_triangle(const diameter_set& ds) -> solution {
    const int n = ds.n();
    const int m = ds.point_count();
    if (n < 3)
        throw std::invalid_argument("solve_triangle: need n >= 3");
    const double th1 = two_pi / 3.0;
    const double th2 = 2.0 * two_pi / 3.0;

    double best = neg_inf;
    std::array<int, 3> bsel{-1, -1, -1};
    auto probe = [&](int i, int a, int b) {
        if (a == i || b == i || a == b) return;
        const double area = 0.5 * (std::sin(ds.arc(i, a)) + std::sin(ds.arc(a, b)) + std::sin(ds.arc(b, i)));
        if (area > best) {
            best = area;
            bsel = {i, a, b};
        }
    };

    int j = 0;
    int l = 0;
    for (int i = 0; i < m; ++i) {
        if (j == i || ds.arc(i, j) > th1) j = i;
        while ((j + 1) % m != i && ds.arc(i, (j + 1) % m) <= th1) j = (j + 1) % m;
        if (l == i || (l - i + m) % m < (j - i + m) % m) l = j;
        while ((l + 1) % m != i && ds.arc(i, (l + 1) % m) <= th2) l = (l + 1) % m;

        const int k = (ds.arc(i, j) == th1) ? j : (j + 1) % m;
        const int mm = (ds.arc(i, l) == th2) ? l : (l + 1) % m;
        if (ds.arc(i, mm) >= th2)
            probe(i, j, mm);
        if (ds.arc(i, k) >= th1 && ds.arc(i, l) <= th2 && ds.arc(i, k) <= ds.arc(i, l))
            probe(i, k, l);
    }
    if (bsel[0] < 0)
        throw std::logic_error("solve_triangle: sweep produced no candidate");

    vertex_selection sel = vertex_selection::of({bsel[0], bsel[1], bsel[2]}, ds);
    if (!is_asymmetric(sel, ds))
        throw std::logic_error("solve_triangle: maximal triangle contains a diameter");
    const double area = polygon_area(ds, sel);
    return solution{std::move(sel), area, solver_kind::triangle};
}

/// Maximum-area asymmetric quadrilateral, in linear time.
[[nodiscard]] inline auto solve_quadrilateral(const diameter_set& ds) -> solution {
    const int n = ds.n();
    const int m = ds.point_count();
    if (n < 4)
        throw std::invalid_argument("solve_quadrilateral: need n >= 4");

    std::vector<double> cx(static_cast<std::size_t>(m));
    std::vector<double> cy(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
        cx[static_cast<std::size_t>(x)] = std::cos(ds.angle(x));
        cy[static_cast<std::size_t>(x)] = std::sin(ds.angle(x));
    }
    // |cross product| of (v - u) and (p - u): proportional to the distance
    // from p to chord u-v, which is unimodal along each arc side of the chord.
    auto chord_dist = [&](int u, int v, int p) {
        const double ux = cx[static_cast<std::size_t>(u)], uy = cy[static_cast<std::size_t>(u)];
        const double vx = cx[static_cast<std::size_t>(v)], vy = cy[static_cast<std::size_t>(v)];
        const double px = cx[static_cast<std::size_t>(p)], py = cy[static_cast<std::size_t>(p)];
        return std::abs((vx - ux) * (py - uy) - (vy - uy) * (px - ux));
    };

    double best = neg_inf;
    std::array<int, 4> bsel{-1, -1, -1, -1};
    auto probe = [&](int x, int l) {
        const int y = (x + n + 1) % m;
        const int lp = (l + 1 + n) % m;
        const double area = 0.5 * (std::sin(ds.arc(x, l)) + std::sin(ds.arc(l, y)) +
                                   std::sin(ds.arc(y, lp)) + std::sin(ds.arc(lp, x)));
        if (area > best) {
            best = area;
            bsel = {x, l, y, lp};
        }
    };

    // Positions are relative to x.  Side A holds candidate far points for
    // the wedge between x and the diagonal's far end y = x + n + 1; side B
    // holds their mirrors past y, mapped back by l = v + n - 1.
    const int a_lo = 2, a_hi = n - 2;
    const int b_lo = n + 3, b_hi = 2 * n - 1;
    int pa = -1;
    int pb = -1;
    for (int x = 0; x < m; ++x) {
        const int y = (x + n + 1) % m;
        if (pa < 0 || (pa - x + m) % m < a_lo) pa = (x + a_lo) % m;
        if (pb < 0 || (pb - x + m) % m < b_lo) pb = (x + b_lo) % m;
        while ((pa - x + m) % m < a_hi && chord_dist(x, y, (pa + 1) % m) > chord_dist(x, y, pa))
            pa = (pa + 1) % m;
        while ((pb - x + m) % m < b_hi && chord_dist(x, y, (pb + 1) % m) > chord_dist(x, y, pb))
            pb = (pb + 1) % m;
        probe(x, pa);
        probe(x, (pb + n - 1) % m);
    }
    if (bsel[0] < 0)
        throw std::logic_error("solve_quadrilateral: sweep produced no candidate");

    vertex_selection sel = vertex_selection::of({bsel[0], bsel[1], bsel[2], bsel[3]}, ds);
    if (!is_asymmetric(sel, ds))
        throw std::logic_error("solve_quadrilateral: candidate contains a diameter");
    const double area = polygon_area(ds, sel);
    return solution{std::move(sel), area, solver_kind::quad};
}

}  // namespace asympoly
