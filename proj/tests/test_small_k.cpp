#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "asympoly/dp.hpp"
#include "asympoly/instance.hpp"
#include "asympoly/lattice.hpp"
#include "asympoly/oracle.hpp"
#include "asympoly/small_k.hpp"

using namespace asympoly;

namespace {

auto random_set(int n, std::uint64_t seed) -> diameter_set {
    return diameter_set::from_angles(make_random_instance(n, seed).diameters);
}

auto tri_area(double a, double b, double c) -> double {
    const double x1 = std::cos(a), y1 = std::sin(a);
    const double x2 = std::cos(b), y2 = std::sin(b);
    const double x3 = std::cos(c), y3 = std::sin(c);
    return std::fabs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)) / 2.0;
}

}  // namespace

TEST_CASE("pointer advance stops at the first satisfying index") {
    auto ds = diameter_set::evenly_spaced(4);
    const double th = two_pi / 3.0;
    const int got = advance_pointer(ds, 1, [&](int x) { return ds.arc(0, x) >= th; });
    CHECK(got == 3);
    // A pointer that already satisfies the predicate does not move.
    CHECK(advance_pointer(ds, 5, [&](int x) { return ds.arc(0, x) >= th; }) == 5);
    CHECK_THROWS_AS((void)advance_pointer(ds, 0, [](int) { return false; }),
                    std::runtime_error);
}

TEST_CASE("critical pointers bracket the two sweep thresholds") {
    auto ds = diameter_set::evenly_spaced(4);
    auto cp = critical_pointers_at(ds, 0);
    CHECK(cp.j == 2);
    CHECK(cp.k == 3);
    CHECK(cp.l == 5);
    CHECK(cp.m == 6);

    const double th1 = two_pi / 3.0;
    const double th2 = 2.0 * two_pi / 3.0;
    for (std::uint64_t seed = 60; seed < 64; ++seed) {
        auto rs = random_set(6, seed);
        for (int i = 0; i < rs.point_count(); ++i) {
            auto p = critical_pointers_at(rs, i);
            CHECK(rs.arc(i, p.j) <= th1);
            CHECK(rs.arc(i, p.k) >= th1);
            CHECK(rs.arc(i, p.l) <= th2);
            if (p.m >= 0) CHECK(rs.arc(i, p.m) >= th2);
        }
    }
}

TEST_CASE("critical pointers only move forward as the sweep advances") {
    for (std::uint64_t seed = 70; seed < 74; ++seed) {
        auto rs = random_set(8, seed);
        const int m = rs.point_count();
        int travel_j = 0, travel_l = 0;
        auto prev = critical_pointers_at(rs, 0);
        for (int i = 1; i <= m; ++i) {
            auto cur = critical_pointers_at(rs, i % m);
            travel_j += (cur.j - prev.j + m) % m;
            travel_l += (cur.l - prev.l + m) % m;
            prev = cur;
        }
        // One full lap of the critical vertex drags each pointer exactly
        // one lap around the circle — the linear-time argument.
        CHECK(travel_j == m);
        CHECK(travel_l == m);
    }
}

TEST_CASE("triangle solver reproduces the lattice optima") {
    auto s4 = solve_triangle(diameter_set::evenly_spaced(4));
    CHECK(std::fabs(s4.area - 1.2071067811865475) < 1e-12);
    CHECK(intervals_of(s4.selection, 8).canonical_rotation() == interval_vector{{2, 3, 3}});
    CHECK(s4.solver == solver_kind::triangle);

    auto s3 = solve_triangle(diameter_set::evenly_spaced(3));
    CHECK(std::fabs(s3.area - 3.0 * std::sqrt(3.0) / 4.0) < 1e-12);
}

TEST_CASE("the maximal triangle never contains a diameter") {
    // The unconstrained enumeration maximum coincides with the asymmetric
    // one for triangles, on lattices and on random instances alike.
    for (std::uint64_t seed = 80; seed < 110; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        auto ds = random_set(n, seed);
        auto fast = solve_triangle(ds);
        auto ref = oracle_solve(ds, 3, {false, 5'000'000});
        CHECK(std::fabs(fast.area - ref.area) < 1e-9);
        CHECK(is_asymmetric(ref.selection, ds));
    }
    for (int n = 3; n <= 12; ++n) {
        auto ds = diameter_set::evenly_spaced(n);
        auto fast = solve_triangle(ds);
        auto ref = oracle_solve(ds, 3, {false, 5'000'000});
        CHECK(std::fabs(fast.area - ref.area) < 1e-9);
    }
}

TEST_CASE("triangle solver agrees with the dynamic program") {
    for (std::uint64_t seed = 120; seed < 132; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        auto ds = random_set(n, seed);
        CHECK(std::fabs(solve_triangle(ds).area - solve_dp(ds, 3).area) < 1e-9);
    }
}

TEST_CASE("anchored comparison: wider pairs win inside the threshold, narrower beyond") {
    // Five points c1, c2, p, b2, b1 counterclockwise.  When the two arcs
    // meeting at p in the outer triangle stay within 2pi/3, areas increase
    // toward the outer pair; when the inner triangle's arcs at p already
    // exceed 2pi/3, the order reverses.  Checked on random configurations.
    std::mt19937_64 rng(2024);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    const double th = two_pi / 3.0;
    int hits_within = 0, hits_beyond = 0;
    while (hits_within < 400 || hits_beyond < 400) {
        double t[5];
        for (double& v : t) v = uniform(0.0, two_pi);
        std::sort(std::begin(t), std::end(t));
        bool apart = t[0] + two_pi - t[4] > 1e-3;
        for (int i = 0; i + 1 < 5; ++i) apart = apart && (t[i + 1] - t[i] > 1e-3);
        if (!apart) continue;
        const double c1 = t[0], c2 = t[1], p = t[2], b2 = t[3], b1 = t[4];
        if (b1 - p <= th && p - c1 <= th && hits_within < 400) {
            ++hits_within;
            CHECK(tri_area(p, c2, b2) < tri_area(p, c2, b1));
            CHECK(tri_area(p, c2, b1) < tri_area(p, c1, b1));
            CHECK(tri_area(p, c2, b2) < tri_area(p, c1, b2));
            CHECK(tri_area(p, c1, b2) < tri_area(p, c1, b1));
        }
        if (b2 - p >= th && p - c2 >= th && hits_beyond < 400) {
            ++hits_beyond;
            CHECK(tri_area(p, c2, b2) > tri_area(p, c2, b1));
            CHECK(tri_area(p, c2, b1) > tri_area(p, c1, b1));
            CHECK(tri_area(p, c2, b2) > tri_area(p, c1, b2));
            CHECK(tri_area(p, c1, b2) > tri_area(p, c1, b1));
        }
    }
    CHECK(hits_within == 400);
    CHECK(hits_beyond == 400);
}

TEST_CASE("quadrilateral solver reproduces the lattice optimum") {
    auto s8 = solve_quadrilateral(diameter_set::evenly_spaced(8));
    CHECK(std::fabs(s8.area - 1.9238795325112867) < 1e-12);
    CHECK(intervals_of(s8.selection, 16).canonical_rotation() == interval_vector{{3, 4, 5, 4}});
    CHECK(s8.solver == solver_kind::quad);
    CHECK(is_asymmetric(s8.selection, diameter_set::evenly_spaced(8)));

    auto s4 = solve_quadrilateral(diameter_set::evenly_spaced(4));
    auto ref4 = oracle_solve(diameter_set::evenly_spaced(4), 4, {});
    CHECK(std::fabs(s4.area - ref4.area) < 1e-9);

    auto s12 = solve_quadrilateral(diameter_set::evenly_spaced(12));
    auto ref12 = oracle_solve(diameter_set::evenly_spaced(12), 4, {});
    CHECK(std::fabs(s12.area - ref12.area) < 1e-9);
}

TEST_CASE("quadrilateral solver agrees with the oracle on random instances") {
    for (std::uint64_t seed = 140; seed < 170; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        auto ds = random_set(n, seed);
        auto fast = solve_quadrilateral(ds);
        auto ref = oracle_solve(ds, 4, {});
        CHECK(std::fabs(fast.area - ref.area) < 1e-9);
        CHECK(is_asymmetric(fast.selection, ds));
    }
}

TEST_CASE("the optimal quadrilateral diagonal skips exactly one endpoint") {
    for (std::uint64_t seed = 180; seed < 200; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);
        auto ds = random_set(n, seed);
        const int m = ds.point_count();
        auto sol = solve_quadrilateral(ds);
        const auto& v = sol.selection.indices;
        const int d1 = (v[2] - v[0] + m) % m;
        const int d2 = (v[3] - v[1] + m) % m;
        CHECK((d1 == n - 1 || d1 == n + 1));
        CHECK((d2 == n - 1 || d2 == n + 1));
    }
}

TEST_CASE("swapping either diagonal pair for its mirror preserves the area") {
    // Replacing (u, antipode(u+1)) by (u+1, antipode(u)) moves the side
    // chord to a parallel chord of the same length, so all four variants
    // of a diagonal-structured quadrilateral enclose the same area.
    for (std::uint64_t seed = 210; seed < 218; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        auto ds = random_set(n, seed);
        const int m = ds.point_count();
        for (int u = 0; u < m; ++u)
            for (int d = 2; d <= n - 2; ++d) {
                const int w = (u + d) % m;
                auto area = [&](std::vector<int> idx) {
                    return polygon_area(ds, vertex_selection::of(std::move(idx), ds));
                };
                const double a0 = area({u, w, (u + n + 1) % m, (w + n + 1) % m});
                const double a1 = area({u, (w + 1) % m, (u + n + 1) % m, (w + n) % m});
                const double a2 = area({(u + 1) % m, w, (u + n) % m, (w + n + 1) % m});
                const double a3 = area({(u + 1) % m, (w + 1) % m, (u + n) % m, (w + n) % m});
                CHECK(std::fabs(a1 - a0) < 1e-12);
                CHECK(std::fabs(a2 - a0) < 1e-12);
                CHECK(std::fabs(a3 - a0) < 1e-12);
            }
    }
}

TEST_CASE("small instances are rejected cleanly") {
    CHECK_THROWS_AS((void)solve_quadrilateral(diameter_set::evenly_spaced(3)),
                    std::invalid_argument);
}
