#pragma once

/// Core geometry for polygons inscribed in the unit circle whose vertices
/// are endpoints of a set of diameters.
///
/// A diameter_set stores n diameter angles in [0, pi).  The 2n endpoints are
/// indexed 0..2n-1 in counterclockwise order: endpoint x < n sits at
/// angles[x], endpoint x >= n at angles[x - n] + pi.  The antipode of x is
/// therefore always (x + n) mod 2n, and all "is this arc shorter than a
/// half circle" questions reduce to exact integer index arithmetic.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace asympoly {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

/// Minimum angular separation between two distinct diameters.
inline constexpr double angle_epsilon = 1e-9;

/// Sentinel for "no value yet" in area maximizations and DP tables.
inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

/// Index of the endpoint diametrically opposite x among 2n endpoints.
[[nodiscard]] constexpr auto antipode(int x, int n) noexcept -> int {
    return (x + n) % (2 * n);
}

class diameter_set {
public:
    /// Builds a set from diameter angles.  Input is sorted; every angle must
    /// lie in [0, pi) and consecutive diameters must be separated by at least
    /// angle_epsilon (measured circularly modulo pi, so a diameter at 1e-12
    /// and one at pi - 1e-12 are also rejected).
    static auto from_angles(std::vector<double> angles) -> diameter_set {
        if (angles.size() < 2)
            throw std::invalid_argument("diameter_set: need at least 2 diameters");
        std::sort(angles.begin(), angles.end());
        for (double a : angles) {
            if (!(a >= 0.0) || !(a < pi))
                throw std::invalid_argument("diameter_set: angle outside [0, pi)");
        }
        const int n = static_cast<int>(angles.size());
        for (int i = 0; i + 1 < n; ++i) {
            if (angles[i + 1] - angles[i] < angle_epsilon)
                throw std::invalid_argument("diameter_set: diameters closer than angle_epsilon");
        }
        if (n >= 2 && (angles.front() + pi) - angles.back() < angle_epsilon)
            throw std::invalid_argument("diameter_set: diameters closer than angle_epsilon");
        return diameter_set(std::move(angles));
    }

    /// n diameters at angles i*pi/n, i.e. 2n evenly spaced endpoints.
    static auto evenly_spaced(int n) -> diameter_set {
        if (n < 2)
            throw std::invalid_argument("diameter_set: need at least 2 diameters");
        std::vector<double> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = static_cast<double>(i) * pi / n;
        return diameter_set(std::move(a));
    }

    [[nodiscard]] auto n() const noexcept -> int { return n_; }
    [[nodiscard]] auto point_count() const noexcept -> int { return 2 * n_; }

    /// Angle of endpoint x, in [0, 2pi).
    [[nodiscard]] auto angle(int x) const -> double {
        check_index(x);
        return pt_[static_cast<std::size_t>(x)];
    }

    [[nodiscard]] auto antipode(int x) const -> int {
        check_index(x);
        return asympoly::antipode(x, n_);
    }

    /// Counterclockwise arc from endpoint a to endpoint b, in [0, 2pi).
    [[nodiscard]] auto arc(int a, int b) const -> double {
        double d = angle(b) - angle(a);
        if (d < 0.0) d += two_pi;
        return d;
    }

    [[nodiscard]] auto diameter_angles() const noexcept -> const std::vector<double>& {
        return diag_;
    }

    /// True when all diameter gaps equal pi/n within tol.
    [[nodiscard]] auto is_evenly_spaced(double tol = angle_epsilon) const -> bool {
        const double step = pi / n_;
        for (int i = 0; i < n_; ++i) {
            double next = (i + 1 < n_) ? diag_[static_cast<std::size_t>(i + 1)] : diag_.front() + pi;
            if (std::abs((next - diag_[static_cast<std::size_t>(i)]) - step) > tol)
                return false;
        }
        return true;
    }

private:
    explicit diameter_set(std::vector<double> a) : diag_(std::move(a)), n_(static_cast<int>(diag_.size())) {
        pt_.resize(static_cast<std::size_t>(2 * n_));
        for (int i = 0; i < n_; ++i) {
            pt_[static_cast<std::size_t>(i)] = diag_[static_cast<std::size_t>(i)];
            pt_[static_cast<std::size_t>(i + n_)] = diag_[static_cast<std::size_t>(i)] + pi;
        }
    }

    void check_index(int x) const {
        if (x < 0 || x >= 2 * n_)
            throw std::invalid_argument("diameter_set: endpoint index " + std::to_string(x) + " out of range");
    }

    std::vector<double> diag_;
    std::vector<double> pt_;
    int n_ = 0;
};

/// A set of chosen endpoint indices, kept sorted ascending (which is
/// counterclockwise order on the circle).
struct vertex_selection {
    std::vector<int> indices;

    static auto of(std::vector<int> idx, const diameter_set& ds) -> vertex_selection {
        std::sort(idx.begin(), idx.end());
        for (int x : idx) {
            if (x < 0 || x >= ds.point_count())
                throw std::invalid_argument("vertex_selection: index out of range");
        }
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw std::invalid_argument("vertex_selection: duplicate index");
        return vertex_selection{std::move(idx)};
    }

    [[nodiscard]] auto k() const noexcept -> int { return static_cast<int>(indices.size()); }
};

enum class solver_kind { lattice, dp, triangle, quad, oracle };

[[nodiscard]] inline auto solver_name(solver_kind s) -> const char* {
    switch (s) {
        case solver_kind::lattice: return "lattice";
        case solver_kind::dp: return "dp";
        case solver_kind::triangle: return "triangle";
        case solver_kind::quad: return "quad";
        case solver_kind::oracle: return "oracle";
    }
    return "?";
}

struct solution {
    vertex_selection selection;
    double area = 0.0;
    solver_kind solver = solver_kind::oracle;
};

/// Area of the inscribed polygon with the selected vertices: half the sum of
/// sin over the consecutive angular gaps.  Gaps larger than pi contribute a
/// negative term, which matches the signed shoelace value, so the formula is
/// valid for any vertex placement, not just center-containing polygons.
[[nodiscard]] inline auto polygon_area(const diameter_set& ds, const vertex_selection& sel) -> double {
    const int k = sel.k();
    if (k < 3)
        throw std::invalid_argument("polygon_area: need at least 3 vertices");
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
        const int a = sel.indices[static_cast<std::size_t>(i)];
        const int b = sel.indices[static_cast<std::size_t>((i + 1) % k)];
        if (a == b)
            throw std::invalid_argument("polygon_area: duplicate vertex");
        s += std::sin(ds.arc(a, b));
    }
    return 0.5 * s;
}

/// Area of the triangle formed by the circle center and endpoints a, b:
/// sin of the angular gap, folded to (0, pi), divided by 2.  The endpoints
/// must be distinct and non-antipodal (gap exactly pi has zero area and
/// signals a degenerate call).
[[nodiscard]] inline auto triangle_area_with_center(const diameter_set& ds, int a, int b) -> double {
    if (a == b)
        throw std::invalid_argument("triangle_area_with_center: identical endpoints");
    const int gap = (b - a + ds.point_count()) % ds.point_count();
    if (gap == ds.n())
        throw std::invalid_argument("triangle_area_with_center: antipodal endpoints (arc of pi)");
    double d = ds.arc(a, b);
    if (d > pi) d = two_pi - d;
    return 0.5 * std::sin(d);
}

/// True when the selection contains no antipodal pair, i.e. the polygon
/// contains no full diameter.
[[nodiscard]] inline auto is_asymmetric(const vertex_selection& sel, const diameter_set& ds) -> bool {
    const auto& v = sel.indices;  // sorted
    for (int x : v) {
        const int ax = ds.antipode(x);
        if (std::binary_search(v.begin(), v.end(), ax))
            return false;
    }
    return true;
}

}  // namespace asympoly
