#pragma once

/// Dynamic program over double-wedges for arbitrarily placed diameters.
///
/// A state ("key") is an anchor quadruple (i, j, l, t): two disjoint arcs
/// [i..j] and [l..t], in counterclockwise order i, j, l, t, whose chosen
/// points form two center-anchored fans ("wedges").  The layer index s is
/// the total number of chosen points.  One wedge may be a single point
/// (i == j or l == t) but not both.  Keys are valid only when the union of
/// the two wedges can contain no diameter:
///
///   - every wedge arc spans less than pi,
///   - no anchor is antipodal to another anchor,
///   - the antipode of t falls inside or before arc [i..j], or the antipode
///     of j falls inside or after arc [l..t] (so growth below can never
///     capture the antipode of an anchor of the other wedge).
///
/// All of those conditions are exact integer index arithmetic: with the
/// canonical endpoint order, an arc from a to b is shorter than pi exactly
/// when (b - a) mod 2n < n.
///
/// Growth: a key grows the wedge whose far anchor was added last, which is
/// decided by the same integer test (dp_grows_first_wedge); the new point m
/// becomes the previous far anchor, scanned over the half-open range from
/// the near anchor to the new far anchor.  The inner argmax is monotone
/// along each row sweep, so a never-retreating pointer gives amortized
/// linear work per row.  The final answer closes the best k-point key with
/// the two triangles (j -> l) and (t -> i); those closing sines are signed,
/// so mid-enumeration keys whose closing arcs exceed pi are penalized, not
/// miscounted.

#include <array>
#include <cstdint>
#include <thread>

#include "geometry.hpp"

namespace asympoly {

/// Validity of an anchor quadruple, by exact integer arithmetic.
[[nodiscard]] inline auto is_valid_anchor(const diameter_set& ds, int i, int j, int l, int t) -> bool {
    const int n = ds.n();
    const int m = 2 * n;
    if (i < 0 || i >= m || j < 0 || j >= m || l < 0 || l >= m || t < 0 || t >= m)
        return false;
    const int jj = (j - i + m) % m;
    const int ll = (l - i + m) % m;
    const int tt = (t - i + m) % m;
    if (i == j) {
        if (l == t) return false;  // a two-point state is not a double wedge
        return 0 < ll && ll < tt && tt < m && tt - ll < n && ll != n && tt != n;
    }
    if (l == t)
        return 0 < jj && jj < ll && ll < m && jj < n && ll != n && ll - jj != n;
    return 0 < jj && jj < ll && ll < tt && tt < m  // ccw anchor order i, j, l, t
        && jj < n                                  // wedge [i..j] spans < pi
        && tt - ll < n                             // wedge [l..t] spans < pi
        && tt > n && ll < jj + n                   // antipode ordering (growth safety)
        && ll != n && tt != n && ll - jj != n && tt - jj != n;  // no antipodal anchors
}

/// Which wedge the recurrence extends at this key: true -> wedge [i..j]
/// (sweep j), false -> wedge [l..t] (sweep t).  Degenerate wedges never
/// grow; for non-degenerate keys the two cases are mutually exclusive.
[[nodiscard]] inline auto dp_grows_first_wedge(const diameter_set& ds, int i, int j, int l, int t) -> bool {
    if (i == j) return false;
    if (l == t) return true;
    const int m = ds.point_count();
    const int jj = (j - i + m) % m;
    const int tt = (t - i + m) % m;
    return tt < jj + ds.n();
}

/// Precomputed 0.5 * sin(arc(a, b)) for every ordered endpoint pair.  The
/// sine is signed: arcs above pi contribute negatively.
class arc_sines {
public:
    explicit arc_sines(const diameter_set& ds) : m_(ds.point_count()) {
        v_.resize(static_cast<std::size_t>(m_) * m_);
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b < m_; ++b)
                v_[static_cast<std::size_t>(a) * m_ + b] = 0.5 * std::sin(ds.arc(a, b));
    }

    [[nodiscard]] auto half_sin(int a, int b) const -> double {
        return v_[static_cast<std::size_t>(a) * m_ + b];
    }

private:
    int m_;
    std::vector<double> v_;
};

/// One dense DP layer: value per anchor quadruple, -inf where invalid or
/// unreachable.
class dp_table {
public:
    explicit dp_table(int point_count)
        : m_(point_count),
          v_(static_cast<std::size_t>(m_) * m_ * m_ * m_, neg_inf) {}

    [[nodiscard]] auto index(int i, int j, int l, int t) const -> std::size_t {
        return ((static_cast<std::size_t>(i) * m_ + j) * m_ + l) * m_ + t;
    }

    [[nodiscard]] auto at(int i, int j, int l, int t) const -> double { return v_[index(i, j, l, t)]; }
    void set(int i, int j, int l, int t, double value) { v_[index(i, j, l, t)] = value; }
    void reset() { std::fill(v_.begin(), v_.end(), neg_inf); }
    [[nodiscard]] auto point_count() const noexcept -> int { return m_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return v_.size(); }

private:
    int m_;
    std::vector<double> v_;
};

/// Backpointers for one layer, parallel to dp_table; -1 where unset.
using dp_backpointers = std::vector<std::int16_t>;

struct dp_cell {
    double value = neg_inf;
    std::int16_t backpointer = -1;
};

/// One sweep's worth of results: indexed by the swept anchor (j or t).
using dp_row = std::vector<dp_cell>;

/// Value of a three-point state: one wedge is a single point, the other a
/// two-point fan whose center triangle is the whole area so far.  Invalid
/// anchors yield -inf.
[[nodiscard]] inline auto dp_base(const diameter_set& ds, int i, int j, int l, int t) -> double {
    if (!is_valid_anchor(ds, i, j, l, t)) return neg_inf;
    if (i == j) return 0.5 * std::sin(ds.arc(l, t));
    if (l == t) return 0.5 * std::sin(ds.arc(i, j));
    return neg_inf;  // four distinct anchors is a 4-point state, not a base state
}

/// Dense base layer (s = 3).
[[nodiscard]] inline auto dp_base_table(const diameter_set& ds) -> dp_table {
    const int m = ds.point_count();
    dp_table f(m);
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l)
            for (int t = 0; t < m; ++t) {
                const double v = dp_base(ds, i, i, l, t);
                if (v > neg_inf) f.set(i, i, l, t, v);
            }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l) {
                const double v = dp_base(ds, i, j, l, l);
                if (v > neg_inf) f.set(i, j, l, l, v);
            }
    return f;
}

/// Transition for one key: maximum over admissible new points m of
/// previous-layer value plus the added center triangle.  Scans the full
/// half-open range from the growing wedge's near anchor; invalid keys and
/// empty ranges yield {-inf, -1}.  Ties keep the earliest m in sweep order.
[[nodiscard]] inline auto dp_step_naive(const dp_table& prev, const diameter_set& ds,
                                        const arc_sines& sines, int i, int j, int l, int t) -> dp_cell {
    dp_cell out;
    if (!is_valid_anchor(ds, i, j, l, t)) return out;
    const int m = ds.point_count();
    if (dp_grows_first_wedge(ds, i, j, l, t)) {
        for (int p = i; p != j; p = (p + 1) % m) {
            const double v = prev.at(i, p, l, t);
            if (v == neg_inf) continue;
            const double val = v + sines.half_sin(p, j);
            if (val > out.value) {
                out.value = val;
                out.backpointer = static_cast<std::int16_t>(p);
            }
        }
    } else {
        for (int p = l; p != t; p = (p + 1) % m) {
            const double v = prev.at(i, j, l, p);
            if (v == neg_inf) continue;
            const double val = v + sines.half_sin(p, t);
            if (val > out.value) {
                out.value = val;
                out.backpointer = static_cast<std::int16_t>(p);
            }
        }
    }
    return out;
}

/// Row transition with the monotone inner pointer: fixed (i, l, t), sweep j
/// counterclockwise strictly between i and l.  Produces exactly the keys of
/// this row that grow the first wedge; values match dp_step_naive and the
/// recorded backpointers never retreat along the sweep.
[[nodiscard]] inline auto dp_step_monotone_wedge1(const dp_table& prev, const diameter_set& ds,
                                                  const arc_sines& sines, int i, int l, int t) -> dp_row {
    const int m = ds.point_count();
    dp_row row(static_cast<std::size_t>(m));
    if (l == i || t == i) return row;
    int ptr = i;
    const int span = (l - i + m) % m;
    for (int jj = 1; jj < span; ++jj) {
        const int j = (i + jj) % m;
        if (!is_valid_anchor(ds, i, j, l, t) || !dp_grows_first_wedge(ds, i, j, l, t))
            continue;
        double best = neg_inf;
        int bm = -1;
        for (int p = ptr; p != j; p = (p + 1) % m) {
            const double v = prev.at(i, p, l, t);
            if (v == neg_inf) continue;
            const double val = v + sines.half_sin(p, j);
            if (val > best) {
                best = val;
                bm = p;
            }
        }
        if (best > neg_inf) {
            row[static_cast<std::size_t>(j)] = dp_cell{best, static_cast<std::int16_t>(bm)};
            ptr = bm;
        }
    }
    return row;
}

/// Twin of dp_step_monotone_wedge1 for the second wedge: fixed (i, j, l),
/// sweep t counterclockwise strictly between l and i.
[[nodiscard]] inline auto dp_step_monotone_wedge2(const dp_table& prev, const diameter_set& ds,
                                                  const arc_sines& sines, int i, int j, int l) -> dp_row {
    const int m = ds.point_count();
    dp_row row(static_cast<std::size_t>(m));
    if (l == i || l == j) return row;
    int ptr = l;
    const int span = (i - l + m) % m;
    for (int tt = 1; tt < span; ++tt) {
        const int t = (l + tt) % m;
        if (!is_valid_anchor(ds, i, j, l, t) || dp_grows_first_wedge(ds, i, j, l, t))
            continue;
        double best = neg_inf;
        int bm = -1;
        for (int p = ptr; p != t; p = (p + 1) % m) {
            const double v = prev.at(i, j, l, p);
            if (v == neg_inf) continue;
            const double val = v + sines.half_sin(p, t);
            if (val > best) {
                best = val;
                bm = p;
            }
        }
        if (best > neg_inf) {
            row[static_cast<std::size_t>(t)] = dp_cell{best, static_cast<std::int16_t>(bm)};
            ptr = bm;
        }
    }
    return row;
}

/// Computes one full layer from the previous one.  Rows are independent, so
/// they may be striped across threads by first anchor; the result is
/// bit-identical for any thread count.
inline void dp_layer_monotone(const dp_table& prev, const diameter_set& ds, const arc_sines& sines,
                              dp_table& next, dp_backpointers& bp, int threads = 1) {
    const int m = ds.point_count();
    next.reset();
    bp.assign(next.size(), std::int16_t{-1});

    auto run = [&](int i_begin, int i_end) {
        for (int i = i_begin; i < i_end; ++i) {
            for (int l = 0; l < m; ++l) {
                if (l == i) continue;
                for (int t = 0; t < m; ++t) {
                    if (t == i) continue;
                    dp_row row = dp_step_monotone_wedge1(prev, ds, sines, i, l, t);
                    for (int j = 0; j < m; ++j) {
                        const dp_cell& c = row[static_cast<std::size_t>(j)];
                        if (c.value == neg_inf) continue;
                        next.set(i, j, l, t, c.value);
                        bp[next.index(i, j, l, t)] = c.backpointer;
                    }
                }
            }
            for (int j = 0; j < m; ++j) {
                for (int l = 0; l < m; ++l) {
                    if (l == i || l == j) continue;
                    dp_row row = dp_step_monotone_wedge2(prev, ds, sines, i, j, l);
                    for (int t = 0; t < m; ++t) {
                        const dp_cell& c = row[static_cast<std::size_t>(t)];
                        if (c.value == neg_inf) continue;
                        next.set(i, j, l, t, c.value);
                        bp[next.index(i, j, l, t)] = c.backpointer;
                    }
                }
            }
        }
    };

    const int tcount = std::clamp(threads, 1, m);
    if (tcount == 1) {
        run(0, m);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(tcount));
    const int chunk = (m + tcount - 1) / tcount;
    for (int w = 0; w < tcount; ++w) {
        const int b = w * chunk;
        const int e = std::min(m, b + chunk);
        if (b >= e) break;
        pool.emplace_back(run, b, e);
    }
    for (auto& th : pool) th.join();
}

/// Reference layer computation (full rescans, no monotone pointer); used to
/// cross-check dp_layer_monotone.
inline void dp_layer_naive(const dp_table& prev, const diameter_set& ds, const arc_sines& sines,
                           dp_table& next, dp_backpointers& bp) {
    const int m = ds.point_count();
    next.reset();
    bp.assign(next.size(), std::int16_t{-1});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l)
                for (int t = 0; t < m; ++t) {
                    const dp_cell c = dp_step_naive(prev, ds, sines, i, j, l, t);
                    if (c.value == neg_inf) continue;
                    next.set(i, j, l, t, c.value);
                    bp[next.index(i, j, l, t)] = c.backpointer;
                }
}

struct dp_trace {
    std::array<int, 4> best_key{-1, -1, -1, -1};
};

/// Maximum-area asymmetric k-gon by the double-wedge dynamic program.
/// Requires 3 <= k < n.  `threads` stripes rows within each layer; the
/// result is identical for any thread count.
[[nodiscard]] inline auto solve_dp(const diameter_set& ds, int k, int threads = 1,
                                   dp_trace* trace = nullptr) -> solution {
    const int n = ds.n();
    const int m = ds.point_count();
    if (k < 3 || k >= n)
        throw std::invalid_argument("solve_dp: need 3 <= k < n");

    const arc_sines sines(ds);
    dp_table cur = dp_base_table(ds);
    dp_table nxt(m);
    std::vector<dp_backpointers> bps;  // bps[s - 4] belongs to layer s
    bps.reserve(static_cast<std::size_t>(std::max(0, k - 3)));
    for (int s = 4; s <= k; ++s) {
        dp_backpointers bp;
        dp_layer_monotone(cur, ds, sines, nxt, bp, threads);
        bps.push_back(std::move(bp));
        std::swap(cur, nxt);
    }

    double best = neg_inf;
    std::array<int, 4> key{-1, -1, -1, -1};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < m; ++l)
                for (int t = 0; t < m; ++t) {
                    const double v = cur.at(i, j, l, t);
                    if (v == neg_inf) continue;
                    const double total = v + sines.half_sin(j, l) + sines.half_sin(t, i);
                    if (total > best) {
                        best = total;
                        key = {i, j, l, t};
                    }
                }
    if (best == neg_inf)
        throw std::runtime_error("solve_dp: no valid state reached layer k");
    if (trace) trace->best_key = key;

    // Walk the backpointers, replacing the grown wedge's far anchor; the
    // four anchors of the final key plus every replaced anchor are exactly
    // the chosen points (the base key's coincident anchors collapse).
    std::vector<int> chosen(key.begin(), key.end());
    std::array<int, 4> curkey = key;
    for (int s = k; s >= 4; --s) {
        auto [i, j, l, t] = curkey;
        const int back = bps[static_cast<std::size_t>(s - 4)][cur.index(i, j, l, t)];
        if (back < 0)
            throw std::logic_error("solve_dp: missing backpointer during reconstruction");
        if (dp_grows_first_wedge(ds, i, j, l, t))
            curkey = {i, back, l, t};
        else
            curkey = {i, j, l, back};
        chosen.push_back(back);
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    if (static_cast<int>(chosen.size()) != k)
        throw std::logic_error("solve_dp: reconstructed selection has wrong size");

    vertex_selection sel = vertex_selection::of(std::move(chosen), ds);
    if (!is_asymmetric(sel, ds))
        throw std::logic_error("solve_dp: reconstructed selection contains a diameter");
    const double area = polygon_area(ds, sel);
    if (std::abs(area - best) > 1e-12)
        throw std::logic_error("solve_dp: selection area disagrees with table value");
    return solution{std::move(sel), area, solver_kind::dp};
}

}  // namespace asympoly
