// Recognizers for the structural classes the pipeline cares about:
// closed paths, weakly closed paths, L-configurations, ladders, zig-zag
// walks, plus exhaustive enumeration of closed paths at desk scale.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "polyalg/geometry.hpp"

namespace polyalg {

// Cyclic cell sequence A_1..A_n witnessing the closed-path conditions.
struct ClosedPathSequence {
    std::vector<Cell> cells;
    int n() const { return static_cast<int>(cells.size()); }
    const Cell& at(int i) const {  // cyclic, 0-based
        int m = n();
        return cells[static_cast<size_t>(((i % m) + m) % m)];
    }
};

inline bool share_vertex(Cell a, Cell b) {
    return std::abs(a.ll.x - b.ll.x) <= 1 && std::abs(a.ll.y - b.ll.y) <= 1;
}

// Independent check of the four defining conditions (used to re-verify
// witnesses; shares no state with the search).
inline bool verify_closed_path(const Polyomino& P, const ClosedPathSequence& seq) {
    int n = seq.n();
    if (n <= 5) return false;
    std::set<Cell> in_seq(seq.cells.begin(), seq.cells.end());
    if (static_cast<int>(in_seq.size()) != n || n != P.size()) return false;
    for (const Cell& c : seq.cells)
        if (!P.contains(c)) return false;
    for (int i = 0; i < n; ++i)
        if (!seq.at(i).touches(seq.at(i + 1))) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = std::abs(i - j);
            d = std::min(d, n - d);
            if (d > 2 && share_vertex(seq.at(i), seq.at(j))) return false;
        }
    return true;
}

namespace detail {

// counterclockwise iff the polygon through cell centers has positive area
inline bool is_ccw(const std::vector<Cell>& cycle) {
    long long twice_area = 0;
    int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        Point a = cycle[static_cast<size_t>(i)].ll;
        Point b = cycle[static_cast<size_t>((i + 1) % n)].ll;
        twice_area += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
    }
    return twice_area > 0;
}

inline ClosedPathSequence canonical_cycle(std::vector<Cell> cycle) {
    if (!is_ccw(cycle)) std::reverse(cycle.begin(), cycle.end());
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return {std::move(cycle)};
}

}  // namespace detail

// Witness sequence if P is a closed path: canonical start at the
// lexicographically smallest cell, counterclockwise orientation.
inline std::optional<ClosedPathSequence> closed_path_sequence(const Polyomino& P) {
    int n = P.size();
    if (n <= 5) return std::nullopt;
    std::map<Cell, std::vector<Cell>> adj;
    for (const Cell& c : P.cells())
        for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
            Cell nb(c.ll + d);
            if (P.contains(nb)) adj[c].push_back(nb);
        }
    for (auto& [c, nbs] : adj)
        if (nbs.size() != 2) return std::nullopt;
    std::vector<Cell> cycle{P.cells().front()};
    Cell prev = cycle.front(), cur = adj[cycle.front()].front();
    while (cur != cycle.front()) {
        cycle.push_back(cur);
        const auto& nbs = adj[cur];
        Cell nxt = nbs[0] == prev ? nbs[1] : nbs[0];
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(cycle.size()) != n) return std::nullopt;  // several cycles
    ClosedPathSequence seq = detail::canonical_cycle(std::move(cycle));
    if (!verify_closed_path(P, seq)) return std::nullopt;
    return seq;
}

struct LConfiguration {
    std::array<Cell, 5> cells;  // C1,C2,C3 and C3,C4,C5 orthogonal straight
};

inline std::vector<LConfiguration> find_L_configurations(const Polyomino& P) {
    std::vector<LConfiguration> out;
    const Point dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const Cell& mid : P.cells())
        for (Point d : dirs) {
            Cell c2(mid.ll - d), c1(mid.ll - d - d);
            if (!P.contains(c1) || !P.contains(c2)) continue;
            for (Point e : dirs) {
                if (e.x * d.x + e.y * d.y != 0) continue;  // orthogonal arms only
                Cell c4(mid.ll + e), c5(mid.ll + e + e);
                if (!P.contains(c4) || !P.contains(c5)) continue;
                out.push_back({{c1, c2, mid, c4, c5}});
            }
        }
    return out;
}

struct Ladder {
    std::vector<Block> blocks;
    int steps() const { return static_cast<int>(blocks.size()); }
};

namespace detail {

inline std::optional<std::array<Point, 2>> block_overlap(const Block& a, const Block& b) {
    std::set<Point> va = a.vertex_set();
    std::vector<Point> shared;
    for (Point p : b.vertex_set())
        if (va.count(p)) shared.push_back(p);
    if (shared.size() != 2 || shared[0] == shared[1]) return std::nullopt;
    return std::array<Point, 2>{shared[0], shared[1]};
}

}  // namespace detail

// Chains B_1..B_m of maximal blocks of rank >= 2 (both directions tried)
// whose consecutive overlaps are 2-vertex sets with the non-collinearity
// condition; returns every ladder with at least min_steps blocks.
inline std::vector<Ladder> find_ladders(const Polyomino& P, int min_steps) {
    std::vector<Ladder> out;
    for (Dir d : {Dir::Horizontal, Dir::Vertical}) {
        std::vector<Block> blocks;
        for (Block& b : P.maximal_blocks(d))
            if (b.rank() >= 2) blocks.push_back(std::move(b));
        size_t m = blocks.size();
        // adjacency + the overlap interval of each linked pair
        std::map<std::pair<size_t, size_t>, std::array<Point, 2>> link;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (auto ov = detail::block_overlap(blocks[i], blocks[j])) {
                    link[{i, j}] = *ov;
                    link[{j, i}] = *ov;
                }
        // DFS over simple chains; the ladder condition is checked on the
        // last two overlaps as the chain grows
        std::vector<size_t> chain;
        std::vector<bool> used(m, false);
        auto emit = [&]() {
            if (static_cast<int>(chain.size()) < min_steps) return;
            Ladder lad;
            for (size_t idx : chain) lad.blocks.push_back(blocks[idx]);
            out.push_back(std::move(lad));
        };
        std::function<void()> dfs = [&]() {
            emit();
            size_t cur = chain.back();
            for (size_t nxt = 0; nxt < m; ++nxt) {
                if (used[nxt] || !link.count({cur, nxt})) continue;
                if (chain.size() >= 2) {
                    size_t prv = chain[chain.size() - 2];
                    auto [a1, b1] = link[{prv, cur}];
                    auto [a2, b2] = link[{cur, nxt}];
                    // the two overlap intervals must not lie on one maximal
                    // edge interval
                    bool same = false;
                    for (Dir dd : {Dir::Horizontal, Dir::Vertical})
                        for (const Interval& iv : P.edge_intervals(dd))
                            if (iv.contains(a1) && iv.contains(b1) && iv.contains(a2) &&
                                iv.contains(b2))
                                same = true;
                    if (same) continue;
                }
                used[nxt] = true;
                chain.push_back(nxt);
                dfs();
                chain.pop_back();
                used[nxt] = false;
            }
        };
        for (size_t s = 0; s < m; ++s) {
            used[s] = true;
            chain = {s};
            dfs();
            used[s] = false;
        }
    }
    return out;
}

struct ZigZagWalk {
    std::vector<Interval> intervals;       // I_1..I_l
    std::vector<Point> pivots;             // v_1..v_l (v_{l+1} = v_1)
    std::vector<Point> opposite_corners;   // z_i = diagonal partner of v_i in I_i
    std::vector<Point> side_corners;       // u_i = partner of v_{i+1}
};

struct SearchBudgetExceededError : std::runtime_error {
    SearchBudgetExceededError() : std::runtime_error("zig-zag search budget exceeded") {}
};

namespace detail {

inline Point pair_partner(const Interval& iv, Point v) {
    if (v == iv.lo) return iv.hi;
    if (v == iv.hi) return iv.lo;
    if (v == iv.anti_lo()) return iv.anti_hi();
    if (v == iv.anti_hi()) return iv.anti_lo();
    throw std::invalid_argument("not a corner");
}

inline bool on_diagonal(const Interval& iv, Point v) { return v == iv.lo || v == iv.hi; }

// rectangle intersection is exactly the single point v
inline bool meet_exactly_at(const Interval& a, const Interval& b, Point v) {
    int lox = std::max(a.lo.x, b.lo.x), loy = std::max(a.lo.y, b.lo.y);
    int hix = std::min(a.hi.x, b.hi.x), hiy = std::min(a.hi.y, b.hi.y);
    return lox == hix && loy == hiy && Point{lox, loy} == v;
}

}  // namespace detail

// Independent validation of a zig-zag walk witness.
inline bool verify_zigzag(const Polyomino& P, const ZigZagWalk& w) {
    size_t l = w.intervals.size();
    if (l < 2 || w.pivots.size() != l || w.opposite_corners.size() != l) return false;
    std::set<Interval> distinct(w.intervals.begin(), w.intervals.end());
    if (distinct.size() != l) return false;
    std::vector<Interval> inner = P.inner_intervals();
    std::set<Interval> inner_set(inner.begin(), inner.end());
    for (size_t i = 0; i < l; ++i) {
        const Interval& iv = w.intervals[i];
        if (!inner_set.count(iv)) return false;
        Point v = w.pivots[i], vn = w.pivots[(i + 1) % l];
        Point z = w.opposite_corners[i];
        if (detail::pair_partner(iv, v) != z) return false;
        if (detail::on_diagonal(iv, v) == detail::on_diagonal(iv, vn)) return false;
        if (!detail::meet_exactly_at(iv, w.intervals[(i + 1) % l], vn)) return false;
        if (!P.same_edge_interval(v, vn)) return false;
    }
    for (size_t i = 0; i < l; ++i)
        for (size_t j = i + 1; j < l; ++j)
            for (const Interval& J : inner)
                if (J.contains(w.opposite_corners[i]) && J.contains(w.opposite_corners[j]))
                    return false;
    return true;
}

// Shortest zig-zag walk, found by iterative deepening over the walk length.
inline std::optional<ZigZagWalk> has_zigzag_walk(const Polyomino& P,
                                                 size_t interval_budget = 10'000) {
    std::vector<Interval> inner = P.inner_intervals();
    if (inner.size() > interval_budget) throw SearchBudgetExceededError();
    size_t m = inner.size();
    // z-compatibility: z_i and z_j may not lie in a common inner interval
    auto z_conflict = [&](Point a, Point b) {
        for (const Interval& J : inner)
            if (J.contains(a) && J.contains(b)) return true;
        return false;
    };

    ZigZagWalk walk;
    std::vector<bool> used(m, false);
    std::function<bool(size_t, Point, size_t, size_t)> extend =
        [&](size_t first, Point v1, size_t curi, size_t remaining) -> bool {
        const Interval& cur = inner[curi];
        Point v = walk.pivots.back();
        bool v_diag = detail::on_diagonal(cur, v);
        Point z = detail::pair_partner(cur, v);
        for (Point zj : walk.opposite_corners)
            if (z_conflict(z, zj)) return false;
        walk.opposite_corners.push_back(z);
        std::array<Point, 2> nexts =
            v_diag ? cur.anti_diagonal() : std::array<Point, 2>{cur.lo, cur.hi};
        for (Point vn : nexts) {
            if (!P.same_edge_interval(v, vn)) continue;
            walk.side_corners.push_back(detail::pair_partner(cur, vn));
            if (remaining == 1) {
                if (vn == v1 && detail::meet_exactly_at(cur, inner[first], v1)) {
                    walk.side_corners.pop_back();
                    walk.opposite_corners.pop_back();
                    return true;
                }
            } else {
                for (size_t ni = 0; ni < m; ++ni) {
                    if (used[ni] || !detail::meet_exactly_at(cur, inner[ni], vn)) continue;
                    used[ni] = true;
                    walk.intervals.push_back(inner[ni]);
                    walk.pivots.push_back(vn);
                    if (extend(first, v1, ni, remaining - 1)) {
                        walk.side_corners.pop_back();
                        walk.opposite_corners.pop_back();
                        return true;
                    }
                    walk.intervals.pop_back();
                    walk.pivots.pop_back();
                    used[ni] = false;
                }
            }
            walk.side_corners.pop_back();
        }
        walk.opposite_corners.pop_back();
        return false;
    };

    for (size_t len = 2; len <= m; ++len)
        for (size_t s = 0; s < m; ++s)
            for (Point v1 : inner[s].corners()) {
                walk = {};
                std::fill(used.begin(), used.end(), false);
                used[s] = true;
                walk.intervals.push_back(inner[s]);
                walk.pivots.push_back(v1);
                if (extend(s, v1, s, len)) {
                    // rebuild the decorations for the complete cycle
                    ZigZagWalk full;
                    full.intervals = walk.intervals;
                    full.pivots = walk.pivots;
                    size_t l = full.intervals.size();
                    for (size_t i = 0; i < l; ++i) {
                        full.opposite_corners.push_back(
                            detail::pair_partner(full.intervals[i], full.pivots[i]));
                        full.side_corners.push_back(detail::pair_partner(
                            full.intervals[i], full.pivots[(i + 1) % l]));
                    }
                    if (!verify_zigzag(P, full))
                        throw std::logic_error("zig-zag search returned an invalid witness");
                    return full;
                }
            }
    return std::nullopt;
}

// Open cell path whose far end hooks back to the start sharing exactly one
// vertex and enclosing one hole. Operational recognizer for the weakly
// closed class; experimental, validated by |V(P)| = 2|P| + 1 and by the
// algebraic checks downstream.
struct WeaklyClosedPath {
    std::vector<Cell> cells;  // A_1..A_n, consecutive cells edge-adjacent
    Point hook;               // the single shared vertex at the seam
};

inline std::optional<WeaklyClosedPath> weakly_closed_path(const Polyomino& P) {
    int n = P.size();
    if (n <= 5) return std::nullopt;
    if (static_cast<int>(P.vertices().size()) != 2 * n + 1) return std::nullopt;
    if (P.holes().size() != 1) return std::nullopt;
    std::map<Cell, std::vector<Cell>> adj;
    std::vector<Cell> ends;
    for (const Cell& c : P.cells()) {
        for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
            Cell nb(c.ll + d);
            if (P.contains(nb)) adj[c].push_back(nb);
        }
        if (adj[c].size() == 1) ends.push_back(c);
        if (adj[c].size() > 2) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    std::vector<Cell> path{ends.front()};
    Cell prev = path.front(), cur = adj[path.front()].front();
    while (true) {
        path.push_back(cur);
        if (adj[cur].size() == 1) break;
        Cell nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(path.size()) != n) return std::nullopt;
    // vertex contacts beyond the +-2 window must be exactly one seam pair
    // near the two ends, sharing a single vertex
    std::vector<std::pair<int, int>> contacts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 3; j < n; ++j)
            if (share_vertex(path[static_cast<size_t>(i)], path[static_cast<size_t>(j)]))
                contacts.push_back({i, j});
    if (contacts.size() != 1) return std::nullopt;
    auto [i, j] = contacts.front();
    if (i > 1 || j < n - 2) return std::nullopt;
    std::vector<Point> shared;
    for (Point p : path[static_cast<size_t>(i)].vertices())
        if (path[static_cast<size_t>(j)].has_vertex(p)) shared.push_back(p);
    if (shared.size() != 1) return std::nullopt;
    // orient so the hook is at the tail end
    if (i == 0 && j <= n - 2) std::reverse(path.begin(), path.end());
    return WeaklyClosedPath{std::move(path), shared.front()};
}

// Exhaustive generation of closed paths with at most max_cells cells, up to
// translation. Depth-first self-avoiding cycle search with the
// vertex-disjointness condition used for pruning.
inline std::vector<Polyomino> enumerate_closed_paths(int max_cells) {
    if (max_cells <= 6 || max_cells > 30)
        throw std::invalid_argument("enumerate_closed_paths expects 6 < max_cells <= 30");
    std::set<Polyomino> found;
    std::vector<Cell> path{Cell(0, 0), Cell(1, 0)};
    std::set<Cell> on_path{Cell(0, 0), Cell(1, 0)};

    auto violates = [&](const Cell& cand) {
        // cells at index distance >= 3 from the candidate's position may not
        // share vertices; the first two cells are exempt until closure
        int k = static_cast<int>(path.size());
        for (int j = 2; j < k - 2; ++j)
            if (share_vertex(cand, path[static_cast<size_t>(j)])) return true;
        return false;
    };

    std::function<void()> grow = [&]() {
        int k = static_cast<int>(path.size());
        if (k > max_cells) return;
        if (k > 5 && path.back().touches(path.front())) {
            Polyomino cand = Polyomino::from_cells(path);
            if (!found.count(cand)) {
                ClosedPathSequence seq{path};
                if (verify_closed_path(cand, seq)) found.insert(std::move(cand));
            }
        }
        if (k == max_cells) return;
        for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
            Cell nxt(path.back().ll + d);
            if (on_path.count(nxt) || violates(nxt)) continue;
            path.push_back(nxt);
            on_path.insert(nxt);
            grow();
            on_path.erase(nxt);
            path.pop_back();
        }
    };
    grow();
    return {found.begin(), found.end()};
}

struct Classification {
    bool simple = false;
    bool thin = false;
    std::optional<ClosedPathSequence> closed_path;
    std::optional<WeaklyClosedPath> weakly;
    std::vector<LConfiguration> l_configurations;
    std::vector<Ladder> ladders;  // ladders of >= 3 steps
    std::optional<ZigZagWalk> zigzag;
};

inline Classification classify(const Polyomino& P) {
    Classification c;
    c.simple = P.is_simple();
    c.thin = P.is_thin();
    c.closed_path = closed_path_sequence(P);
    if (!c.closed_path) c.weakly = weakly_closed_path(P);
    c.l_configurations = find_L_configurations(P);
    c.ladders = find_ladders(P, 3);
    c.zigzag = has_zigzag_walk(P);
    return c;
}

}  // namespace polyalg
