// Exact integer grid geometry for polyominoes: cells, intervals, blocks,
// edge intervals, holes. Everything is a value type; coordinates are small
// integers and all computations are exact.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyalg {

struct Point {
    int x = 0;
    int y = 0;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

// componentwise partial order on Z^2
constexpr bool leq(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }

enum class Dir { Horizontal, Vertical };

constexpr Dir other(Dir d) { return d == Dir::Horizontal ? Dir::Vertical : Dir::Horizontal; }

// An edge of the grid, stored with its smaller endpoint first.
struct GridEdge {
    Point a, b;
    GridEdge() = default;
    GridEdge(Point p, Point q) : a(std::min(p, q)), b(std::max(p, q)) {}
    friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

// Unit cell identified by its lower-left corner.
struct Cell {
    Point ll;
    Cell() = default;
    explicit constexpr Cell(Point p) : ll(p) {}
    constexpr Cell(int x, int y) : ll{x, y} {}

    constexpr Point lower_left() const { return ll; }
    constexpr Point lower_right() const { return {ll.x + 1, ll.y}; }
    constexpr Point upper_left() const { return {ll.x, ll.y + 1}; }
    constexpr Point upper_right() const { return {ll.x + 1, ll.y + 1}; }

    std::array<Point, 4> vertices() const {
        return {lower_left(), lower_right(), upper_left(), upper_right()};
    }
    std::array<GridEdge, 4> edges() const {
        return {GridEdge(lower_left(), lower_right()), GridEdge(lower_left(), upper_left()),
                GridEdge(upper_left(), upper_right()), GridEdge(lower_right(), upper_right())};
    }
    bool has_vertex(Point p) const {
        return (p.x == ll.x || p.x == ll.x + 1) && (p.y == ll.y || p.y == ll.y + 1);
    }
    // edge-adjacency on the cell lattice
    bool touches(Cell o) const {
        int dx = std::abs(ll.x - o.ll.x), dy = std::abs(ll.y - o.ll.y);
        return dx + dy == 1;
    }
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Axis-aligned lattice interval [lo, hi]; proper iff strict in both axes.
struct Interval {
    Point lo, hi;
    Interval() = default;
    Interval(Point a, Point b) : lo(a), hi(b) {
        if (!leq(lo, hi)) throw std::invalid_argument("interval corners not ordered");
    }
    bool proper() const { return lo.x < hi.x && lo.y < hi.y; }
    Point anti_lo() const { return {lo.x, hi.y}; }  // upper-left corner
    Point anti_hi() const { return {hi.x, lo.y}; }  // lower-right corner
    std::array<Point, 2> diagonal() const { return {lo, hi}; }
    std::array<Point, 2> anti_diagonal() const { return {anti_lo(), anti_hi()}; }
    std::array<Point, 4> corners() const { return {lo, hi, anti_lo(), anti_hi()}; }
    bool contains(Point p) const { return leq(lo, p) && leq(p, hi); }
    bool contains(const Interval& o) const { return leq(lo, o.lo) && leq(o.hi, hi); }
    int width() const { return hi.x - lo.x; }
    int height() const { return hi.y - lo.y; }
    // cells of the associated cell interval
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int x = lo.x; x < hi.x; ++x)
            for (int y = lo.y; y < hi.y; ++y) out.emplace_back(x, y);
        return out;
    }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Block {
    std::vector<Cell> cells;  // ordered along the block direction
    Dir direction = Dir::Horizontal;
    bool maximal = false;
    int rank() const { return static_cast<int>(cells.size()); }
    std::set<Point> vertex_set() const {
        std::set<Point> vs;
        for (const Cell& c : cells)
            for (Point p : c.vertices()) vs.insert(p);
        return vs;
    }
};

struct EmptyInputError : std::runtime_error {
    EmptyInputError() : std::runtime_error("empty cell list") {}
};

struct DisconnectedError : std::runtime_error {
    std::vector<std::vector<Cell>> components;
    explicit DisconnectedError(std::vector<std::vector<Cell>> comps)
        : std::runtime_error("cells are not edge-connected (" +
                             std::to_string(comps.size()) + " components)"),
          components(std::move(comps)) {}
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Finite edge-connected set of cells, kept in canonical translation
// (min x = min y = 0) with a sorted cell list.
class Polyomino {
public:
    static Polyomino from_cells(std::vector<Cell> cells) {
        if (cells.empty()) throw EmptyInputError();
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        auto comps = components_of(cells);
        if (comps.size() != 1) throw DisconnectedError(std::move(comps));
        return Polyomino(std::move(cells));
    }

    static Polyomino parse(const std::vector<std::pair<int, int>>& lower_lefts) {
        std::vector<Cell> cs;
        cs.reserve(lower_lefts.size());
        for (auto [x, y] : lower_lefts) cs.emplace_back(x, y);
        return from_cells(std::move(cs));
    }

    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(Cell c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }

    std::set<Point> vertices() const {
        std::set<Point> vs;
        for (const Cell& c : cells_)
            for (Point p : c.vertices()) vs.insert(p);
        return vs;
    }

    std::set<GridEdge> edges() const {
        std::set<GridEdge> es;
        for (const Cell& c : cells_)
            for (const GridEdge& e : c.edges()) es.insert(e);
        return es;
    }

    Interval bounding_box() const {
        Point lo = cells_.front().ll, hi = lo;
        for (const Cell& c : cells_) {
            lo.x = std::min(lo.x, c.ll.x);
            lo.y = std::min(lo.y, c.ll.y);
            hi.x = std::max(hi.x, c.ll.x + 1);
            hi.y = std::max(hi.y, c.ll.y + 1);
        }
        return Interval(lo, hi);
    }

    // All proper intervals whose cell interval lies inside the polyomino,
    // sorted lexicographically on (lo, hi). Brute force over the bounding
    // box; fine at desk scale.
    std::vector<Interval> inner_intervals() const {
        std::vector<Interval> out;
        Interval bb = bounding_box();
        for (int x0 = bb.lo.x; x0 < bb.hi.x; ++x0)
            for (int y0 = bb.lo.y; y0 < bb.hi.y; ++y0)
                for (int x1 = x0 + 1; x1 <= bb.hi.x; ++x1)
                    for (int y1 = y0 + 1; y1 <= bb.hi.y; ++y1) {
                        Interval iv({x0, y0}, {x1, y1});
                        bool inside = true;
                        for (int cx = x0; cx < x1 && inside; ++cx)
                            for (int cy = y0; cy < y1 && inside; ++cy)
                                if (!contains(Cell(cx, cy))) inside = false;
                        if (inside) out.push_back(iv);
                    }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Maximal blocks in one direction; every cell lies in exactly one.
    std::vector<Block> maximal_blocks(Dir d) const {
        std::vector<Block> out;
        std::set<Cell> seen;
        Point step = d == Dir::Horizontal ? Point{1, 0} : Point{0, 1};
        for (const Cell& c : cells_) {
            if (seen.count(c)) continue;
            Cell start = c;
            while (contains(Cell(start.ll - step))) start = Cell(start.ll - step);
            Block b;
            b.direction = d;
            b.maximal = true;
            for (Cell cur = start; contains(cur); cur = Cell(cur.ll + step)) {
                b.cells.push_back(cur);
                seen.insert(cur);
            }
            out.push_back(std::move(b));
        }
        return out;
    }

    // Maximal edge intervals: maximal runs of collinear vertices joined by
    // cell edges of P.
    std::vector<Interval> edge_intervals(Dir d) const {
        std::set<GridEdge> es = edges();
        std::vector<Interval> out;
        std::set<GridEdge> seen;
        Point step = d == Dir::Horizontal ? Point{1, 0} : Point{0, 1};
        for (const GridEdge& e : es) {
            if (e.b - e.a != step || seen.count(e)) continue;
            Point lo = e.a, hi = e.b;
            while (es.count(GridEdge(lo - step, lo))) lo = lo - step;
            while (es.count(GridEdge(hi, hi + step))) hi = hi + step;
            for (Point p = lo; p != hi; p = p + step) seen.insert(GridEdge(p, p + step));
            out.push_back(Interval(lo, hi));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Edge interval containing both points, if any.
    bool same_edge_interval(Point a, Point b) const {
        if (a.x != b.x && a.y != b.y) return false;
        Dir d = a.y == b.y ? Dir::Horizontal : Dir::Vertical;
        if (a == b) {
            for (Dir dd : {Dir::Horizontal, Dir::Vertical})
                for (const Interval& iv : edge_intervals(dd))
                    if (iv.contains(a)) return true;
            return false;
        }
        for (const Interval& iv : edge_intervals(d))
            if (iv.contains(a) && iv.contains(b)) return true;
        return false;
    }

    // Bounded connected components of the cell complement (flood fill on a
    // 1-cell-padded bounding box: whatever does not reach the frontier).
    std::vector<Polyomino> holes() const {
        Interval bb = bounding_box();
        int x0 = bb.lo.x - 1, y0 = bb.lo.y - 1, x1 = bb.hi.x + 1, y1 = bb.hi.y + 1;
        std::set<Cell> visited;
        std::vector<Polyomino> out;
        for (int x = x0; x < x1; ++x)
            for (int y = y0; y < y1; ++y) {
                Cell seed(x, y);
                if (contains(seed) || visited.count(seed)) continue;
                std::vector<Cell> comp{seed};
                visited.insert(seed);
                bool escapes = false;
                for (size_t i = 0; i < comp.size(); ++i) {
                    Cell cur = comp[i];
                    if (cur.ll.x == x0 || cur.ll.y == y0 || cur.ll.x == x1 - 1 ||
                        cur.ll.y == y1 - 1)
                        escapes = true;
                    const Point deltas[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                    for (Point dlt : deltas) {
                        Cell nxt(cur.ll + dlt);
                        if (nxt.ll.x < x0 || nxt.ll.y < y0 || nxt.ll.x >= x1 || nxt.ll.y >= y1)
                            continue;
                        if (contains(nxt) || visited.count(nxt)) continue;
                        visited.insert(nxt);
                        comp.push_back(nxt);
                    }
                }
                if (!escapes) out.push_back(Polyomino::from_cells(comp));
            }
        return out;
    }

    bool is_simple() const { return holes().empty(); }

    // thin <=> contains no 2x2 square of cells
    bool is_thin() const {
        for (const Cell& c : cells_)
            if (contains(Cell(c.ll + Point{1, 0})) && contains(Cell(c.ll + Point{0, 1})) &&
                contains(Cell(c.ll + Point{1, 1})))
                return false;
        return true;
    }

    friend auto operator<=>(const Polyomino&, const Polyomino&) = default;

private:
    explicit Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) { canonicalize(); }

    void canonicalize() {
        Point lo = cells_.front().ll;
        for (const Cell& c : cells_) {
            lo.x = std::min(lo.x, c.ll.x);
            lo.y = std::min(lo.y, c.ll.y);
        }
        for (Cell& c : cells_) c.ll = c.ll - lo;
        std::sort(cells_.begin(), cells_.end());
    }

    static std::vector<std::vector<Cell>> components_of(const std::vector<Cell>& cells) {
        std::set<Cell> todo(cells.begin(), cells.end());
        std::vector<std::vector<Cell>> comps;
        while (!todo.empty()) {
            std::vector<Cell> comp{*todo.begin()};
            todo.erase(todo.begin());
            for (size_t i = 0; i < comp.size(); ++i) {
                const Point deltas[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (Point dlt : deltas) {
                    Cell nxt(comp[i].ll + dlt);
                    auto it = todo.find(nxt);
                    if (it != todo.end()) {
                        comp.push_back(nxt);
                        todo.erase(it);
                    }
                }
            }
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    std::vector<Cell> cells_;
};

}  // namespace polyalg
