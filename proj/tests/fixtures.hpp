// Shared shapes and a deterministic random polyomino generator for tests.
#pragma once

#include <random>
#include <vector>

#include "polyalg/geometry.hpp"

namespace fixtures {

using polyalg::Cell;
using polyalg::Polyomino;

inline Polyomino single_cell() { return Polyomino::parse({{0, 0}}); }

inline Polyomino square_tetromino() { return Polyomino::parse({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

inline Polyomino horizontal_bar(int len) {
    std::vector<std::pair<int, int>> cs;
    for (int i = 0; i < len; ++i) cs.push_back({i, 0});
    return Polyomino::parse(cs);
}

inline Polyomino l_tromino() { return Polyomino::parse({{0, 0}, {1, 0}, {1, 1}}); }

// 8 cells around a missing center
inline Polyomino ring3x3() {
    return Polyomino::parse({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}});
}

// 10-cell ring around a 1x2 hole
inline Polyomino ring_with_two_cell_hole() {
    return Polyomino::parse(
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {2, 2}, {1, 2}, {0, 2}, {0, 1}});
}

// random edge-connected growth, deterministic per seed
inline Polyomino random_polyomino(unsigned seed, int cells) {
    std::mt19937 rng(seed);
    std::vector<Cell> cs{Cell(0, 0)};
    std::set<Cell> have{Cell(0, 0)};
    while (static_cast<int>(cs.size()) < cells) {
        const Cell& base = cs[rng() % cs.size()];
        const polyalg::Point deltas[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        Cell cand(base.ll + deltas[rng() % 4]);
        if (have.insert(cand).second) cs.push_back(cand);
    }
    return Polyomino::from_cells(cs);
}

}  // namespace fixtures
