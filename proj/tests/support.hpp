#pragma once

// Shared fixtures for the test suites: exact reference polynomials, the two
// bundled mid-game boards, and small deterministic generators.  Reference
// values marked "published" below are transcribed census results; everything
// else is produced by an independent oracle inside the tests themselves.

#include "domcensus/board.hpp"
#include "domcensus/poly.hpp"

#include <initializer_list>
#include <random>
#include <string>

namespace testsupport {

struct Term {
    unsigned x, y;
    long c;
};

inline domcensus::BivariatePoly poly_of(std::initializer_list<Term> terms) {
    domcensus::BivariatePoly::TermMap map;
    for (const Term& t : terms) map[{t.x, t.y}] = domcensus::BigInt(t.c);
    return domcensus::BivariatePoly::from_terms(std::move(map));
}

// Published census of the 4x3 rectangle (23 terms, 823 positions).
inline domcensus::BivariatePoly rect_4x3_census() {
    return poly_of({{6, 0, 1},  {5, 0, 9},   {4, 2, 6},   {4, 1, 20},  {4, 0, 30},
                    {3, 2, 46}, {3, 1, 84},  {3, 0, 45},  {2, 4, 4},   {2, 3, 24},
                    {2, 2, 100}, {2, 1, 100}, {2, 0, 30}, {1, 4, 24},  {1, 3, 72},
                    {1, 2, 90}, {1, 1, 48},  {1, 0, 9},   {0, 4, 16},  {0, 3, 32},
                    {0, 2, 24}, {0, 1, 8},   {0, 0, 1}});
}

// Its published play-position restriction (426 positions).
inline domcensus::BivariatePoly rect_4x3_play() {
    return poly_of({{3, 2, 46}, {2, 3, 24}, {2, 2, 100}, {2, 1, 100}, {1, 2, 90},
                    {1, 1, 48}, {1, 0, 9},  {0, 1, 8},   {0, 0, 1}});
}

// A 3x4 board with two blocked squares; its published census has 15 terms.
inline const char* notched_board_text() { return "....\n.#..\n...#"; }

inline domcensus::BivariatePoly notched_board_census() {
    return poly_of({{3, 2, 2},  {3, 1, 8},  {3, 0, 4}, {2, 2, 12}, {2, 1, 22},
                    {2, 0, 8},  {1, 4, 1},  {1, 3, 10}, {1, 2, 26}, {1, 1, 21},
                    {1, 0, 5},  {0, 4, 2},  {0, 3, 9}, {0, 2, 12}, {0, 1, 6},
                    {0, 0, 1}});
}

// Mid-game tournament position; '#' squares are played dominoes.  Splits
// into three components: a 24-square region, a 6x1 strip, and a 12-square
// region.
inline const char* tournament_board_text() {
    return "......#.\n"
           "##..###.\n"
           ".#......\n"
           ".#..##..\n"
           ".#.#..#.\n"
           ".#.#..#.\n"
           ".###..##\n"
           ".#......";
}

inline domcensus::BivariatePoly tournament_strip_census() {
    return poly_of({{3, 0, 1}, {2, 0, 6}, {1, 0, 5}, {0, 0, 1}});
}

// Published census of the tournament board's 12-square component.
inline domcensus::BivariatePoly tournament_bottom_census() {
    return poly_of({{4, 2, 1},  {4, 1, 2},  {4, 0, 1},  {3, 2, 10}, {3, 1, 16},
                    {3, 0, 6},  {2, 4, 3},  {2, 3, 24}, {2, 2, 58}, {2, 1, 46},
                    {2, 0, 11}, {1, 4, 8},  {1, 3, 42}, {1, 2, 62}, {1, 1, 34},
                    {1, 0, 6},  {0, 6, 1},  {0, 5, 9},  {0, 4, 26}, {0, 3, 35},
                    {0, 2, 24}, {0, 1, 8},  {0, 0, 1}});
}

// Published play-filtered product over all three tournament components.
inline domcensus::BivariatePoly tournament_play_product() {
    return poly_of({{10, 11, 17},      {10, 10, 410},     {10, 9, 7690},
                    {9, 10, 6769},     {9, 9, 76829},     {9, 8, 532379},
                    {8, 9, 436560},    {8, 8, 2217847},   {8, 7, 7453953},
                    {7, 8, 6030494},   {7, 7, 16049771},  {7, 6, 29420257},
                    {6, 7, 23698832},  {6, 6, 36239078},  {6, 5, 38789964},
                    {5, 6, 31354701},  {5, 5, 29013063},  {5, 4, 18784523},
                    {4, 5, 15287335},  {4, 4, 8768628},   {4, 3, 3451191},
                    {3, 4, 2830886},   {3, 3, 1004132},   {3, 2, 232953},
                    {2, 3, 192647},    {2, 2, 40779},     {2, 1, 5086},
                    {1, 2, 4240},      {1, 1, 487},       {1, 0, 25},
                    {0, 1, 21},        {0, 0, 1}});
}

// Deterministic small random polynomial: up to max_terms terms with
// exponents below exp_bound and coefficients in [-9, 9].
inline domcensus::BivariatePoly random_poly(std::mt19937& rng, unsigned exp_bound = 5,
                                            int max_terms = 6) {
    domcensus::BivariatePoly::TermMap map;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < terms; ++i) {
        unsigned a = rng() % exp_bound;
        unsigned b = rng() % exp_bound;
        long c = static_cast<long>(rng() % 19) - 9;
        map[{a, b}] = domcensus::BigInt(c);
    }
    return domcensus::BivariatePoly::from_terms(std::move(map));
}

// Deterministic random board with the given bounds; most have a few blocked
// squares.
inline domcensus::Board random_board(std::mt19937& rng, int max_rows = 5, int max_cols = 5) {
    int rows = 1 + static_cast<int>(rng() % max_rows);
    int cols = 1 + static_cast<int>(rng() % max_cols);
    domcensus::Board board(rows, cols);
    unsigned density = rng() % 4;  // 0..3 eighths blocked
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (rng() % 8 < density) board.set_cell(r, c, domcensus::Cell::Blocked);
    return board;
}

}  // namespace testsupport
