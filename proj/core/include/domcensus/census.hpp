#pragma once

// Whole-board censuses.  Each rectangle function returns the bivariate
// generating polynomial whose x^a y^b coefficient counts the positions with
// a vertical and b horizontal dominoes; kinds restrict which positions are
// counted.

#include "domcensus/board.hpp"
#include "domcensus/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace domcensus {

enum class CensusKind {
    All,       // every legal placement
    Maximal,   // no further domino of either orientation fits
    RightEnd,  // no horizontal domino fits (the horizontal player is stuck)
    LeftEnd,   // no vertical domino fits
};

const char* to_string(CensusKind kind);
CensusKind parse_census_kind(const std::string& name);

BivariatePoly rect_general(int rows, int cols);
BivariatePoly rect_maximal(int rows, int cols);
BivariatePoly rect_right_ends(int rows, int cols);
BivariatePoly rect_left_ends(int rows, int cols);
// Positions where at least one player is stuck; inclusion-exclusion over the
// end censuses (a position with both players stuck is exactly a maximal one).
BivariatePoly ends_union(int rows, int cols);

BivariatePoly rect_poly(CensusKind kind, int rows, int cols);

struct PlayTableRow {
    int n = 0;
    BigInt play_count;
    BigInt all_count;
    // play_count / all_count truncated to five digits: "0.71428", or "1".
    std::string ratio;
};

// Square boards 1x1 .. n_max x n_max; rows arrive in increasing n.
void play_table(int n_max, const std::function<void(const PlayTableRow&)>& sink);
std::vector<PlayTableRow> play_table(int n_max);

// Right-end totals for every rectangle up to max_m x max_n, streamed in
// m-major order; each column keeps a running matrix power so the whole
// table costs one vector step per cell.
void right_end_table(int max_m, int max_n,
                     const std::function<void(int m, int n, const BigInt&)>& sink);

struct PositionComponent {
    Board board;
    int top_row = 0;
    int left_col = 0;
    BivariatePoly poly;
};

struct PositionReport {
    std::vector<PositionComponent> components;
    // Product over components: the census of the whole position.
    BivariatePoly product;
    // Terms reachable under alternating play.
    BivariatePoly play_product;
    // Distinct first moves: coefficient of x (vertical) and of y (horizontal).
    BigInt left_moves, right_moves;
};

PositionReport analyze_position(const Board& board);

}  // namespace domcensus
