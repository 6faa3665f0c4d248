#pragma once

// Boards are rectangular grids of playable and blocked squares; row 1 is the
// top row and column 1 the leftmost.  A board with no blocked squares is an
// ordinary rectangle; blocking squares carves notches, holes, or the tiles
// already placed in a position being analyzed.

#include "domcensus/barstate.hpp"
#include "domcensus/poly.hpp"
#include "domcensus/polymatrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace domcensus {

enum class Cell : std::uint8_t { Playable, Blocked };

class Board {
public:
    Board() : rows_(0), cols_(0) {}
    Board(int rows, int cols, Cell fill = Cell::Playable);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-based coordinates.
    Cell cell(int row, int col) const;
    void set_cell(int row, int col, Cell value);
    // False outside the board, so neighbour checks need no bounds tests.
    bool playable(int row, int col) const;
    int playable_count() const;

    Board transposed() const;
    // '.' for playable, '#' for blocked, one line per row.
    std::string to_text() const;

    bool operator==(const Board& rhs) const;
    bool operator!=(const Board& rhs) const { return !(*this == rhs); }

private:
    int rows_;
    int cols_;
    std::vector<Cell> cells_;
};

// Inverse of Board::to_text: lines of '.' and '#', all the same length.
Board parse_board(const std::string& text);

// A maximal run of playable squares inside one row, with the label pattern
// each adjacent edge imposes: '0' where the square above (below) is blocked
// or off the board, '_' where it is playable.
struct RowSegment {
    int start_col = 0;
    int length = 0;
    std::string top_pattern;
    std::string bottom_pattern;
};

struct RowPlan {
    std::vector<RowSegment> segments;
};

RowPlan plan_row(const Board& board, int row);

// The transfer matrix of one board row: the Kronecker product, left segment
// first, of each segment's bar matrix restricted to the segment's patterns.
// Row indices range over the row's free bottom labels, column indices over
// its free top labels; a row with no playable squares yields the 1x1 unit.
PolyMatrix row_matrix(const Board& board, int row);

// Census polynomial of all positions on the board: the single entry of the
// product of row matrices, bottom row leftmost.
BivariatePoly board_poly(const Board& board);

// A connected component of playable squares, cropped to its bounding box
// (other squares inside the box are blocked), with the box origin in the
// parent board.
struct PlacedComponent {
    Board board;
    int top_row = 0;
    int left_col = 0;
};

// Components under 4-adjacency, in row-major order of their first square.
std::vector<PlacedComponent> placed_components(const Board& board);
std::vector<Board> components(const Board& board);

}  // namespace domcensus
