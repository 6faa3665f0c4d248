#include "domcensus/board.hpp"

#include <algorithm>
#include <deque>

namespace domcensus {

Board::Board(int rows, int cols, Cell fill) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative board dimension");
    if ((rows == 0) != (cols == 0)) throw DimensionError("board with only one zero dimension");
    cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

Cell Board::cell(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw DimensionError("board cell (" + std::to_string(row) + ", " + std::to_string(col) +
                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    return cells_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)];
}

void Board::set_cell(int row, int col, Cell value) {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw DimensionError("board cell (" + std::to_string(row) + ", " + std::to_string(col) +
                             ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    cells_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)] = value;
}

bool Board::playable(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) return false;
    return cells_[static_cast<std::size_t>(row - 1) * cols_ + (col - 1)] == Cell::Playable;
}

int Board::playable_count() const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell::Playable));
}

Board Board::transposed() const {
    Board out(cols_, rows_);
    for (int r = 1; r <= rows_; ++r)
        for (int c = 1; c <= cols_; ++c) out.set_cell(c, r, cell(r, c));
    return out;
}

std::string Board::to_text() const {
    std::string out;
    for (int r = 1; r <= rows_; ++r) {
        if (r > 1) out += '\n';
        for (int c = 1; c <= cols_; ++c) out += cell(r, c) == Cell::Playable ? '.' : '#';
    }
    return out;
}

bool Board::operator==(const Board& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && cells_ == rhs.cells_;
}

Board parse_board(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(line);
            line.clear();
        } else {
            line += ch;
        }
    }
    if (!line.empty()) lines.push_back(line);
    if (lines.empty()) throw ParseError("empty board text");
    std::size_t width = lines[0].size();
    if (width == 0) throw ParseError("empty board row");
    for (const auto& l : lines)
        if (l.size() != width)
            throw ParseError("board rows of unequal length (" + std::to_string(l.size()) +
                             " vs " + std::to_string(width) + ")");
    Board board(static_cast<int>(lines.size()), static_cast<int>(width));
    for (int r = 1; r <= board.rows(); ++r)
        for (int c = 1; c <= board.cols(); ++c) {
            char ch = lines[r - 1][c - 1];
            if (ch == '.')
                continue;
            else if (ch == '#')
                board.set_cell(r, c, Cell::Blocked);
            else
                throw ParseError(std::string("bad board character '") + ch + "'");
        }
    return board;
}

RowPlan plan_row(const Board& board, int row) {
    if (row < 1 || row > board.rows())
        throw DimensionError("row " + std::to_string(row) + " outside board");
    RowPlan plan;
    int col = 1;
    while (col <= board.cols()) {
        if (!board.playable(row, col)) {
            ++col;
            continue;
        }
        RowSegment seg;
        seg.start_col = col;
        while (board.playable(row, col)) {
            seg.top_pattern += board.playable(row - 1, col) ? '_' : '0';
            seg.bottom_pattern += board.playable(row + 1, col) ? '_' : '0';
            ++col;
            ++seg.length;
        }
        plan.segments.push_back(std::move(seg));
    }
    return plan;
}

PolyMatrix row_matrix(const Board& board, int row) {
    RowPlan plan = plan_row(board, row);
    PolyMatrix product(1, 1);
    product.set(1, 1, BivariatePoly::one());
    for (const auto& seg : plan.segments) {
        const PolyMatrix& bar = general_bars(seg.length).left0;
        PolyMatrix cut = bar.restricted(LabelPattern(seg.bottom_pattern, 2),
                                        LabelPattern(seg.top_pattern, 2));
        product = product.kron(cut);
    }
    return product;
}

BivariatePoly board_poly(const Board& board) {
    if (board.rows() == 0) return BivariatePoly::one();
    PolyMatrix product = row_matrix(board, board.rows());
    for (int row = board.rows() - 1; row >= 1; --row) product = product * row_matrix(board, row);
    // Both boundaries are fully restricted, so the chain collapses to 1x1.
    return product.at(1, 1);
}

std::vector<PlacedComponent> placed_components(const Board& board) {
    std::vector<PlacedComponent> out;
    std::vector<char> seen(static_cast<std::size_t>(board.rows()) * board.cols() + 1, 0);
    auto seen_at = [&](int r, int c) -> char& {
        return seen[static_cast<std::size_t>(r - 1) * board.cols() + (c - 1)];
    };
    for (int r0 = 1; r0 <= board.rows(); ++r0)
        for (int c0 = 1; c0 <= board.cols(); ++c0) {
            if (!board.playable(r0, c0) || seen_at(r0, c0)) continue;
            std::vector<std::pair<int, int>> cells;
            std::deque<std::pair<int, int>> frontier{{r0, c0}};
            seen_at(r0, c0) = 1;
            while (!frontier.empty()) {
                auto [r, c] = frontier.front();
                frontier.pop_front();
                cells.emplace_back(r, c);
                const int dr[] = {-1, 1, 0, 0};
                const int dc[] = {0, 0, -1, 1};
                for (int k = 0; k < 4; ++k) {
                    int nr = r + dr[k], nc = c + dc[k];
                    if (board.playable(nr, nc) && !seen_at(nr, nc)) {
                        seen_at(nr, nc) = 1;
                        frontier.emplace_back(nr, nc);
                    }
                }
            }
            int rmin = board.rows(), rmax = 1, cmin = board.cols(), cmax = 1;
            for (auto [r, c] : cells) {
                rmin = std::min(rmin, r);
                rmax = std::max(rmax, r);
                cmin = std::min(cmin, c);
                cmax = std::max(cmax, c);
            }
            PlacedComponent comp;
            comp.top_row = rmin;
            comp.left_col = cmin;
            comp.board = Board(rmax - rmin + 1, cmax - cmin + 1, Cell::Blocked);
            for (auto [r, c] : cells)
                comp.board.set_cell(r - rmin + 1, c - cmin + 1, Cell::Playable);
            out.push_back(std::move(comp));
        }
    return out;
}

std::vector<Board> components(const Board& board) {
    std::vector<Board> out;
    for (auto& comp : placed_components(board)) out.push_back(std::move(comp.board));
    return out;
}

}  // namespace domcensus
