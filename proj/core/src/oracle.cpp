#include "domcensus/oracle.hpp"

#include <atomic>

namespace domcensus::oracle {

namespace {

std::atomic<int> g_cap{20};

struct Enumerator {
    const Board& board;
    CensusKind kind;
    std::vector<char> covered;
    BivariatePoly::TermMap counts;

    explicit Enumerator(const Board& b, CensusKind k)
        : board(b), kind(k), covered(static_cast<std::size_t>(b.rows()) * b.cols(), 0) {}

    bool empty_playable(int row, int col) const {
        return board.playable(row, col) &&
               !covered[static_cast<std::size_t>(row - 1) * board.cols() + (col - 1)];
    }

    void set_covered(int row, int col, char value) {
        covered[static_cast<std::size_t>(row - 1) * board.cols() + (col - 1)] = value;
    }

    bool position_counts() const {
        bool vertical_move = false, horizontal_move = false;
        for (int r = 1; r <= board.rows(); ++r)
            for (int c = 1; c <= board.cols(); ++c) {
                if (!empty_playable(r, c)) continue;
                vertical_move = vertical_move || empty_playable(r + 1, c);
                horizontal_move = horizontal_move || empty_playable(r, c + 1);
            }
        switch (kind) {
            case CensusKind::All: return true;
            case CensusKind::Maximal: return !vertical_move && !horizontal_move;
            case CensusKind::RightEnd: return !horizontal_move;
            case CensusKind::LeftEnd: return !vertical_move;
        }
        return false;
    }

    // Walk the squares in row-major order; each domino is placed from its
    // first square in that order, so every position arises exactly once.
    void walk(int index, unsigned verticals, unsigned horizontals) {
        int total = board.rows() * board.cols();
        while (index < total) {
            int r = index / board.cols() + 1;
            int c = index % board.cols() + 1;
            if (!empty_playable(r, c)) {
                ++index;
                continue;
            }
            if (empty_playable(r + 1, c)) {
                set_covered(r, c, 1);
                set_covered(r + 1, c, 1);
                walk(index + 1, verticals + 1, horizontals);
                set_covered(r, c, 0);
                set_covered(r + 1, c, 0);
            }
            if (empty_playable(r, c + 1)) {
                set_covered(r, c, 1);
                set_covered(r, c + 1, 1);
                walk(index + 1, verticals, horizontals + 1);
                set_covered(r, c, 0);
                set_covered(r, c + 1, 0);
            }
            ++index;  // leave the square empty for good
        }
        if (position_counts()) counts[{verticals, horizontals}] += 1;
    }
};

}  // namespace

int enumeration_cap() { return g_cap.load(); }

void set_enumeration_cap(int cells) { g_cap.store(cells); }

BivariatePoly brute_poly(const Board& board, CensusKind kind) {
    if (board.playable_count() > enumeration_cap())
        throw LimitError("board has " + std::to_string(board.playable_count()) +
                         " playable squares, enumeration cap is " +
                         std::to_string(enumeration_cap()));
    Enumerator e(board, kind);
    e.walk(0, 0, 0);
    return BivariatePoly::from_terms(std::move(e.counts));
}

std::vector<std::vector<BigInt>> brute_count_table(CensusKind kind, int m_max, int n_max) {
    std::vector<std::vector<BigInt>> table(m_max);
    for (int m = 1; m <= m_max; ++m) {
        table[m - 1].reserve(n_max);
        for (int n = 1; n <= n_max; ++n)
            table[m - 1].push_back(brute_poly(Board(m, n), kind).total());
    }
    return table;
}

}  // namespace domcensus::oracle
