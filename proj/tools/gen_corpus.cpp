// Regenerates the bundled corpus of random small boards used by the
// verification suite.  The generator is fully deterministic (fixed seed and
// raw engine draws only), so the checked-in files are reproducible; rerun
// only if the corpus is meant to change.

#include "domcensus/board.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using namespace domcensus;

namespace {

constexpr unsigned kSeed = 884211;
constexpr int kBoards = 50;
constexpr int kMaxPlayable = 16;

Board random_board(std::mt19937& rng) {
    int rows = 1 + static_cast<int>(rng() % 5);
    int cols = 1 + static_cast<int>(rng() % 5);
    unsigned density = 1 + rng() % 3;  // block each square with density/8
    Board board(rows, cols);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (rng() % 8 < density) board.set_cell(r, c, Cell::Blocked);
    if (board.playable_count() == 0) board.set_cell(1 + rows / 2, 1 + cols / 2, Cell::Playable);
    while (board.playable_count() > kMaxPlayable) {
        int r = 1 + static_cast<int>(rng() % rows);
        int c = 1 + static_cast<int>(rng() % cols);
        board.set_cell(r, c, Cell::Blocked);
    }
    return board;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "boards/corpus";
    std::filesystem::create_directories(dir);
    std::mt19937 rng(kSeed);
    for (int k = 0; k < kBoards; ++k) {
        Board board = random_board(rng);
        char name[32];
        std::snprintf(name, sizeof(name), "rand%02d.board", k);
        std::ofstream out(dir / name, std::ios::binary);
        out << "% corpus board " << k << ", seed " << kSeed << "\n";
        out << board.to_text() << "\n";
    }
    std::printf("wrote %d boards to %s\n", kBoards, dir.string().c_str());
    return 0;
}
