#pragma once

// Direct enumeration of domino positions, used as ground truth for the
// matrix engine.  It shares the board and polynomial types but none of the
// transfer-matrix machinery: positions are generated one by one and counted.

#include "domcensus/board.hpp"
#include "domcensus/census.hpp"
#include "domcensus/poly.hpp"

#include <vector>

namespace domcensus::oracle {

// Largest playable-square count brute_poly will accept; enumeration is
// exponential in it.
int enumeration_cap();
void set_enumeration_cap(int cells);

BivariatePoly brute_poly(const Board& board, CensusKind kind);

// Position totals for every rectangle up to m_max x n_max; entry [m-1][n-1]
// is the count for an m x n board.
std::vector<std::vector<BigInt>> brute_count_table(CensusKind kind, int m_max, int n_max);

}  // namespace domcensus::oracle
