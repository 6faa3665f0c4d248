#pragma once

// Transfer matrices for one row of tiles ("bars").  Entry (i, j) of a matrix
// for bars of length q is the generating polynomial of the ways to fill the
// row so that the bottom edge labels spell row label i and the top edge
// labels spell column label j; x marks a vertical half crossing the row, y a
// horizontal domino inside it.  Matrices come in families indexed by the
// label on the bar's left edge (and, where it matters, the right edge).
//
// Labels are binary for the full census and for censuses of right ends, and
// ternary for censuses of maximal positions, where a third state tracks
// whether a square could still receive a horizontal domino.

#include "domcensus/polymatrix.hpp"

namespace domcensus {

// Right edge label fixed to 0, one matrix per left edge label.
struct BarPair {
    PolyMatrix left0, left1;
};

struct BarTriple {
    PolyMatrix left0, left1, left2;
};

// One triple per right edge label.
struct BarSextet {
    BarTriple right0, right1;
};

// Bars of the given length, built once and cached; thread-safe.  The general
// and right-end families have dimension 2^length, the maximal family
// 3^length.
const BarPair& general_bars(int length);
const BarSextet& maximal_bars(int length);
const BarSextet& right_end_bars(int length);

// Longest bar the caches will build for a label radix, guarding memory.  The
// defaults (12 for radix 2, 8 for radix 3) can both be raised or lowered via
// the DOMCENSUS_MAX_Q environment variable, or per radix here.
int max_bar_length(int radix);
void set_max_bar_length(int radix, int limit);

}  // namespace domcensus
