#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domcensus/census.hpp"
#include "domcensus/oracle.hpp"
#include "domcensus/threading.hpp"

#include "support.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace domcensus;
using testsupport::poly_of;

namespace {

constexpr CensusKind kAllKinds[] = {CensusKind::All, CensusKind::Maximal,
                                    CensusKind::RightEnd, CensusKind::LeftEnd};

// Right-end totals for every rectangle up to 8x8, m-major.
const long kRightEndTotals[8][8] = {
    {1, 1, 2, 2, 3, 4, 5, 7},
    {2, 4, 11, 25, 61, 146, 351, 844},
    {3, 9, 48, 172, 731, 2976, 12039, 49401},
    {5, 25, 227, 1427, 10388, 72751, 510779, 3604887},
    {8, 64, 1054, 11134, 140555, 1693116, 20414525, 248119648},
    {13, 169, 4921, 88733, 1932067, 40008789, 831347033, 17385222733},
    {21, 441, 22944, 701926, 26425981, 941088936, 33656587715, 1211649519869},
    {34, 1156, 107017, 5567467, 362036629, 22168654178, 1365206879940,
     84588476099284},
};

}  // namespace

TEST_CASE("census kinds round trip through their names") {
    for (CensusKind kind : kAllKinds) CHECK(parse_census_kind(to_string(kind)) == kind);
    CHECK(parse_census_kind("all") == CensusKind::All);
    CHECK(parse_census_kind("maximal") == CensusKind::Maximal);
    CHECK(parse_census_kind("right-end") == CensusKind::RightEnd);
    CHECK(parse_census_kind("left-end") == CensusKind::LeftEnd);
    CHECK_THROWS_AS(parse_census_kind("either-end"), ParseError);
}

TEST_CASE("small rectangle censuses come out in closed form") {
    CHECK(rect_general(0, 5) == BivariatePoly::one());
    CHECK(rect_general(1, 1) == BivariatePoly::one());
    CHECK(rect_general(1, 2) == poly_of({{0, 0, 1}, {0, 1, 1}}));
    CHECK(rect_general(2, 1) == poly_of({{0, 0, 1}, {1, 0, 1}}));
    CHECK(rect_general(2, 2) ==
          poly_of({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {2, 0, 1}, {0, 2, 1}}));
}

TEST_CASE("the 4x3 census matches term for term") {
    BivariatePoly census = rect_general(4, 3);
    CHECK(census == testsupport::rect_4x3_census());
    CHECK(census.total() == 823);
    CHECK(census.play_filter() == testsupport::rect_4x3_play());
    CHECK(census.play_filter().total() == 426);
}

TEST_CASE("rectangle censuses agree with enumeration for every kind") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            Board board(m, n);
            for (CensusKind kind : kAllKinds)
                CHECK(rect_poly(kind, m, n) == oracle::brute_poly(board, kind));
        }
}

TEST_CASE("rectangle censuses match the board pipeline") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) CHECK(rect_general(m, n) == board_poly(Board(m, n)));
}

TEST_CASE("transposing a rectangle swaps the variables") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            CHECK(rect_general(m, n) == rect_general(n, m).swap_vars());
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            CHECK(rect_maximal(m, n) == rect_maximal(n, m).swap_vars());
            CHECK(rect_left_ends(m, n) == rect_right_ends(n, m).swap_vars());
        }
}

TEST_CASE("wide boards fall back to the transposed computation") {
    BivariatePoly wide = rect_general(3, 20);
    CHECK(wide == rect_general(20, 3).swap_vars());
    // Full vertical packing: a gap in one of two cells per column.
    BigInt packings = 1;
    packings <<= 20;
    CHECK(wide.coeff(20, 0) == packings);
    // Full horizontal packing: each even-length row packs one way.
    CHECK(wide.coeff(0, 30) == 1);
}

TEST_CASE("degree bounds are met exactly") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            BivariatePoly census = rect_general(m, n);
            unsigned max_x = static_cast<unsigned>(n * (m / 2));
            unsigned max_y = static_cast<unsigned>(m * (n / 2));
            for (const auto& [e, c] : census.terms()) {
                CHECK(e.first <= max_x);
                CHECK(e.second <= max_y);
                CHECK(2 * (e.first + e.second) <= static_cast<unsigned>(m * n));
            }
            // A maximal vertical packing always exists: one per column when the
            // height is even, one per choice of gap cell when it is odd.
            BigInt packed = 1;
            if (m % 2 == 1)
                for (int col = 0; col < n; ++col) packed *= (m + 1) / 2;
            CHECK(census.coeff(max_x, 0) == packed);
        }
}

TEST_CASE("maximal censuses of small rectangles are exact") {
    CHECK(rect_maximal(1, 1) == BivariatePoly::one());
    CHECK(rect_maximal(2, 2) == poly_of({{2, 0, 1}, {0, 2, 1}}));
    CHECK(rect_maximal(3, 2) == poly_of({{2, 1, 2}, {2, 0, 2}, {0, 3, 1}}));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(rect_maximal(m, n).total() ==
                  oracle::brute_poly(Board(m, n), CensusKind::Maximal).total());
}

TEST_CASE("every maximal position is an end for both players") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            BivariatePoly all = rect_general(m, n);
            BivariatePoly maximal = rect_maximal(m, n);
            BivariatePoly right = rect_right_ends(m, n);
            BivariatePoly left = rect_left_ends(m, n);
            for (const auto& [e, c] : maximal.terms()) {
                CHECK(c <= right.coeff(e.first, e.second));
                CHECK(c <= left.coeff(e.first, e.second));
            }
            for (const auto& [e, c] : right.terms())
                CHECK(c <= all.coeff(e.first, e.second));
            for (const auto& [e, c] : left.terms())
                CHECK(c <= all.coeff(e.first, e.second));
        }
}

TEST_CASE("the ends union is a nonnegative census matching enumeration") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            BivariatePoly either = ends_union(m, n);
            for (const auto& [e, c] : either.terms()) CHECK(c > 0);
            Board board(m, n);
            BivariatePoly expected = oracle::brute_poly(board, CensusKind::LeftEnd) +
                                     oracle::brute_poly(board, CensusKind::RightEnd) -
                                     oracle::brute_poly(board, CensusKind::Maximal);
            CHECK(either == expected);
        }
    CHECK(ends_union(3, 3).eval(1, 1) == ends_union(3, 3).total());
}

TEST_CASE("right end totals reproduce the eight by eight table") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n)
            CHECK(rect_right_ends(m, n).total() == kRightEndTotals[m - 1][n - 1]);
}

TEST_CASE("the streamed right end table matches the direct computation") {
    std::map<std::pair<int, int>, BigInt> seen;
    std::vector<std::pair<int, int>> order;
    right_end_table(6, 5, [&](int m, int n, const BigInt& count) {
        seen[{m, n}] = count;
        order.emplace_back(m, n);
    });
    REQUIRE(seen.size() == 30);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 5; ++n) CHECK(seen.at({m, n}) == rect_right_ends(m, n).total());
    // m-major streaming order.
    for (std::size_t i = 1; i < order.size(); ++i)
        CHECK(std::make_pair(order[i - 1].first, order[i - 1].second) < order[i]);
}

TEST_CASE("one sided strips collapse to classical sequences") {
    // Width 1 admits no horizontal move, so every position is a right end and
    // the totals are the Fibonacci numbers.
    long fibonacci = 1, prev = 1;
    for (int m = 1; m <= 12; ++m) {
        CHECK(rect_right_ends(m, 1) == rect_general(m, 1));
        CHECK(rect_right_ends(m, 1).total() == fibonacci);
        long next = fibonacci + prev;
        prev = fibonacci;
        fibonacci = next;
    }

    // Height 1 right ends follow the Padovan recurrence.  Past the binary bar
    // cap the same census comes out of the ternary family: with no horizontal
    // moves available, a maximal position on the transposed strip is exactly
    // a right end here.
    std::vector<BigInt> padovan{1, 1, 2};
    for (int n = 4; n <= 15; ++n)
        padovan.push_back(padovan[n - 3] + padovan[n - 4]);
    for (int n = 1; n <= 15; ++n) {
        BivariatePoly ends = n <= max_bar_length(2) ? rect_right_ends(1, n)
                                                    : rect_maximal(n, 1).swap_vars();
        CHECK(ends.total() == padovan[n - 1]);
    }
    for (int n = 1; n <= 10; ++n)
        CHECK(rect_right_ends(1, n) == rect_maximal(n, 1).swap_vars());

    // Width 2 right end totals are the squared Fibonacci numbers.
    long fib = 1, fib_prev = 1;
    for (int m = 1; m <= 10; ++m) {
        CHECK(rect_right_ends(m, 2).total() == fib * fib);
        long next = fib + fib_prev;
        fib_prev = fib;
        fib = next;
    }

    // Width 3 right end totals obey a fixed order four recurrence.
    std::vector<BigInt> width3;
    for (int m = 1; m <= 10; ++m) width3.push_back(rect_right_ends(m, 3).total());
    for (std::size_t i = 4; i < width3.size(); ++i)
        CHECK(width3[i] ==
              4 * width3[i - 1] + 4 * width3[i - 2] - 4 * width3[i - 3] - width3[i - 4]);
}

TEST_CASE("the play table pairs counts with their truncated ratios") {
    std::vector<PlayTableRow> rows = play_table(6);
    REQUIRE(rows.size() == 6);

    const long play[] = {1, 5, 75, 4632, 1076492, 963182263};
    const long all[] = {1, 7, 131, 10012, 2810694, 2989126727};
    const char* ratio[] = {"1", "0.71428", "0.57251", "0.46264", "0.38299", "0.32222"};
    for (int i = 0; i < 6; ++i) {
        CHECK(rows[i].n == i + 1);
        CHECK(rows[i].play_count == play[i]);
        CHECK(rows[i].all_count == all[i]);
        CHECK(rows[i].ratio == ratio[i]);
        BivariatePoly census = rect_general(i + 1, i + 1);
        CHECK(rows[i].all_count == census.total());
        CHECK(rows[i].play_count == census.play_filter().total());
    }

    int streamed = 0;
    play_table(4, [&](const PlayTableRow& row) {
        CHECK(row.n == ++streamed);
        CHECK(row.play_count == rows[row.n - 1].play_count);
    });
    CHECK(streamed == 4);
}

TEST_CASE("censuses are identical across thread counts") {
    set_max_threads(1);
    BivariatePoly serial = rect_general(6, 6);
    BivariatePoly serial_max = rect_maximal(4, 4);
    set_max_threads(8);
    CHECK(rect_general(6, 6) == serial);
    CHECK(rect_maximal(4, 4) == serial_max);
    set_max_threads(0);
}

TEST_CASE("position analysis multiplies component censuses") {
    Board board = parse_board(testsupport::tournament_board_text());
    PositionReport report = analyze_position(board);
    REQUIRE(report.components.size() == 3);

    CHECK(report.components[1].board.cols() == 1);
    CHECK(report.components[1].poly == testsupport::tournament_strip_census());
    CHECK(report.components[2].poly == testsupport::tournament_bottom_census());

    BivariatePoly product = BivariatePoly::one();
    for (const auto& part : report.components) product *= part.poly;
    CHECK(report.product == product);
    CHECK(report.product.total() == 752197082);

    CHECK(report.play_product == testsupport::tournament_play_product());
    CHECK(report.play_product == report.product.play_filter());
    CHECK(report.play_product.total() == 271931548);
    CHECK(report.play_product.coeff(10, 11) == 17);
    CHECK(report.left_moves == 25);
    CHECK(report.right_moves == 21);
}

TEST_CASE("analyzing a clear rectangle reduces to the rectangle census") {
    PositionReport report = analyze_position(Board(3, 4));
    REQUIRE(report.components.size() == 1);
    CHECK(report.product == rect_general(3, 4));
    CHECK(report.left_moves == rect_general(3, 4).coeff(1, 0));
    CHECK(report.right_moves == rect_general(3, 4).coeff(0, 1));
}
