#include "domcensus/census.hpp"

#include "domcensus/barstate.hpp"

namespace domcensus {

namespace {

void check_rect(int rows, int cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative rectangle dimension");
}

bool ternary_has_two(int value, int digits) {
    for (int i = 0; i < digits; ++i) {
        if (value % 3 == 2) return true;
        value /= 3;
    }
    return false;
}

std::string ratio_string(const BigInt& numerator, const BigInt& denominator) {
    if (numerator == denominator) return "1";
    BigInt scaled = (numerator * 100000) / denominator;
    std::string digits = scaled.get_str();
    return "0." + std::string(5 - digits.size(), '0') + digits;
}

}  // namespace

const char* to_string(CensusKind kind) {
    switch (kind) {
        case CensusKind::All: return "all";
        case CensusKind::Maximal: return "maximal";
        case CensusKind::RightEnd: return "right-end";
        case CensusKind::LeftEnd: return "left-end";
    }
    throw Error("unknown census kind");
}

CensusKind parse_census_kind(const std::string& name) {
    if (name == "all") return CensusKind::All;
    if (name == "maximal") return CensusKind::Maximal;
    if (name == "right-end") return CensusKind::RightEnd;
    if (name == "left-end") return CensusKind::LeftEnd;
    throw ParseError("unknown census kind '" + name + "'");
}

BivariatePoly rect_general(int rows, int cols) {
    check_rect(rows, cols);
    if (rows == 0 || cols == 0) return BivariatePoly::one();
    // The bar length drives the matrix dimension; fall back to the transpose
    // when only the other orientation fits under the cap.
    if (cols > max_bar_length(2) && rows <= max_bar_length(2))
        return rect_general(cols, rows).swap_vars();
    const PolyMatrix& step = general_bars(cols).left0;
    return step.pow_first_column(rows)[1];
}

BivariatePoly rect_maximal(int rows, int cols) {
    check_rect(rows, cols);
    if (rows == 0 || cols == 0) return BivariatePoly::one();
    const BarSextet& bars = maximal_bars(cols);
    PolyMatrix step = bars.right0.left0 + bars.right1.left0;
    auto column = step.pow_first_column(rows);
    // Bottom labels may mark squares as covered or still-empty, but a
    // square that could yet take a horizontal domino would contradict
    // maximality.
    BivariatePoly sum;
    for (int r = 1; r <= step.rows(); ++r)
        if (!ternary_has_two(r - 1, cols)) sum += column[r];
    return sum;
}

BivariatePoly rect_right_ends(int rows, int cols) {
    check_rect(rows, cols);
    if (rows == 0 || cols == 0) return BivariatePoly::one();
    const BarSextet& bars = right_end_bars(cols);
    PolyMatrix step = bars.right0.left0 + bars.right1.left0;
    return step.pow_first_column(rows)[1];
}

BivariatePoly rect_left_ends(int rows, int cols) {
    // A vertical domino on the board is a horizontal one on the transpose.
    return rect_right_ends(cols, rows).swap_vars();
}

BivariatePoly ends_union(int rows, int cols) {
    BivariatePoly sum = rect_left_ends(rows, cols) + rect_right_ends(rows, cols) -
                        rect_maximal(rows, cols);
    for (const auto& [exp, c] : sum.terms())
        if (c < 0)
            throw Error("ends union produced a negative count at x^" +
                        std::to_string(exp.first) + " y^" + std::to_string(exp.second));
    return sum;
}

BivariatePoly rect_poly(CensusKind kind, int rows, int cols) {
    switch (kind) {
        case CensusKind::All: return rect_general(rows, cols);
        case CensusKind::Maximal: return rect_maximal(rows, cols);
        case CensusKind::RightEnd: return rect_right_ends(rows, cols);
        case CensusKind::LeftEnd: return rect_left_ends(rows, cols);
    }
    throw Error("unknown census kind");
}

void play_table(int n_max, const std::function<void(const PlayTableRow&)>& sink) {
    for (int n = 1; n <= n_max; ++n) {
        PlayTableRow row;
        row.n = n;
        BivariatePoly all = rect_general(n, n);
        row.all_count = all.total();
        row.play_count = all.play_filter().total();
        row.ratio = ratio_string(row.play_count, row.all_count);
        sink(row);
    }
}

std::vector<PlayTableRow> play_table(int n_max) {
    std::vector<PlayTableRow> rows;
    play_table(n_max, [&](const PlayTableRow& row) { rows.push_back(row); });
    return rows;
}

void right_end_table(int max_m, int max_n,
                     const std::function<void(int m, int n, const BigInt&)>& sink) {
    std::vector<PolyMatrix> steps(max_n + 1);
    std::vector<std::vector<BivariatePoly>> columns(max_n + 1);
    for (int n = 1; n <= max_n; ++n) {
        const BarSextet& bars = right_end_bars(n);
        steps[n] = bars.right0.left0 + bars.right1.left0;
        columns[n] = PolyMatrix::unit_column(steps[n].rows());
    }
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
            columns[n] = steps[n].apply(columns[n]);
            sink(m, n, columns[n][1].total());
        }
}

PositionReport analyze_position(const Board& board) {
    PositionReport report;
    report.product = BivariatePoly::one();
    for (auto& placed : placed_components(board)) {
        PositionComponent comp;
        comp.top_row = placed.top_row;
        comp.left_col = placed.left_col;
        comp.poly = board_poly(placed.board);
        comp.board = std::move(placed.board);
        report.product *= comp.poly;
        report.components.push_back(std::move(comp));
    }
    report.play_product = report.product.play_filter();
    report.left_moves = report.product.coeff(1, 0);
    report.right_moves = report.product.coeff(0, 1);
    return report;
}

}  // namespace domcensus
