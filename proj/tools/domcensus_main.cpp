// Command-line front end: census polynomials, table reproduction, mid-game
// board analysis, and engine-vs-enumeration verification.
//
// Exit codes: 0 success, 2 input or size error, 3 verification mismatch.
// All results go to stdout deterministically; timing goes to stderr.

#include "domcensus/board.hpp"
#include "domcensus/census.hpp"
#include "domcensus/oracle.hpp"
#include "domcensus/textio.hpp"
#include "domcensus/threading.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace domcensus;

constexpr const char* kVersion = "domcensus 1.0.0";

struct PolyArgs {
    std::string kind = "all";
    std::optional<int> rows, cols;
    std::string board_file;
    std::string format = "text";
};

struct TableArgs {
    std::string which;
    int max_m = 8;
    int max_n = 0;  // 0: default per table
};

struct VerifyArgs {
    std::string kind = "all";
    std::optional<int> rows, cols;
    std::string board_file;
    int cap = 0;  // 0: keep the enumerator default
};

std::string geometry_label(const PolyArgs& args) {
    if (!args.board_file.empty()) return "board " + args.board_file;
    return std::to_string(*args.rows) + "x" + std::to_string(*args.cols);
}

void require_geometry(const std::optional<int>& rows, const std::optional<int>& cols,
                      const std::string& board_file) {
    bool have_rect = rows.has_value() || cols.has_value();
    if (have_rect && !board_file.empty())
        throw ParseError("give either --rows/--cols or --board, not both");
    if (!have_rect && board_file.empty())
        throw ParseError("give a geometry: --rows M --cols N, or --board FILE");
    if (have_rect && (!rows || !cols))
        throw ParseError("--rows and --cols go together");
    if (have_rect && (*rows < 1 || *cols < 1))
        throw ParseError("board dimensions must be positive");
}

int run_poly(const PolyArgs& args) {
    require_geometry(args.rows, args.cols, args.board_file);
    CensusKind kind = parse_census_kind(args.kind);

    io::PolyDocument doc;
    doc.kind = args.kind;
    if (!args.board_file.empty()) {
        if (kind != CensusKind::All)
            throw ParseError("only the all census supports board files; " + args.kind +
                             " needs --rows/--cols");
        Board board = io::load_board_file(args.board_file);
        doc.board = board.to_text();
        doc.poly = board_poly(board);
    } else {
        doc.rows = *args.rows;
        doc.cols = *args.cols;
        doc.poly = rect_poly(kind, *args.rows, *args.cols);
    }
    doc.total = doc.poly.total();
    doc.play_total = doc.poly.play_filter().total();

    if (args.format == "json") {
        std::cout << io::to_json(doc);
    } else {
        std::cout << io::poly_to_text(doc.poly) << "\n";
        std::cout << "total: " << doc.total.get_str() << "\n";
        std::cout << "play total: " << doc.play_total.get_str() << "\n";
    }
    return 0;
}

int run_table(const TableArgs& args) {
    if (args.which == "play") {
        int max_n = args.max_n > 0 ? args.max_n : 6;
        std::cout << "n,play_positions,ratio\n";
        play_table(max_n, [](const PlayTableRow& row) {
            std::cout << row.n << "," << row.play_count.get_str() << "," << row.ratio << "\n"
                      << std::flush;
        });
        return 0;
    }
    if (args.which == "right-ends") {
        int max_n = args.max_n > 0 ? args.max_n : 8;
        std::cout << "m,n,right_ends\n";
        right_end_table(args.max_m, max_n, [](int m, int n, const BigInt& count) {
            std::cout << m << "," << n << "," << count.get_str() << "\n" << std::flush;
        });
        return 0;
    }
    throw ParseError("unknown table '" + args.which + "' (play or right-ends)");
}

int run_analyze(const std::string& board_file) {
    Board board = io::load_board_file(board_file);
    PositionReport report = analyze_position(board);
    std::cout << "components: " << report.components.size() << "\n";
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        const PositionComponent& comp = report.components[i];
        std::cout << "component " << i + 1 << " (top-left r" << comp.top_row << ",c"
                  << comp.left_col << ", " << comp.board.rows() << "x" << comp.board.cols()
                  << ", " << comp.board.playable_count()
                  << " squares): " << io::poly_to_text(comp.poly) << "\n";
    }
    std::cout << "product: " << io::poly_to_text(report.product) << "\n";
    std::cout << "total positions: " << report.product.total().get_str() << "\n";
    std::cout << "play product: " << io::poly_to_text(report.play_product) << "\n";
    std::cout << "play positions: " << report.play_product.total().get_str() << "\n";
    std::cout << "immediate left moves: " << report.left_moves.get_str() << "\n";
    std::cout << "immediate right moves: " << report.right_moves.get_str() << "\n";
    return 0;
}

int run_verify(const VerifyArgs& args) {
    require_geometry(args.rows, args.cols, args.board_file);
    CensusKind kind = parse_census_kind(args.kind);
    if (args.cap > 0) oracle::set_enumeration_cap(args.cap);

    Board board;
    BivariatePoly engine;
    std::string label;
    if (!args.board_file.empty()) {
        if (kind != CensusKind::All)
            throw ParseError("only the all census supports board files; " + args.kind +
                             " needs --rows/--cols");
        board = io::load_board_file(args.board_file);
        engine = board_poly(board);
        label = args.kind + " board " + args.board_file;
    } else {
        board = Board(*args.rows, *args.cols);
        engine = rect_poly(kind, *args.rows, *args.cols);
        label = args.kind + " " + std::to_string(*args.rows) + "x" + std::to_string(*args.cols);
    }
    BivariatePoly truth = oracle::brute_poly(board, kind);

    if (auto diff = io::first_difference(engine, truth)) {
        std::cout << "MISMATCH " << label << ": term x^" << diff->exp.first << "*y^"
                  << diff->exp.second << " engine " << diff->left_coeff.get_str()
                  << ", enumeration " << diff->right_coeff.get_str() << "\n";
        return 3;
    }
    std::cout << "MATCH " << label << " (" << engine.total().get_str() << " positions)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact census of Domineering positions via transfer matrices"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);

    PolyArgs poly_args;
    CLI::App* poly = app.add_subcommand("poly", "census polynomial of one board");
    poly->add_option("--kind", poly_args.kind, "all, maximal, right-end, or left-end")
        ->check(CLI::IsMember({"all", "maximal", "right-end", "left-end"}));
    poly->add_option("--rows", poly_args.rows, "board rows");
    poly->add_option("--cols", poly_args.cols, "board columns");
    poly->add_option("--board", poly_args.board_file, "board file ('.'/'#' grid)");
    poly->add_option("--format", poly_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "reproduce a census table as CSV");
    table->add_option("--which", table_args.which, "play or right-ends")->required();
    table->add_option("--max-m", table_args.max_m, "largest row count (right-ends; default 8)");
    table->add_option("--max-n", table_args.max_n,
                      "largest column count (default 6 for play, 8 for right-ends)");

    std::string analyze_file;
    CLI::App* analyze = app.add_subcommand("analyze", "decompose a mid-game board");
    analyze->add_option("board", analyze_file, "board file")->required();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check the engine against enumeration");
    verify->add_option("--kind", verify_args.kind, "all, maximal, right-end, or left-end")
        ->check(CLI::IsMember({"all", "maximal", "right-end", "left-end"}));
    verify->add_option("--rows", verify_args.rows, "board rows");
    verify->add_option("--cols", verify_args.cols, "board columns");
    verify->add_option("--board", verify_args.board_file, "board file");
    verify->add_option("--cap", verify_args.cap, "playable-square cap for enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    set_max_threads(threads);
    auto started = std::chrono::steady_clock::now();
    int status = 0;
    try {
        if (poly->parsed())
            status = run_poly(poly_args);
        else if (table->parsed())
            status = run_table(table_args);
        else if (analyze->parsed())
            status = run_analyze(analyze_file);
        else if (verify->parsed())
            status = run_verify(verify_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::fprintf(stderr, "elapsed: %.3fs\n", elapsed.count());
    return status;
}
