#pragma once

// Canonical serializations: paper-style polynomial text, JSON documents with
// exact decimal coefficients, and board files.  Everything here is bit-exact
// and deterministic so identical inputs always produce identical bytes.

#include "domcensus/board.hpp"
#include "domcensus/census.hpp"
#include "domcensus/poly.hpp"

#include <optional>
#include <string>

namespace domcensus::io {

// Terms in descending x exponent, then descending y exponent; unit
// coefficients and zero exponents elided: "x^6 + 9*x^5 + ... + 2*x^2*y + 1".
// The zero polynomial prints as "0".
std::string poly_to_text(const BivariatePoly& p);

// One polynomial as a canonical JSON array fragment: terms ascending by
// (x exponent, y exponent), coefficients as decimal strings so arbitrary
// precision survives any JSON reader.
std::string poly_to_json_terms(const BivariatePoly& p);

// The census result document emitted by the poly command.
struct PolyDocument {
    std::string kind;
    std::optional<int> rows, cols;        // rectangle requests
    std::optional<std::string> board;     // board-file requests: the board text
    BivariatePoly poly;
    BigInt total;
    BigInt play_total;
};

std::string to_json(const PolyDocument& doc);
PolyDocument poly_document_from_json(const std::string& text);

// Board files: the parse_board grid, with '%'-prefixed comment lines ignored
// and the trailing newline optional.
Board parse_board_file_text(const std::string& text);
Board load_board_file(const std::string& path);

// First term, in ascending (x, y) order, whose coefficients differ; used for
// mismatch reports.
struct TermDifference {
    ExpPair exp;
    BigInt left_coeff, right_coeff;
};
std::optional<TermDifference> first_difference(const BivariatePoly& left,
                                               const BivariatePoly& right);

}  // namespace domcensus::io
