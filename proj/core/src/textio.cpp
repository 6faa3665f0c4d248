#include "domcensus/textio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace domcensus::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string monomial_text(unsigned xexp, unsigned yexp) {
    std::string out;
    if (xexp == 1)
        out = "x";
    else if (xexp > 1)
        out = "x^" + std::to_string(xexp);
    if (yexp >= 1) {
        if (!out.empty()) out += "*";
        out += yexp == 1 ? "y" : "y^" + std::to_string(yexp);
    }
    return out;
}

ordered_json terms_json(const BivariatePoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [exp, c] : p.terms()) {
        ordered_json term;
        term["x"] = exp.first;
        term["y"] = exp.second;
        term["coeff"] = c.get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

BivariatePoly terms_from_json(const ordered_json& terms) {
    if (!terms.is_array()) throw ParseError("polynomial terms must be a JSON array");
    BivariatePoly::TermMap map;
    for (const auto& term : terms) {
        unsigned xexp = term.at("x").get<unsigned>();
        unsigned yexp = term.at("y").get<unsigned>();
        std::string coeff = term.at("coeff").get<std::string>();
        BigInt value;
        if (value.set_str(coeff, 10) != 0)
            throw ParseError("bad coefficient '" + coeff + "'");
        auto [it, inserted] = map.emplace(ExpPair{xexp, yexp}, value);
        if (!inserted) throw ParseError("duplicate term in polynomial document");
    }
    return BivariatePoly::from_terms(std::move(map));
}

}  // namespace

std::string poly_to_text(const BivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Reverse map order is descending (x exponent, y exponent) exactly.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exp, c] = *it;
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt magnitude = abs(c);
        std::string mono = monomial_text(exp.first, exp.second);
        if (mono.empty())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += mono;
        else
            out += magnitude.get_str() + "*" + mono;
    }
    return out;
}

std::string poly_to_json_terms(const BivariatePoly& p) {
    return terms_json(p).dump();
}

std::string to_json(const PolyDocument& doc) {
    ordered_json j;
    j["command"] = "poly";
    j["kind"] = doc.kind;
    if (doc.rows) j["rows"] = *doc.rows;
    if (doc.cols) j["cols"] = *doc.cols;
    if (doc.board) j["board"] = *doc.board;
    j["terms"] = terms_json(doc.poly);
    j["total"] = doc.total.get_str();
    j["play_total"] = doc.play_total.get_str();
    return j.dump(2) + "\n";
}

PolyDocument poly_document_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("bad JSON document: ") + e.what());
    }
    try {
        PolyDocument doc;
        if (j.at("command").get<std::string>() != "poly")
            throw ParseError("not a poly document");
        doc.kind = j.at("kind").get<std::string>();
        if (j.contains("rows")) doc.rows = j.at("rows").get<int>();
        if (j.contains("cols")) doc.cols = j.at("cols").get<int>();
        if (j.contains("board")) doc.board = j.at("board").get<std::string>();
        doc.poly = terms_from_json(j.at("terms"));
        if (doc.total.set_str(j.at("total").get<std::string>(), 10) != 0)
            throw ParseError("bad total");
        if (doc.play_total.set_str(j.at("play_total").get<std::string>(), 10) != 0)
            throw ParseError("bad play_total");
        return doc;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("bad poly document: ") + e.what());
    }
}

Board parse_board_file_text(const std::string& text) {
    std::string grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '%') continue;
        if (!grid.empty()) grid += '\n';
        grid += line;
    }
    return parse_board(grid);
}

Board load_board_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read board file '" + path + "'");
    std::ostringstream contents;
    contents << in.rdbuf();
    return parse_board_file_text(contents.str());
}

std::optional<TermDifference> first_difference(const BivariatePoly& left,
                                               const BivariatePoly& right) {
    auto lit = left.terms().begin(), lend = left.terms().end();
    auto rit = right.terms().begin(), rend = right.terms().end();
    while (lit != lend || rit != rend) {
        if (rit == rend || (lit != lend && lit->first < rit->first)) {
            return TermDifference{lit->first, lit->second, 0};
        }
        if (lit == lend || rit->first < lit->first) {
            return TermDifference{rit->first, 0, rit->second};
        }
        if (lit->second != rit->second)
            return TermDifference{lit->first, lit->second, rit->second};
        ++lit;
        ++rit;
    }
    return std::nullopt;
}

}  // namespace domcensus::io
