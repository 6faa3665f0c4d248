#pragma once

// Sparse matrices over the bivariate polynomial ring, indexed from 1.  A
// matrix of dimension radix^q is read through edge-label strings: index i
// stands for (i - 1) written in the radix with q digits, most significant
// digit first, so the leftmost character describes the leftmost tile of a
// bar.  Row indices carry the labels on the bottom edge, column indices the
// labels on the top edge.

#include "domcensus/errors.hpp"
#include "domcensus/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domcensus {

// A mask over edge-label strings.  Each character is a fixed digit ('0', '1',
// or '2' when the radix allows it) or '_' for a free position.  Selecting the
// indices a pattern admits cuts a matrix down to the labels compatible with a
// neighbouring row's blocked squares.
class LabelPattern {
public:
    LabelPattern(std::string symbols, int radix);

    static LabelPattern all_free(int length, int radix);
    static LabelPattern all_zero(int length, int radix);

    int length() const { return static_cast<int>(symbols_.size()); }
    int radix() const { return radix_; }
    const std::string& symbols() const { return symbols_; }
    int free_count() const;

    // Does 1-based index admit the pattern?  index - 1 is read as length()
    // digits in the radix, most significant first.
    bool admits(int index) const;
    // The admitted indices, ascending.
    std::vector<int> admitted_indices() const;
    // radix^length, the dimension a pattern of this shape applies to.
    int full_dimension() const;

private:
    std::string symbols_;
    int radix_;
};

class PolyMatrix {
public:
    using EntryMap = std::map<std::pair<int, int>, BivariatePoly>;

    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);
    // Assemble from a rectangular grid of equally-shaped blocks.
    static PolyMatrix from_blocks(const std::vector<std::vector<PolyMatrix>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzero_count() const { return entries_.size(); }
    const EntryMap& entries() const { return entries_; }

    // 1-based; zero entries are simply absent.
    const BivariatePoly& at(int row, int col) const;
    void set(int row, int col, BivariatePoly value);

    PolyMatrix scaled(const BivariatePoly& factor) const;

    // Kronecker product; *this supplies the most significant label digits,
    // matching a bar split into a left and a right segment.
    PolyMatrix kron(const PolyMatrix& rhs) const;

    // Keep the rows admitted by row_pattern and the columns admitted by
    // col_pattern; an empty optional keeps everything.  Patterns must match
    // the corresponding dimension.
    PolyMatrix restricted(const std::optional<LabelPattern>& row_pattern,
                          const std::optional<LabelPattern>& col_pattern) const;

    // Plain left-to-right product chain; exponent 0 gives the identity.
    PolyMatrix pow(int exponent) const;

    // Matrix-vector product.  Vectors use 1-based slots like the matrix:
    // slot 0 is ignored and returned zero, slot i of the result holds
    // Σ_k entry(i, k) · vec[k].
    std::vector<BivariatePoly> apply(const std::vector<BivariatePoly>& vec) const;

    // First column of (*this)^exponent without materializing the power,
    // as repeated matrix-vector products.
    std::vector<BivariatePoly> pow_first_column(int exponent) const;

    // The vector e1 this matrix's apply() accepts: slot 1 holds 1.
    static std::vector<BivariatePoly> unit_column(int dimension);

    friend PolyMatrix operator+(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);

    bool operator==(const PolyMatrix& rhs) const;
    bool operator!=(const PolyMatrix& rhs) const { return !(*this == rhs); }

private:
    int rows_;
    int cols_;
    EntryMap entries_;  // invariant: no zero polynomials stored
};

}  // namespace domcensus
