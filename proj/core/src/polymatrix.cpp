#include "domcensus/polymatrix.hpp"

#include "domcensus/threading.hpp"

#include <utility>

namespace domcensus {

namespace {

constexpr int kDimensionCap = 1 << 24;

int checked_power(int radix, int length) {
    long long dim = 1;
    for (int i = 0; i < length; ++i) {
        dim *= radix;
        if (dim > kDimensionCap)
            throw LimitError("label pattern of length " + std::to_string(length) +
                             " exceeds the matrix dimension cap");
    }
    return static_cast<int>(dim);
}

// Entries grouped by row index for row-at-a-time traversal.
std::vector<std::vector<std::pair<int, const BivariatePoly*>>> by_row(const PolyMatrix& m) {
    std::vector<std::vector<std::pair<int, const BivariatePoly*>>> rows(m.rows() + 1);
    for (const auto& [pos, value] : m.entries()) rows[pos.first].emplace_back(pos.second, &value);
    return rows;
}

}  // namespace

LabelPattern::LabelPattern(std::string symbols, int radix)
    : symbols_(std::move(symbols)), radix_(radix) {
    if (radix_ != 2 && radix_ != 3)
        throw DimensionError("label radix must be 2 or 3, got " + std::to_string(radix_));
    for (char ch : symbols_) {
        if (ch == '_') continue;
        if (ch < '0' || ch >= '0' + radix_)
            throw ParseError(std::string("bad label pattern symbol '") + ch + "'");
    }
}

LabelPattern LabelPattern::all_free(int length, int radix) {
    return LabelPattern(std::string(length, '_'), radix);
}

LabelPattern LabelPattern::all_zero(int length, int radix) {
    return LabelPattern(std::string(length, '0'), radix);
}

int LabelPattern::free_count() const {
    int n = 0;
    for (char ch : symbols_) n += ch == '_';
    return n;
}

bool LabelPattern::admits(int index) const {
    int value = index - 1;
    for (int pos = length() - 1; pos >= 0; --pos) {
        int digit = value % radix_;
        value /= radix_;
        char want = symbols_[pos];
        if (want != '_' && digit != want - '0') return false;
    }
    return true;
}

std::vector<int> LabelPattern::admitted_indices() const {
    std::vector<int> out;
    int dim = full_dimension();
    for (int i = 1; i <= dim; ++i)
        if (admits(i)) out.push_back(i);
    return out;
}

int LabelPattern::full_dimension() const {
    return checked_power(radix_, length());
}

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, BivariatePoly::one());
    return m;
}

PolyMatrix PolyMatrix::from_blocks(const std::vector<std::vector<PolyMatrix>>& grid) {
    if (grid.empty() || grid[0].empty()) throw DimensionError("empty block grid");
    int block_rows = grid[0][0].rows();
    int block_cols = grid[0][0].cols();
    std::size_t grid_cols = grid[0].size();
    for (const auto& row : grid) {
        if (row.size() != grid_cols) throw DimensionError("ragged block grid");
        for (const auto& block : row)
            if (block.rows() != block_rows || block.cols() != block_cols)
                throw DimensionError("blocks of unequal shape");
    }
    PolyMatrix out(static_cast<int>(grid.size()) * block_rows,
                   static_cast<int>(grid_cols) * block_cols);
    for (std::size_t bi = 0; bi < grid.size(); ++bi)
        for (std::size_t bj = 0; bj < grid_cols; ++bj)
            for (const auto& [pos, value] : grid[bi][bj].entries_)
                out.entries_.emplace(
                    std::make_pair(static_cast<int>(bi) * block_rows + pos.first,
                                   static_cast<int>(bj) * block_cols + pos.second),
                    value);
    return out;
}

const BivariatePoly& PolyMatrix::at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw DimensionError("matrix index (" + std::to_string(row) + ", " +
                             std::to_string(col) + ") outside " + std::to_string(rows_) +
                             "x" + std::to_string(cols_));
    auto it = entries_.find({row, col});
    return it == entries_.end() ? BivariatePoly::zero() : it->second;
}

void PolyMatrix::set(int row, int col, BivariatePoly value) {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw DimensionError("matrix index (" + std::to_string(row) + ", " +
                             std::to_string(col) + ") outside " + std::to_string(rows_) +
                             "x" + std::to_string(cols_));
    if (value.is_zero())
        entries_.erase({row, col});
    else
        entries_.insert_or_assign({row, col}, std::move(value));
}

PolyMatrix PolyMatrix::scaled(const BivariatePoly& factor) const {
    PolyMatrix out(rows_, cols_);
    if (factor.is_zero()) return out;
    for (const auto& [pos, value] : entries_) out.entries_.emplace(pos, value * factor);
    return out;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& rhs) const {
    PolyMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (const auto& [lpos, lvalue] : entries_)
        for (const auto& [rpos, rvalue] : rhs.entries_)
            out.entries_.emplace(
                std::make_pair((lpos.first - 1) * rhs.rows_ + rpos.first,
                               (lpos.second - 1) * rhs.cols_ + rpos.second),
                lvalue * rvalue);
    return out;
}

PolyMatrix PolyMatrix::restricted(const std::optional<LabelPattern>& row_pattern,
                                  const std::optional<LabelPattern>& col_pattern) const {
    // Old index -> new 1-based index, 0 for dropped.
    auto build_map = [](const std::optional<LabelPattern>& pattern, int dim,
                        const char* which) {
        std::vector<int> map(dim + 1, 0);
        if (!pattern) {
            for (int i = 1; i <= dim; ++i) map[i] = i;
            return std::make_pair(map, dim);
        }
        if (pattern->full_dimension() != dim)
            throw DimensionError(std::string(which) + " pattern covers " +
                                 std::to_string(pattern->full_dimension()) +
                                 " labels, matrix has " + std::to_string(dim));
        int next = 0;
        for (int i = 1; i <= dim; ++i)
            if (pattern->admits(i)) map[i] = ++next;
        return std::make_pair(map, next);
    };

    auto [row_map, new_rows] = build_map(row_pattern, rows_, "row");
    auto [col_map, new_cols] = build_map(col_pattern, cols_, "column");
    PolyMatrix out(new_rows, new_cols);
    for (const auto& [pos, value] : entries_) {
        int ri = row_map[pos.first];
        int cj = col_map[pos.second];
        if (ri && cj) out.entries_.emplace(std::make_pair(ri, cj), value);
    }
    return out;
}

PolyMatrix operator+(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
        throw DimensionError("adding matrices of different shapes");
    PolyMatrix out = lhs;
    for (const auto& [pos, value] : rhs.entries_) {
        auto [it, inserted] = out.entries_.try_emplace(pos, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) out.entries_.erase(it);
        }
    }
    return out;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw DimensionError("multiplying " + std::to_string(lhs.rows_) + "x" +
                             std::to_string(lhs.cols_) + " by " + std::to_string(rhs.rows_) +
                             "x" + std::to_string(rhs.cols_));
    auto lrows = by_row(lhs);
    auto rrows = by_row(rhs);

    // Result rows are independent; accumulate each in its own slot so the
    // thread count cannot affect the outcome.
    std::vector<std::map<int, BivariatePoly>> acc(lhs.rows_ + 1);
    parallel_chunks(lhs.rows_, [&](int begin, int end) {
        for (int i = begin + 1; i <= end; ++i) {
            auto& row_acc = acc[i];
            for (const auto& [k, lvalue] : lrows[i])
                for (const auto& [j, rvalue] : rrows[k]) {
                    auto [it, inserted] = row_acc.try_emplace(j, (*lvalue) * (*rvalue));
                    if (!inserted) it->second += (*lvalue) * (*rvalue);
                }
        }
    });

    PolyMatrix out(lhs.rows_, rhs.cols_);
    for (int i = 1; i <= lhs.rows_; ++i)
        for (auto& [j, value] : acc[i])
            if (!value.is_zero()) out.entries_.emplace(std::make_pair(i, j), std::move(value));
    return out;
}

PolyMatrix PolyMatrix::pow(int exponent) const {
    if (rows_ != cols_) throw DimensionError("powering a non-square matrix");
    if (exponent < 0) throw DimensionError("negative matrix exponent");
    PolyMatrix out = identity(rows_);
    for (int k = 0; k < exponent; ++k) out = out * (*this);
    return out;
}

std::vector<BivariatePoly> PolyMatrix::apply(const std::vector<BivariatePoly>& vec) const {
    if (static_cast<int>(vec.size()) != cols_ + 1)
        throw DimensionError("vector of " + std::to_string(vec.size()) +
                             " slots applied to a matrix with " + std::to_string(cols_) +
                             " columns");
    auto rows = by_row(*this);
    std::vector<BivariatePoly> out(rows_ + 1);
    parallel_chunks(rows_, [&](int begin, int end) {
        for (int i = begin + 1; i <= end; ++i)
            for (const auto& [k, value] : rows[i])
                if (!vec[k].is_zero()) out[i] += (*value) * vec[k];
    });
    return out;
}

std::vector<BivariatePoly> PolyMatrix::unit_column(int dimension) {
    std::vector<BivariatePoly> column(dimension + 1);
    if (dimension >= 1) column[1] = BivariatePoly::one();
    return column;
}

std::vector<BivariatePoly> PolyMatrix::pow_first_column(int exponent) const {
    if (rows_ != cols_) throw DimensionError("powering a non-square matrix");
    if (exponent < 0) throw DimensionError("negative matrix exponent");
    std::vector<BivariatePoly> column = unit_column(rows_);
    for (int step = 0; step < exponent; ++step) column = apply(column);
    return column;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

}  // namespace domcensus
