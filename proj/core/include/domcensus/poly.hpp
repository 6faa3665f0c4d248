#pragma once

// Sparse bivariate polynomials over arbitrary-precision integers.  Throughout
// the library x counts vertical dominoes and y counts horizontal ones, so the
// coefficient of x^a y^b in a census polynomial is the number of positions
// with a vertical and b horizontal dominoes.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>

namespace domcensus {

using BigInt = mpz_class;

// (x exponent, y exponent)
using ExpPair = std::pair<unsigned, unsigned>;

class BivariatePoly {
public:
    // Ordered so serialization and comparison are canonical.
    using TermMap = std::map<ExpPair, BigInt>;

    BivariatePoly() = default;

    static BivariatePoly constant(long value);
    static BivariatePoly monomial(unsigned xexp, unsigned yexp, BigInt coeff = 1);
    // Zero coefficients are dropped on entry.
    static BivariatePoly from_terms(TermMap terms);

    static const BivariatePoly& zero();
    static const BivariatePoly& one();
    static const BivariatePoly& var_x();
    static const BivariatePoly& var_y();

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    // Zero when the term is absent.
    BigInt coeff(unsigned xexp, unsigned yexp) const;

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    BivariatePoly& operator*=(const BivariatePoly& rhs);

    friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);

    bool operator==(const BivariatePoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const BivariatePoly& rhs) const { return !(*this == rhs); }

    BigInt eval(const BigInt& xval, const BigInt& yval) const;
    // eval(1, 1): the number of positions a census polynomial counts.
    BigInt total() const;

    // Substitute y = x; maps total tile count to its coefficient.
    std::map<unsigned, BigInt> collapse() const;

    // Keep the terms with |xexp - yexp + offset| <= 1.  With offset 0 these
    // are the positions reachable under alternating play from an empty board
    // with either player starting; a nonzero offset shifts the balance for
    // boards that start mid-game.
    BivariatePoly play_filter(int offset = 0) const;

    // Exchange the roles of x and y (the transpose of a board does this).
    BivariatePoly swap_vars() const;

private:
    TermMap terms_;  // invariant: no zero coefficients stored
};

}  // namespace domcensus
