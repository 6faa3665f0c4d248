#include "domcensus/poly.hpp"

#include <cstdlib>

namespace domcensus {

BivariatePoly BivariatePoly::constant(long value) {
    return monomial(0, 0, BigInt(value));
}

BivariatePoly BivariatePoly::monomial(unsigned xexp, unsigned yexp, BigInt coeff) {
    BivariatePoly p;
    if (coeff != 0) p.terms_.emplace(ExpPair{xexp, yexp}, std::move(coeff));
    return p;
}

BivariatePoly BivariatePoly::from_terms(TermMap terms) {
    BivariatePoly p;
    p.terms_ = std::move(terms);
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
        if (it->second == 0)
            it = p.terms_.erase(it);
        else
            ++it;
    }
    return p;
}

const BivariatePoly& BivariatePoly::zero() {
    static const BivariatePoly p;
    return p;
}

const BivariatePoly& BivariatePoly::one() {
    static const BivariatePoly p = constant(1);
    return p;
}

const BivariatePoly& BivariatePoly::var_x() {
    static const BivariatePoly p = monomial(1, 0);
    return p;
}

const BivariatePoly& BivariatePoly::var_y() {
    static const BivariatePoly p = monomial(0, 1);
    return p;
}

BigInt BivariatePoly::coeff(unsigned xexp, unsigned yexp) const {
    auto it = terms_.find({xexp, yexp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(exp, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    BivariatePoly::TermMap product;
    for (const auto& [le, lc] : lhs.terms()) {
        for (const auto& [re, rc] : rhs.terms()) {
            ExpPair exp{le.first + re.first, le.second + re.second};
            auto [it, inserted] = product.try_emplace(exp, lc * rc);
            if (!inserted) it->second += lc * rc;
        }
    }
    return BivariatePoly::from_terms(std::move(product));
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) {
    *this = *this * rhs;
    return *this;
}

BigInt BivariatePoly::eval(const BigInt& xval, const BigInt& yval) const {
    // Exponents are tiny compared to coefficient sizes; direct powering is fine.
    BigInt sum = 0;
    for (const auto& [exp, c] : terms_) {
        BigInt term = c;
        BigInt xe, ye;
        mpz_pow_ui(xe.get_mpz_t(), xval.get_mpz_t(), exp.first);
        mpz_pow_ui(ye.get_mpz_t(), yval.get_mpz_t(), exp.second);
        sum += term * xe * ye;
    }
    return sum;
}

BigInt BivariatePoly::total() const {
    BigInt sum = 0;
    for (const auto& [exp, c] : terms_) sum += c;
    return sum;
}

std::map<unsigned, BigInt> BivariatePoly::collapse() const {
    std::map<unsigned, BigInt> out;
    for (const auto& [exp, c] : terms_) out[exp.first + exp.second] += c;
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

BivariatePoly BivariatePoly::play_filter(int offset) const {
    TermMap kept;
    for (const auto& [exp, c] : terms_) {
        long balance = static_cast<long>(exp.first) - static_cast<long>(exp.second) + offset;
        if (std::labs(balance) <= 1) kept.emplace(exp, c);
    }
    return from_terms(std::move(kept));
}

BivariatePoly BivariatePoly::swap_vars() const {
    TermMap swapped;
    for (const auto& [exp, c] : terms_) swapped.emplace(ExpPair{exp.second, exp.first}, c);
    return from_terms(std::move(swapped));
}

}  // namespace domcensus
