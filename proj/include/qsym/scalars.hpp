#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace qsym {

using Rational = mpq_class;

/// Exact Laurent polynomial in q with arbitrary-precision rational
/// coefficients. Zero coefficients are never stored.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long constant);  // NOLINT(google-explicit-constructor): integers are scalars
    explicit LaurentQ(const Rational& constant);

    static LaurentQ monomial(const Rational& coeff, int exponent);
    static LaurentQ q_power(int exponent) { return monomial(Rational(1), exponent); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    LaurentQ& operator+=(const LaurentQ& rhs);
    LaurentQ& operator-=(const LaurentQ& rhs);
    LaurentQ& operator*=(const LaurentQ& rhs);
    LaurentQ& operator*=(const Rational& rhs);
    LaurentQ operator-() const;

    friend LaurentQ operator+(LaurentQ lhs, const LaurentQ& rhs) { return lhs += rhs; }
    friend LaurentQ operator-(LaurentQ lhs, const LaurentQ& rhs) { return lhs -= rhs; }
    friend LaurentQ operator*(const LaurentQ& lhs, const LaurentQ& rhs);
    friend bool operator==(const LaurentQ& lhs, const LaurentQ& rhs) { return lhs.terms_ == rhs.terms_; }

    /// Canonical text: descending exponents, "c*q^e", e.g. "q^2 - 2 + q^-2".
    std::string to_string() const;
    /// Accepts the canonical grammar; terms may come in any order and the
    /// unicode minus sign is accepted in place of '-'.
    static LaurentQ parse(std::string_view text);

private:
    void add_term(int exponent, const Rational& coeff);

    std::map<int, Rational> terms_;
};

/// Ratio of Laurent polynomials. Never reduced; equality is by
/// cross-multiplication.
class RatFuncQ {
public:
    RatFuncQ() : num_(0), den_(1) {}
    RatFuncQ(LaurentQ numerator);  // NOLINT(google-explicit-constructor)
    RatFuncQ(LaurentQ numerator, LaurentQ denominator);

    const LaurentQ& numerator() const noexcept { return num_; }
    const LaurentQ& denominator() const noexcept { return den_; }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b);

    std::string to_string() const;

private:
    LaurentQ num_;
    LaurentQ den_;
};

/// Symmetric q-number (q^k - q^-k)/(q - q^-1).
LaurentQ qnum(int k);

enum class AppendixIdentity { a1, a2, a3, a7 };

std::string_view to_string(AppendixIdentity which);

/// Both sides of one of the appendix q-identities for the given b-set.
/// `x` only enters A7. Throws ErrorCode::degenerate when b is empty, has a
/// zero entry or repeats an entry.
std::pair<RatFuncQ, RatFuncQ> appendix_sides(AppendixIdentity which, std::span<const int> b, int x = 0);

bool verify_appendix(AppendixIdentity which, std::span<const int> b, int x = 0);

}  // namespace qsym
