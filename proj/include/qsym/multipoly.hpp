#pragma once

#include "qsym/scalars.hpp"

#include <map>
#include <string>
#include <vector>

namespace qsym {

/// Sparse exact polynomial in q^(+-1), mu_1..mu_m, nu_1..nu_n. Exponent
/// vectors are laid out as (q, mu_1..mu_m, nu_1..nu_n); only the q
/// exponent may be negative. The arity (m, n) is fixed at construction and
/// mixing arities throws ErrorCode::arity_mismatch.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    MultiPoly(int m, int n);

    static MultiPoly constant(int m, int n, const LaurentQ& value);
    static MultiPoly mu(int m, int n, int i);  // 1-based
    static MultiPoly nu(int m, int n, int j);  // 1-based
    static MultiPoly monomial(int m, int n, const Rational& coeff, Exponents exps);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& exps, const Rational& coeff);
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly operator-() const;
    MultiPoly pow(int e) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Terms in graded order (total mu/nu degree descending, then
    /// lexicographic in mu_1..mu_m, nu_1..nu_n, then the q exponent), each
    /// printed as "c * q^a * mu1^b * nu1^c" with unit factors omitted.
    std::string to_string() const;
    std::vector<std::string> variable_names() const;
    /// Terms in the same order as to_string().
    std::vector<std::pair<Exponents, Rational>> ordered_terms() const;

private:
    void require_same_arity(const MultiPoly& other) const;

    int m_;
    int n_;
    Terms terms_;
};

/// numerator / denominator, never reduced; equality by cross-multiplication.
class PolyRatio {
public:
    PolyRatio(MultiPoly numerator, MultiPoly denominator);

    const MultiPoly& numerator() const noexcept { return num_; }
    const MultiPoly& denominator() const noexcept { return den_; }

    friend bool operator==(const PolyRatio& a, const PolyRatio& b);
    std::string to_string() const;

private:
    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace qsym
