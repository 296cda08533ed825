#pragma once

#include "qsym/multipoly.hpp"
#include "qsym/quotient.hpp"
#include "qsym/symfunc.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace qsym {

/// M^k (power), M^(wedge k) or M^(sym k).
enum class PowBasis { power, wedge, sym };

std::string_view to_string(PowBasis basis);

/// Element of the free module over the quotient ring spanned by the powers
/// of M in one basis. Coefficients are kept reduced.
class PowVector {
public:
    using Terms = std::map<int, SchurVector, std::greater<>>;

    PowVector(PowBasis basis, QuotientContext ctx);

    /// coeff * M^k in the chosen basis.
    static PowVector monomial(PowBasis basis, const QuotientContext& ctx, int k, const SchurVector& coeff);

    PowBasis basis() const noexcept { return basis_; }
    const QuotientContext& context() const noexcept { return ctx_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    SchurVector coefficient(int k) const;
    int degree() const;

    void add_term(int k, const SchurVector& coeff);
    PowVector& operator+=(const PowVector& rhs);
    PowVector& operator-=(const PowVector& rhs);
    /// Multiplies every coefficient by f.
    PowVector scaled(const SchurVector& f) const;

    friend PowVector operator+(PowVector a, const PowVector& b) { return a += b; }
    friend PowVector operator-(PowVector a, const PowVector& b) { return a -= b; }
    /// (sum M^j a_j) * (sum M^k b_k) = sum M^(j+k) a_j b_k; power basis only.
    friend PowVector operator*(const PowVector& a, const PowVector& b);
    friend bool operator==(const PowVector& a, const PowVector& b);

    /// One line per power, highest first: "M^2: s(1)".
    std::string to_string() const;

private:
    void require_compatible(const PowVector& other) const;

    PowBasis basis_;
    QuotientContext ctx_;
    Terms terms_;
};

/// Same formal module with MultiPoly coefficients (after the
/// parameterization map).
class ParamPowVector {
public:
    using Terms = std::map<int, MultiPoly, std::greater<>>;

    ParamPowVector(PowBasis basis, int m, int n);

    PowBasis basis() const noexcept { return basis_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    MultiPoly coefficient(int k) const;

    void add_term(int k, const MultiPoly& coeff);
    ParamPowVector& operator+=(const ParamPowVector& rhs);
    ParamPowVector& operator-=(const ParamPowVector& rhs);
    ParamPowVector scaled(const MultiPoly& f) const;

    friend ParamPowVector operator+(ParamPowVector a, const ParamPowVector& b) { return a += b; }
    friend ParamPowVector operator-(ParamPowVector a, const ParamPowVector& b) { return a -= b; }
    friend ParamPowVector operator*(const ParamPowVector& a, const ParamPowVector& b);
    friend bool operator==(const ParamPowVector& a, const ParamPowVector& b);

    std::string to_string() const;

private:
    void require_compatible(const ParamPowVector& other) const;

    PowBasis basis_;
    int m_;
    int n_;
    Terms terms_;
};

/// Applies eval_susy to every coefficient.
ParamPowVector evaluate(const PowVector& u);

/// sum_{i=0}^{m+n} M^(m+n-i) sum_k (-1)^k q^(2k-i) s_{[m|n]^k_{i-k}}.
/// The top coefficient is s_{[m|n]}, which is the unit only when mn = 0.
PowVector ch_standard(int m, int n);

/// (sum_k (-q)^k M^(m-k) s_{[m|n]^k}, sum_r q^-r M^(n-r) s_{[m|n]_r}).
std::pair<PowVector, PowVector> ch_factors(int m, int n);

/// factor1 * factor2 - s_{[m|n]} ch_standard, reduced; zero when the
/// factorization holds.
PowVector verify_factorization(int m, int n);

/// d_k = sum_r (k-2r+1)_q s_<(k-r,r)|0>, 0 <= k <= min(2n, m+n).
SchurVector dk_coeff(int m, int n, int k);
/// f_k = sum_r (-1)^(k-2r) (k-2r+1)_q s_<0|(2^r,1^(k-2r))>, 0 <= k <= min(2m, m+n).
SchurVector fk_coeff(int m, int n, int k);

/// Rewrites u in the target basis through the power basis.
PowVector basis_convert(const PowVector& u, PowBasis target);

/// sum_k M^(wedge m+n-k) d_k and sum_k M^(sym m+n-k) f_k.
PowVector ch_wedge(int m, int n);
PowVector ch_sym(int m, int n);

/// Both parameterized forms of d_k (resp. f_k) against d_0 (resp. f_0):
/// the product expansion over s_{[m|n]_l} s_{[m|n]_{k-l}} and the closed
/// form in the elementary symmetric polynomials of nu (resp. mu).
bool verify_dkd0(int m, int n, int k);
bool verify_fkf0(int m, int n, int k);

/// s^2 prod_i (M - mu_i) * prod_j (M - nu_j) - eval(ch_standard) eval(s),
/// s = s_{[m|n]}(mu, nu); zero when the complete factorization holds.
ParamPowVector parametric_ch_residual(int m, int n);

}  // namespace qsym
