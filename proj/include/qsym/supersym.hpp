#pragma once

#include "qsym/multipoly.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

enum class VarFamily { mu, nu };

/// Picks the variables {sign * q^q_exponent * x_i : i > skip} of one family;
/// `skip` drops leading variables (skip = 1 gives mu' = mu \ {mu_1}).
struct VarSelector {
    VarFamily family = VarFamily::mu;
    int sign = 1;
    int q_exponent = 0;
    int skip = 0;
};

/// {q^-1 mu_i} and {-q nu_j}: the variables of the parameterization map.
inline VarSelector q_inv_mu(int skip = 0) { return {VarFamily::mu, 1, -1, skip}; }
inline VarSelector minus_q_nu(int skip = 0) { return {VarFamily::nu, -1, 1, skip}; }
inline VarSelector plain(VarFamily family) { return {family, 1, 0, 0}; }

MultiPoly e_poly(int k, const VarSelector& vars, int m, int n);
MultiPoly h_poly(int k, const VarSelector& vars, int m, int n);

enum class GeneratorKind { column, row };

/// Image of the column generator s_(1^k) = sum_r e_r(q^-1 mu) h_{k-r}(-q nu)
/// or of the row generator s_(k) = sum_r e_r(-q nu) h_{k-r}(q^-1 mu).
/// `skip` evaluates on mu', nu' with the first `skip` variables of each
/// family removed (still embedded in the (m, n) polynomial ring).
MultiPoly generator_image(GeneratorKind kind, int k, int m, int n, int skip = 0);

/// Parameterization homomorphism Lambda -> Q[q^(+-1), mu, nu]: Jacobi-Trudi
/// into h's, then h_k -> generator_image(row, k).
MultiPoly eval_susy(const SchurVector& f, int m, int n);

/// prod_{i,j} (q^-1 mu_i - q nu_j).
MultiPoly rectangle_product(int m, int n);
bool verify_c0(int m, int n);

/// Symmetric in mu, symmetric in nu, and free of t after q^-1 mu_1 = q nu_1 = t.
bool is_supersymmetric(const MultiPoly& p, int m, int n);

/// eval(s_[m|n+1]) / eval(s_[m+1|n]) and its closed form
/// (-1)^n q^-(m+n) prod mu / prod nu.
PolyRatio berezinian_param(int m, int n);
PolyRatio berezinian_closed_form(int m, int n);
bool verify_berezinian(int m, int n);

/// eval(s_[m|n]^m_n) / eval(s_[m|n]), the closed form (-1)^n q^(n-m) prod mu
/// prod nu, and the product form eval(s_[m|n+1] s_[m+1|n]) / eval(s_[m|n])^2.
PolyRatio determinant_param(int m, int n);
PolyRatio determinant_closed_form(int m, int n);
PolyRatio determinant_product_form(int m, int n);
bool verify_determinant(int m, int n);

/// eval(s_[m|n]^k) = e_k(q^-1 mu) eval(s_[m|n]) for 1 <= k <= m and
/// eval(s_[m|n]_r) = e_r(-q nu) eval(s_[m|n]) for 1 <= r <= n.
bool verify_def_mu_nu(int m, int n);

/// Jacobi-Trudi route against the closed generator formulas:
/// eval(s_(1^k)) == generator_image(column, k) and eval(s_(k)) ==
/// generator_image(row, k).
bool verify_generator_route(GeneratorKind kind, int k, int m, int n);

/// Strip mu_1, nu_1 off a generator image; the dependence enters through
/// the factor (q^-1 mu_1 - q nu_1). Needs m, n >= 1.
bool verify_expansion_lemma(GeneratorKind kind, int k, int m, int n);

/// sum_r (-1)^r column_r * row_{k-r} - delta(k); zero for every k.
MultiPoly wronski_image(int k, int m, int n);

}  // namespace qsym
