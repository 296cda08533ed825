#include "qsym/supersym.hpp"

#include "qsym/error.hpp"
#include "qsym/quotient.hpp"

#include <algorithm>
#include <set>

namespace qsym {

namespace {

std::vector<MultiPoly> selected_variables(const VarSelector& vars, int m, int n)
{
    std::vector<MultiPoly> out;
    const int count = vars.family == VarFamily::mu ? m : n;
    const LaurentQ scale = LaurentQ::monomial(Rational(vars.sign), vars.q_exponent);
    for (int i = vars.skip + 1; i <= count; ++i) {
        MultiPoly v = vars.family == VarFamily::mu ? MultiPoly::mu(m, n, i) : MultiPoly::nu(m, n, i);
        out.push_back(MultiPoly::constant(m, n, scale) * v);
    }
    return out;
}

}  // namespace

MultiPoly e_poly(int k, const VarSelector& vars, int m, int n)
{
    if (k < 0) throw_out_of_range("e_poly needs k >= 0");
    const auto xs = selected_variables(vars, m, n);
    if (k > static_cast<int>(xs.size())) return MultiPoly(m, n);
    // E_j over the first t variables, updated in place from the top.
    std::vector<MultiPoly> table(k + 1, MultiPoly(m, n));
    table[0] = MultiPoly::constant(m, n, LaurentQ(1));
    for (const auto& x : xs)
        for (int j = k; j >= 1; --j) table[j] += x * table[j - 1];
    return table[k];
}

MultiPoly h_poly(int k, const VarSelector& vars, int m, int n)
{
    if (k < 0) throw_out_of_range("h_poly needs k >= 0");
    const auto xs = selected_variables(vars, m, n);
    std::vector<MultiPoly> table(k + 1, MultiPoly(m, n));
    table[0] = MultiPoly::constant(m, n, LaurentQ(1));
    if (xs.empty()) return table[k];
    for (const auto& x : xs)
        for (int j = 1; j <= k; ++j) table[j] += x * table[j - 1];
    return table[k];
}

MultiPoly generator_image(GeneratorKind kind, int k, int m, int n, int skip)
{
    if (k < 0) throw_out_of_range("generator index must be nonnegative");
    const VarSelector even = q_inv_mu(skip);
    const VarSelector odd = minus_q_nu(skip);
    MultiPoly sum(m, n);
    for (int r = 0; r <= k; ++r) {
        if (kind == GeneratorKind::column)
            sum += e_poly(r, even, m, n) * h_poly(k - r, odd, m, n);
        else
            sum += e_poly(r, odd, m, n) * h_poly(k - r, even, m, n);
    }
    return sum;
}

MultiPoly eval_susy(const SchurVector& f, int m, int n)
{
    if (m < 0 || n < 0) throw_out_of_range("arity must be nonnegative");
    std::map<int, MultiPoly> h_images;
    std::map<HMonomial, MultiPoly> products;
    auto h_image = [&](int a) -> const MultiPoly& {
        auto it = h_images.find(a);
        if (it == h_images.end()) it = h_images.emplace(a, generator_image(GeneratorKind::row, a, m, n)).first;
        return it->second;
    };
    // Products of h-images are shared between monomials with a common prefix.
    auto product = [&](auto&& self, const HMonomial& mono) -> const MultiPoly& {
        auto it = products.find(mono);
        if (it != products.end()) return it->second;
        MultiPoly value = MultiPoly::constant(m, n, LaurentQ(1));
        if (!mono.empty()) {
            HMonomial head(mono.begin(), mono.end() - 1);
            value = self(self, head) * h_image(mono.back());
        }
        return products.emplace(mono, std::move(value)).first->second;
    };
    MultiPoly out(m, n);
    for (const auto& [lam, coeff] : f.terms()) {
        MultiPoly image(m, n);
        for (const auto& [mono, c] : jacobi_trudi_h(lam)) image += MultiPoly::constant(m, n, c) * product(product, mono);
        out += MultiPoly::constant(m, n, coeff) * image;
    }
    return out;
}

MultiPoly rectangle_product(int m, int n)
{
    MultiPoly out = MultiPoly::constant(m, n, LaurentQ(1));
    const MultiPoly q_inv = MultiPoly::constant(m, n, LaurentQ::q_power(-1));
    const MultiPoly q = MultiPoly::constant(m, n, LaurentQ::q_power(1));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) out *= q_inv * MultiPoly::mu(m, n, i) - q * MultiPoly::nu(m, n, j);
    return out;
}

bool verify_c0(int m, int n)
{
    if (m < 1 || n < 1) throw_out_of_range("c0 needs m, n >= 1");
    return eval_susy(SchurVector::basis(rectangle(m, n)), m, n) == rectangle_product(m, n);
}

bool is_supersymmetric(const MultiPoly& p, int m, int n)
{
    if (p.m() != m || p.n() != n) throw Error(ErrorCode::arity_mismatch, "variable arity mismatch");
    auto invariant_under_swap = [&](int a, int b) {
        MultiPoly swapped(m, n);
        for (const auto& [exps, c] : p.terms()) {
            MultiPoly::Exponents e = exps;
            std::swap(e[a], e[b]);
            swapped.add_term(e, c);
        }
        return swapped == p;
    };
    for (int i = 1; i < m; ++i)
        if (!invariant_under_swap(i, i + 1)) return false;
    for (int j = 1; j < n; ++j)
        if (!invariant_under_swap(m + j, m + j + 1)) return false;
    if (m == 0 || n == 0) return true;
    // mu_1 = q t, nu_1 = q^-1 t: q^a mu_1^b nu_1^c -> q^(a+b-c) t^(b+c).
    std::map<std::vector<int>, Rational> substituted;
    for (const auto& [exps, c] : p.terms()) {
        std::vector<int> key = exps;
        const int b = exps[1];
        const int d = exps[m + 1];
        key[0] = exps[0] + b - d;
        key[1] = b + d;  // t degree
        key[m + 1] = 0;
        auto [it, inserted] = substituted.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) substituted.erase(it);
        }
    }
    return std::all_of(substituted.begin(), substituted.end(), [](const auto& kv) { return kv.first[1] == 0; });
}

namespace {

MultiPoly family_product(VarFamily family, int m, int n)
{
    MultiPoly out = MultiPoly::constant(m, n, LaurentQ(1));
    const int count = family == VarFamily::mu ? m : n;
    for (int i = 1; i <= count; ++i) out *= family == VarFamily::mu ? MultiPoly::mu(m, n, i) : MultiPoly::nu(m, n, i);
    return out;
}

MultiPoly eval_partition(const Partition& lam, int m, int n)
{
    return eval_susy(SchurVector::basis(lam), m, n);
}

void require_positive_arity(int m, int n, const char* what)
{
    if (m < 1 || n < 1) throw_out_of_range(std::string(what) + " needs m, n >= 1");
}

}  // namespace

PolyRatio berezinian_param(int m, int n)
{
    require_positive_arity(m, n, "Berezinian");
    return PolyRatio(eval_partition(hook_partition(m, n + 1, 0, 0), m, n), eval_partition(hook_partition(m + 1, n, 0, 0), m, n));
}

PolyRatio berezinian_closed_form(int m, int n)
{
    require_positive_arity(m, n, "Berezinian");
    const LaurentQ scale = LaurentQ::monomial(Rational(n % 2 ? -1 : 1), -(m + n));
    return PolyRatio(MultiPoly::constant(m, n, scale) * family_product(VarFamily::mu, m, n), family_product(VarFamily::nu, m, n));
}

bool verify_berezinian(int m, int n)
{
    return berezinian_param(m, n) == berezinian_closed_form(m, n);
}

PolyRatio determinant_param(int m, int n)
{
    require_positive_arity(m, n, "determinant");
    return PolyRatio(eval_partition(hook_partition(m, n, m, n), m, n), eval_partition(rectangle(m, n), m, n));
}

PolyRatio determinant_closed_form(int m, int n)
{
    require_positive_arity(m, n, "determinant");
    const LaurentQ scale = LaurentQ::monomial(Rational(n % 2 ? -1 : 1), n - m);
    return PolyRatio(MultiPoly::constant(m, n, scale) * family_product(VarFamily::mu, m, n) * family_product(VarFamily::nu, m, n),
                     MultiPoly::constant(m, n, LaurentQ(1)));
}

PolyRatio determinant_product_form(int m, int n)
{
    require_positive_arity(m, n, "determinant");
    const MultiPoly base = eval_partition(rectangle(m, n), m, n);
    return PolyRatio(eval_partition(hook_partition(m, n + 1, 0, 0), m, n) * eval_partition(hook_partition(m + 1, n, 0, 0), m, n),
                     base * base);
}

bool verify_determinant(int m, int n)
{
    const PolyRatio param = determinant_param(m, n);
    return param == determinant_closed_form(m, n) && param == determinant_product_form(m, n);
}

bool verify_def_mu_nu(int m, int n)
{
    require_positive_arity(m, n, "parameterization consistency");
    const MultiPoly base = eval_partition(rectangle(m, n), m, n);
    for (int k = 1; k <= m; ++k)
        if (eval_partition(hook_partition(m, n, k, 0), m, n) != e_poly(k, q_inv_mu(), m, n) * base) return false;
    for (int r = 1; r <= n; ++r)
        if (eval_partition(hook_partition(m, n, 0, r), m, n) != e_poly(r, minus_q_nu(), m, n) * base) return false;
    return true;
}

bool verify_generator_route(GeneratorKind kind, int k, int m, int n)
{
    if (k < 0) throw_out_of_range("generator index must be nonnegative");
    const SchurVector s = kind == GeneratorKind::column ? elementary(k) : complete(k);
    return eval_susy(s, m, n) == generator_image(kind, k, m, n);
}

bool verify_expansion_lemma(GeneratorKind kind, int k, int m, int n)
{
    require_positive_arity(m, n, "expansion lemma");
    if (k < 0) throw_out_of_range("generator index must be nonnegative");
    const MultiPoly x1 = MultiPoly::constant(m, n, LaurentQ::q_power(-1)) * MultiPoly::mu(m, n, 1);
    const MultiPoly y1 = MultiPoly::constant(m, n, LaurentQ::monomial(Rational(-1), 1)) * MultiPoly::nu(m, n, 1);
    const MultiPoly& ratio_base = kind == GeneratorKind::row ? x1 : y1;
    MultiPoly tail(m, n);
    for (int r = 0; r <= k - 1; ++r) tail += ratio_base.pow(k - r - 1) * generator_image(kind, r, m, n, 1);
    const MultiPoly rhs = generator_image(kind, k, m, n, 1) + (x1 + y1) * tail;
    return generator_image(kind, k, m, n) == rhs;
}

MultiPoly wronski_image(int k, int m, int n)
{
    if (k < 0) throw_out_of_range("wronski_image needs k >= 0");
    MultiPoly sum(m, n);
    for (int r = 0; r <= k; ++r) {
        MultiPoly term = generator_image(GeneratorKind::column, r, m, n) * generator_image(GeneratorKind::row, k - r, m, n);
        if (r % 2) term = -term;
        sum += term;
    }
    if (k == 0) sum -= MultiPoly::constant(m, n, LaurentQ(1));
    return sum;
}

}  // namespace qsym
