#include "qsym/chidentity.hpp"

#include "qsym/error.hpp"
#include "qsym/supersym.hpp"

#include <algorithm>
#include <sstream>

namespace qsym {

std::string_view to_string(PowBasis basis)
{
    switch (basis) {
    case PowBasis::power: return "power";
    case PowBasis::wedge: return "wedge";
    case PowBasis::sym: return "sym";
    }
    return "power";
}

namespace {

std::string power_label(PowBasis basis, int k)
{
    switch (basis) {
    case PowBasis::power: return "M^" + std::to_string(k);
    case PowBasis::wedge: return "M^(wedge " + std::to_string(k) + ")";
    case PowBasis::sym: return "M^(sym " + std::to_string(k) + ")";
    }
    return {};
}

LaurentQ signed_q_power(int sign_exponent, int q_exponent)
{
    return LaurentQ::monomial(Rational(sign_exponent % 2 ? -1 : 1), q_exponent);
}

}  // namespace

// -- PowVector ---------------------------------------------------------------

PowVector::PowVector(PowBasis basis, QuotientContext ctx) : basis_(basis), ctx_(std::move(ctx)) {}

PowVector PowVector::monomial(PowBasis basis, const QuotientContext& ctx, int k, const SchurVector& coeff)
{
    PowVector u(basis, ctx);
    u.add_term(k, coeff);
    return u;
}

SchurVector PowVector::coefficient(int k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? SchurVector() : it->second;
}

int PowVector::degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first;
}

void PowVector::add_term(int k, const SchurVector& coeff)
{
    if (k < 0) throw_out_of_range("matrix powers are nonnegative");
    SchurVector reduced = ctx_.reduce(coeff);
    if (reduced.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, reduced);
    if (!inserted) {
        it->second += reduced;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PowVector::require_compatible(const PowVector& other) const
{
    if (basis_ != other.basis_) throw Error(ErrorCode::invalid_argument, "power bases differ");
    if (!(ctx_ == other.ctx_)) throw Error(ErrorCode::arity_mismatch, "quotient contexts differ");
}

PowVector& PowVector::operator+=(const PowVector& rhs)
{
    require_compatible(rhs);
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

PowVector& PowVector::operator-=(const PowVector& rhs)
{
    require_compatible(rhs);
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

PowVector PowVector::scaled(const SchurVector& f) const
{
    PowVector out(basis_, ctx_);
    const SchurVector g = ctx_.reduce(f);
    for (const auto& [k, c] : terms_) out.add_term(k, c * g);
    return out;
}

PowVector operator*(const PowVector& a, const PowVector& b)
{
    a.require_compatible(b);
    if (a.basis_ != PowBasis::power) throw Error(ErrorCode::invalid_argument, "the * product is defined on the power basis");
    PowVector out(PowBasis::power, a.ctx_);
    for (const auto& [j, x] : a.terms_)
        for (const auto& [k, y] : b.terms_) out.add_term(j + k, x * y);
    return out;
}

bool operator==(const PowVector& a, const PowVector& b)
{
    return a.basis_ == b.basis_ && a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

std::string PowVector::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << '\n';
        first = false;
        out << power_label(basis_, k) << ": " << c.to_string();
    }
    return out.str();
}

// -- ParamPowVector ----------------------------------------------------------

ParamPowVector::ParamPowVector(PowBasis basis, int m, int n) : basis_(basis), m_(m), n_(n) {}

MultiPoly ParamPowVector::coefficient(int k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? MultiPoly(m_, n_) : it->second;
}

void ParamPowVector::add_term(int k, const MultiPoly& coeff)
{
    if (k < 0) throw_out_of_range("matrix powers are nonnegative");
    if (coeff.m() != m_ || coeff.n() != n_) throw Error(ErrorCode::arity_mismatch, "variable arity mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ParamPowVector::require_compatible(const ParamPowVector& other) const
{
    if (basis_ != other.basis_) throw Error(ErrorCode::invalid_argument, "power bases differ");
    if (m_ != other.m_ || n_ != other.n_) throw Error(ErrorCode::arity_mismatch, "variable arity mismatch");
}

ParamPowVector& ParamPowVector::operator+=(const ParamPowVector& rhs)
{
    require_compatible(rhs);
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

ParamPowVector& ParamPowVector::operator-=(const ParamPowVector& rhs)
{
    require_compatible(rhs);
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

ParamPowVector ParamPowVector::scaled(const MultiPoly& f) const
{
    ParamPowVector out(basis_, m_, n_);
    for (const auto& [k, c] : terms_) out.add_term(k, c * f);
    return out;
}

ParamPowVector operator*(const ParamPowVector& a, const ParamPowVector& b)
{
    a.require_compatible(b);
    if (a.basis_ != PowBasis::power) throw Error(ErrorCode::invalid_argument, "the * product is defined on the power basis");
    ParamPowVector out(PowBasis::power, a.m_, a.n_);
    for (const auto& [j, x] : a.terms_)
        for (const auto& [k, y] : b.terms_) out.add_term(j + k, x * y);
    return out;
}

bool operator==(const ParamPowVector& a, const ParamPowVector& b)
{
    return a.basis_ == b.basis_ && a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string ParamPowVector::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << '\n';
        first = false;
        out << power_label(basis_, k) << ": " << c.to_string();
    }
    return out.str();
}

ParamPowVector evaluate(const PowVector& u)
{
    const int m = u.context().m();
    const int n = u.context().n();
    ParamPowVector out(u.basis(), m, n);
    for (const auto& [k, c] : u.terms()) out.add_term(k, eval_susy(c, m, n));
    return out;
}

// -- identities --------------------------------------------------------------

PowVector ch_standard(int m, int n)
{
    const QuotientContext ctx(m, n);
    PowVector out(PowBasis::power, ctx);
    for (int i = 0; i <= m + n; ++i) {
        SchurVector coeff;
        for (int k = std::max(0, i - n); k <= std::min(i, m); ++k)
            coeff += hook_schur(m, n, k, i - k) * signed_q_power(k, 2 * k - i);
        out.add_term(m + n - i, coeff);
    }
    return out;
}

std::pair<PowVector, PowVector> ch_factors(int m, int n)
{
    const QuotientContext ctx(m, n);
    PowVector first(PowBasis::power, ctx);
    for (int k = 0; k <= m; ++k) first.add_term(m - k, hook_schur(m, n, k, 0) * signed_q_power(k, k));
    PowVector second(PowBasis::power, ctx);
    for (int r = 0; r <= n; ++r) second.add_term(n - r, hook_schur(m, n, 0, r) * LaurentQ::q_power(-r));
    return {first, second};
}

PowVector verify_factorization(int m, int n)
{
    if (m < 1 || n < 1) throw_out_of_range("factorization check needs m, n >= 1");
    auto [first, second] = ch_factors(m, n);
    return first * second - ch_standard(m, n).scaled(hook_schur(m, n));
}

SchurVector dk_coeff(int m, int n, int k)
{
    if (m < 0 || n < 0 || k < 0 || k > std::min(2 * n, m + n)) throw_out_of_range("d_k needs 0 <= k <= min(2n, m+n)");
    const QuotientContext ctx(m, n);
    SchurVector out;
    for (int r = std::max(0, k - n); r <= k / 2; ++r)
        out += SchurVector::basis(frame_partition(m, n, Partition({k - r, r}), Partition()), qnum(k - 2 * r + 1));
    return ctx.reduce(out);
}

SchurVector fk_coeff(int m, int n, int k)
{
    if (m < 0 || n < 0 || k < 0 || k > std::min(2 * m, m + n)) throw_out_of_range("f_k needs 0 <= k <= min(2m, m+n)");
    const QuotientContext ctx(m, n);
    SchurVector out;
    for (int r = std::max(0, k - m); r <= k / 2; ++r) {
        std::vector<int> lam(r, 2);
        lam.insert(lam.end(), k - 2 * r, 1);
        LaurentQ c = qnum(k - 2 * r + 1);
        if ((k - 2 * r) % 2) c = -c;
        out += SchurVector::basis(frame_partition(m, n, Partition(), Partition(std::move(lam))), c);
    }
    return ctx.reduce(out);
}

namespace {

PowVector to_power(const PowVector& u)
{
    if (u.basis() == PowBasis::power) return u;
    PowVector out(PowBasis::power, u.context());
    for (const auto& [k, c] : u.terms()) {
        for (int r = 0; r <= k; ++r) {
            if (u.basis() == PowBasis::wedge)
                out.add_term(k - r, pieri_column(c, r) * signed_q_power(r, r));
            else
                out.add_term(k - r, pieri_row(c, r) * LaurentQ::q_power(-r));
        }
    }
    return out;
}

PowVector from_power(const PowVector& u, PowBasis target)
{
    if (target == PowBasis::power) return u;
    PowVector out(target, u.context());
    for (const auto& [k, c] : u.terms()) {
        for (int r = 0; r <= k; ++r) {
            if (target == PowBasis::wedge)
                out.add_term(k - r, pieri_row(c, r) * LaurentQ::q_power(r));
            else
                out.add_term(k - r, pieri_column(c, r) * signed_q_power(r, -r));
        }
    }
    return out;
}

}  // namespace

PowVector basis_convert(const PowVector& u, PowBasis target)
{
    if (u.basis() == target) return u;
    return from_power(to_power(u), target);
}

PowVector ch_wedge(int m, int n)
{
    const QuotientContext ctx(m, n);
    PowVector out(PowBasis::wedge, ctx);
    for (int k = 0; k <= std::min(2 * n, m + n); ++k) out.add_term(m + n - k, dk_coeff(m, n, k));
    return out;
}

PowVector ch_sym(int m, int n)
{
    const QuotientContext ctx(m, n);
    PowVector out(PowBasis::sym, ctx);
    for (int k = 0; k <= std::min(2 * m, m + n); ++k) out.add_term(m + n - k, fk_coeff(m, n, k));
    return out;
}

namespace {

MultiPoly scalar(int m, int n, const LaurentQ& c)
{
    return MultiPoly::constant(m, n, c);
}

}  // namespace

bool verify_dkd0(int m, int n, int k)
{
    const SchurVector dk = dk_coeff(m, n, k);
    const MultiPoly lhs = eval_susy(dk, m, n);
    const MultiPoly d0 = eval_susy(dk_coeff(m, n, 0), m, n);
    MultiPoly product(m, n);
    for (int l = std::max(0, k - n); l <= std::min(k, n); ++l)
        product += scalar(m, n, LaurentQ::q_power(k - 2 * l)) * eval_susy(hook_schur(m, n, 0, l), m, n) *
                   eval_susy(hook_schur(m, n, 0, k - l), m, n);
    if (lhs * d0 != product) return false;
    MultiPoly closed(m, n);
    for (int r = std::max(0, k - n); r <= std::min(k, n); ++r)
        closed += scalar(m, n, LaurentQ::q_power(2 * r)) * e_poly(r, plain(VarFamily::nu), m, n) *
                  e_poly(k - r, plain(VarFamily::nu), m, n);
    if (k % 2) closed = -closed;
    return lhs == closed * d0;
}

bool verify_fkf0(int m, int n, int k)
{
    const SchurVector fk = fk_coeff(m, n, k);
    const MultiPoly lhs = eval_susy(fk, m, n);
    const MultiPoly f0 = eval_susy(fk_coeff(m, n, 0), m, n);
    MultiPoly product(m, n);
    for (int l = std::max(0, k - m); l <= std::min(k, m); ++l)
        product += scalar(m, n, LaurentQ::q_power(k - 2 * l)) * eval_susy(hook_schur(m, n, l, 0), m, n) *
                   eval_susy(hook_schur(m, n, k - l, 0), m, n);
    if (k % 2) product = -product;
    if (lhs * f0 != product) return false;
    MultiPoly closed(m, n);
    for (int r = std::max(0, k - m); r <= std::min(k, m); ++r)
        closed += scalar(m, n, LaurentQ::q_power(-2 * r)) * e_poly(r, plain(VarFamily::mu), m, n) *
                  e_poly(k - r, plain(VarFamily::mu), m, n);
    if (k % 2) closed = -closed;
    return lhs == closed * f0;
}

ParamPowVector parametric_ch_residual(int m, int n)
{
    if (m < 1 || n < 1) throw_out_of_range("complete factorization needs m, n >= 1");
    const MultiPoly s = eval_susy(hook_schur(m, n), m, n);
    auto linear_factor = [&](const MultiPoly& root) {
        ParamPowVector f(PowBasis::power, m, n);
        f.add_term(1, scalar(m, n, LaurentQ(1)));
        f.add_term(0, -root);
        return f;
    };
    ParamPowVector lhs(PowBasis::power, m, n);
    lhs.add_term(0, s * s);
    for (int i = 1; i <= m; ++i) lhs = lhs * linear_factor(MultiPoly::mu(m, n, i));
    for (int j = 1; j <= n; ++j) lhs = lhs * linear_factor(MultiPoly::nu(m, n, j));
    return lhs - evaluate(ch_standard(m, n)).scaled(s);
}

}  // namespace qsym
