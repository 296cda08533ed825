#include "qsym/quotient.hpp"

#include "qsym/error.hpp"

#include <algorithm>

namespace qsym {

QuotientContext::QuotientContext(int m, int n) : m_(m), n_(n), rectangle_(rectangle(m + 1, n + 1))
{
    if (m < 0 || n < 0 || m + n < 1) throw_out_of_range("quotient context needs m, n >= 0 and m + n >= 1");
}

bool QuotientContext::kills(const Partition& lam) const
{
    return lam[m_] >= n_ + 1;
}

SchurVector QuotientContext::reduce(const SchurVector& f) const
{
    return f.filtered([this](const Partition& lam) { return !kills(lam); });
}

SchurVector hook_schur(int r, int p, int l, int k)
{
    return SchurVector::basis(hook_partition(r, p, l, k));
}

SchurVector bilinear_residual(int r, int p, int l, int k)
{
    if (l < 1 || l > r || k < 1 || k > p) throw_out_of_range("bilinear relation needs 1 <= l <= r, 1 <= k <= p");
    const SchurVector lhs = hook_schur(r, p, l, k) * hook_schur(r, p);
    const SchurVector rhs = hook_schur(r - 1, p - 1, l - 1, k - 1) * hook_schur(r + 1, p + 1) +
                            hook_schur(r, p, 0, k) * hook_schur(r, p, l, 0);
    return lhs - rhs;
}

bool verify_bilinear(int r, int p, int l, int k)
{
    return bilinear_residual(r, p, l, k).is_zero();
}

SchurVector bilinear_quotient_residual(int l, int k, const QuotientContext& ctx)
{
    const int m = ctx.m();
    const int n = ctx.n();
    if (l < 0 || l > m || k < 0 || k > n) throw_out_of_range("quotient bilinear relation needs 0 <= l <= m, 0 <= k <= n");
    const SchurVector lhs = hook_schur(m, n, l, k) * hook_schur(m, n);
    const SchurVector rhs = hook_schur(m, n, 0, k) * hook_schur(m, n, l, 0);
    return ctx.reduce(lhs - rhs);
}

bool verify_bilinear_quotient(int l, int k, const QuotientContext& ctx)
{
    return bilinear_quotient_residual(l, k, ctx).is_zero();
}

SchurVector verify_sum_lemma(int m, int n, int r, int k)
{
    if (m < 0 || n < 0 || r < 0 || r > n || k < r || k > m + n)
        throw_out_of_range("sum lemma needs 0 <= r <= n, r <= k <= m+n");
    SchurVector lhs;
    for (int i = r; i <= std::min(k, r + m); ++i) {
        SchurVector term = complete(k - i) * hook_schur(m, n, i - r, r);
        if (i % 2) term = -term;
        lhs += term;
    }
    SchurVector rhs;
    if (k <= n + r) {
        for (int i = std::max(0, k - n); i <= std::min(r, k - r); ++i)
            rhs.add_term(frame_partition(m, n, Partition({k - i, i}), Partition()), LaurentQ(1));
        if (r % 2) rhs = -rhs;
    }
    return lhs - rhs;
}

SchurVector kirillov_residual(int m, int n)
{
    if (m < 1 || n < 1) throw_out_of_range("Kirillov relation needs m, n >= 1");
    const SchurVector square = SchurVector::basis(rectangle(m, n));
    const SchurVector lhs = square * square;
    const SchurVector rhs = SchurVector::basis(rectangle(m + 1, n)) * SchurVector::basis(rectangle(m - 1, n)) +
                            SchurVector::basis(rectangle(m, n + 1)) * SchurVector::basis(rectangle(m, n - 1));
    return lhs - rhs;
}

bool verify_kirillov(int m, int n)
{
    return kirillov_residual(m, n).is_zero();
}

SchurVector sab_residual(int a, int b, int m, int n)
{
    if (a < 1 || a > m || b < 1 || b > n) throw_out_of_range("s_[a|b] expansion needs 1 <= a <= m, 1 <= b <= n");
    const SchurVector lhs = hook_schur(a, b) * hook_schur(m, n);
    SchurVector rhs;
    for (int k = std::max(1, a + b - n); k <= a; ++k) {
        SchurVector term = hook_schur(m, n, 0, a + b - k) * hook_schur(a - 1, b - 1, k - 1, 0);
        if ((a - k) % 2) term = -term;
        rhs += term;
    }
    for (int k = std::max(1, a + b - m); k <= b; ++k) {
        SchurVector term = hook_schur(m, n, a + b - k, 0) * hook_schur(a - 1, b - 1, 0, k - 1);
        if ((b - k) % 2) term = -term;
        rhs += term;
    }
    return lhs - rhs;
}

bool verify_sab(int a, int b, int m, int n)
{
    return sab_residual(a, b, m, n).is_zero();
}

}  // namespace qsym
