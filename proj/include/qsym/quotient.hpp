#pragma once

#include "qsym/partitions.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

/// GL(m|n) quotient of Lambda: every s_lam with lam containing the
/// rectangle ((n+1)^(m+1)) is sent to zero.
class QuotientContext {
public:
    QuotientContext(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    const Partition& kernel_rectangle() const noexcept { return rectangle_; }
    /// The rectangle (n^m) written [m|n] in hook notation.
    Partition frame() const { return rectangle(m_, n_); }

    bool kills(const Partition& lam) const;
    SchurVector reduce(const SchurVector& f) const;

    friend bool operator==(const QuotientContext&, const QuotientContext&) = default;

private:
    int m_;
    int n_;
    Partition rectangle_;
};

inline SchurVector reduce(const SchurVector& f, const QuotientContext& ctx) { return ctx.reduce(f); }

/// s_{[r|p]} shorthand helpers over hook_partition.
SchurVector hook_schur(int r, int p, int l = 0, int k = 0);

/// s_{[r|p]^l_k} s_{[r|p]} = s_{[r-1|p-1]^{l-1}_{k-1}} s_{[r+1|p+1]} + s_{[r|p]_k} s_{[r|p]^l}
/// exactly in Lambda; needs 1 <= l <= r, 1 <= k <= p.
bool verify_bilinear(int r, int p, int l, int k);
SchurVector bilinear_residual(int r, int p, int l, int k);

/// The same relation with r = m, p = n read in the quotient, where the
/// first right-hand term dies; needs 0 <= l <= m, 0 <= k <= n.
bool verify_bilinear_quotient(int l, int k, const QuotientContext& ctx);
SchurVector bilinear_quotient_residual(int l, int k, const QuotientContext& ctx);

/// Left minus right side of the alternating-sum lemma
///   sum_{i=r}^{min(k, r+m)} (-1)^i h_{k-i} s_{[m|n]^{i-r}_r}
///     = 0                                          if k >= n+r+1
///     = (-1)^r sum_i s_{<(k-i,i)|0>}               if k <= n+r
/// computed in Lambda. Needs 0 <= r <= n, r <= k <= m+n. The result is the
/// zero vector when the lemma holds.
SchurVector verify_sum_lemma(int m, int n, int r, int k);

/// s_{(n^m)}^2 = s_{(n^(m+1))} s_{(n^(m-1))} + s_{((n+1)^m)} s_{((n-1)^m)}.
bool verify_kirillov(int m, int n);
SchurVector kirillov_residual(int m, int n);

/// Expansion of s_{[a|b]} s_{[m|n]} into two alternating sums; needs
/// 1 <= a <= m, 1 <= b <= n.
bool verify_sab(int a, int b, int m, int n);
SchurVector sab_residual(int a, int b, int m, int n);

}  // namespace qsym
