#pragma once

#include "qsym/partitions.hpp"
#include "qsym/scalars.hpp"

#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace qsym {

/// Finite LaurentQ-linear combination of Schur functions s_lambda, i.e. an
/// element of Lambda tensored with Q[q, q^-1].
class SchurVector {
public:
    using Terms = std::map<Partition, LaurentQ, ReverseLex>;

    SchurVector() = default;
    static SchurVector basis(const Partition& lam, const LaurentQ& coeff = LaurentQ(1));
    static SchurVector unit() { return basis(Partition()); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    LaurentQ coefficient(const Partition& lam) const;
    int max_weight() const;

    void add_term(const Partition& lam, const LaurentQ& coeff);
    SchurVector& operator+=(const SchurVector& rhs);
    SchurVector& operator-=(const SchurVector& rhs);
    SchurVector& operator*=(const LaurentQ& scalar);
    SchurVector operator-() const;

    friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
    friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
    friend SchurVector operator*(SchurVector a, const LaurentQ& s) { return a *= s; }
    friend SchurVector operator*(const LaurentQ& s, SchurVector a) { return a *= s; }
    friend bool operator==(const SchurVector& a, const SchurVector& b) { return a.terms_ == b.terms_; }

    /// e.g. "(q + q^-1)*s(1,1) - q*s(2) + 1"; the empty partition prints as
    /// its bare coefficient.
    std::string to_string() const;

    template <typename Pred>
    SchurVector filtered(Pred keep) const
    {
        SchurVector r;
        for (const auto& [lam, c] : terms_)
            if (keep(lam)) r.terms_.emplace(lam, c);
        return r;
    }

private:
    Terms terms_;
};

SchurVector elementary(int k);  // s_(1^k)
SchurVector complete(int k);    // s_(k)

/// Product in Lambda via Littlewood-Richardson coefficients (cached).
SchurVector schur_multiply(const SchurVector& f, const SchurVector& g);
inline SchurVector operator*(const SchurVector& f, const SchurVector& g) { return schur_multiply(f, g); }

/// f * e_k by adding vertical strips.
SchurVector pieri_column(const SchurVector& f, int k);
/// f * h_k by adding horizontal strips.
SchurVector pieri_row(const SchurVector& f, int k);

/// Multiset of positive h-indices, kept sorted in descending order.
using HMonomial = std::vector<int>;
using HExpansion = std::map<HMonomial, LaurentQ>;

/// s_lam = det(h_{lam_i - i + j}) expanded into products of h's.
HExpansion jacobi_trudi_h(const Partition& lam);

/// Schur expansion of h_{a1} h_{a2} ... (zero entries are h_0 = 1).
SchurVector from_h_monomial(std::span<const int> exponents);

/// sum_{r=0}^k (-1)^r e_r h_{k-r} - delta(k); identically zero.
SchurVector wronski_residual(int k);

// -- monomial oracle -------------------------------------------------------
// Evaluates Schur functions in finitely many variables straight from the
// semistandard-tableau definition. Shares no code with the LR machinery.

using Exponents = std::vector<int>;
using MonomialExpansion = std::map<Exponents, LaurentQ>;

MonomialExpansion monomial_expand(const SchurVector& f, int nvars);
MonomialExpansion multiply(const MonomialExpansion& a, const MonomialExpansion& b);

/// Coefficient extraction without full expansion. Counts of semistandard
/// tableaux with a fixed content are memoized per instance.
class MonomialOracle {
public:
    /// Number of SSYT of shape `shape` whose content is `content`.
    std::int64_t tableau_count(const Partition& shape, std::span<const int> content);
    /// Coefficient of x^exponents in f(x_1, ..., x_N), N = exponents.size().
    LaurentQ coefficient(const SchurVector& f, std::span<const int> exponents);

private:
    std::mutex mutex_;
    std::map<std::pair<Partition, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace qsym
