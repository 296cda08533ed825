#include "qsym/multipoly.hpp"

#include "qsym/error.hpp"

#include <algorithm>

namespace qsym {

MultiPoly::MultiPoly(int m, int n) : m_(m), n_(n)
{
    if (m < 0 || n < 0) throw_out_of_range("polynomial arity must be nonnegative");
}

MultiPoly MultiPoly::constant(int m, int n, const LaurentQ& value)
{
    MultiPoly p(m, n);
    for (const auto& [e, c] : value.terms()) {
        Exponents exps(1 + m + n, 0);
        exps[0] = e;
        p.terms_.emplace(std::move(exps), c);
    }
    return p;
}

MultiPoly MultiPoly::mu(int m, int n, int i)
{
    if (i < 1 || i > m) throw_out_of_range("mu index " + std::to_string(i));
    Exponents exps(1 + m + n, 0);
    exps[i] = 1;
    return monomial(m, n, Rational(1), std::move(exps));
}

MultiPoly MultiPoly::nu(int m, int n, int j)
{
    if (j < 1 || j > n) throw_out_of_range("nu index " + std::to_string(j));
    Exponents exps(1 + m + n, 0);
    exps[m + j] = 1;
    return monomial(m, n, Rational(1), std::move(exps));
}

MultiPoly MultiPoly::monomial(int m, int n, const Rational& coeff, Exponents exps)
{
    MultiPoly p(m, n);
    if (static_cast<int>(exps.size()) != 1 + m + n) throw Error(ErrorCode::arity_mismatch, "variable arity mismatch");
    p.add_term(exps, coeff);
    return p;
}

void MultiPoly::require_same_arity(const MultiPoly& other) const
{
    if (m_ != other.m_ || n_ != other.n_) throw Error(ErrorCode::arity_mismatch, "variable arity mismatch");
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    require_same_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    require_same_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0) throw_out_of_range("negative polynomial power");
    MultiPoly r = constant(m_, n_, LaurentQ(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.require_same_arity(b);
    MultiPoly r(a.m_, a.n_);
    const std::size_t width = 1 + a.m_ + a.n_;
    MultiPoly::Exponents e(width);
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
            prod = ca * cb;
            r.add_term(e, prod);
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    a.require_same_arity(b);
    return a.terms_ == b.terms_;
}

std::vector<std::string> MultiPoly::variable_names() const
{
    std::vector<std::string> names{"q"};
    for (int i = 1; i <= m_; ++i) names.push_back("mu" + std::to_string(i));
    for (int j = 1; j <= n_; ++j) names.push_back("nu" + std::to_string(j));
    return names;
}

std::vector<std::pair<MultiPoly::Exponents, Rational>> MultiPoly::ordered_terms() const
{
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    auto degree = [](const Exponents& e) {
        int d = 0;
        for (std::size_t i = 1; i < e.size(); ++i) d += e[i];
        return d;
    };
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        const int dx = degree(x.first), dy = degree(y.first);
        if (dx != dy) return dx > dy;
        for (std::size_t i = 1; i < x.first.size(); ++i)
            if (x.first[i] != y.first[i]) return x.first[i] > y.first[i];
        return x.first[0] > y.first[0];
    });
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    const auto names = variable_names();
    std::string out;
    bool first = true;
    for (const auto& [exps, coeff] : ordered_terms()) {
        Rational c = coeff;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            factors.push_back(exps[i] == 1 ? names[i] : names[i] + "^" + std::to_string(exps[i]));
        }
        if (c != 1 || factors.empty()) factors.insert(factors.begin(), c.get_str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += " * ";
            out += factors[i];
        }
    }
    return out;
}

PolyRatio::PolyRatio(MultiPoly numerator, MultiPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (num_.m() != den_.m() || num_.n() != den_.n()) throw Error(ErrorCode::arity_mismatch, "variable arity mismatch");
    if (den_.is_zero()) throw Error(ErrorCode::degenerate, "zero denominator in polynomial ratio");
}

bool operator==(const PolyRatio& a, const PolyRatio& b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string PolyRatio::to_string() const
{
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace qsym
