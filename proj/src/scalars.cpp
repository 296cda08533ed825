#include "qsym/scalars.hpp"

#include "qsym/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qsym {

LaurentQ::LaurentQ(long constant)
{
    if (constant != 0) terms_.emplace(0, Rational(constant));
}

LaurentQ::LaurentQ(const Rational& constant)
{
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentQ LaurentQ::monomial(const Rational& coeff, int exponent)
{
    LaurentQ r;
    if (coeff != 0) r.terms_.emplace(exponent, coeff);
    return r;
}

Rational LaurentQ::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentQ::min_exponent() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentQ::max_exponent() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void LaurentQ::add_term(int exponent, const Rational& coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentQ& LaurentQ::operator*=(const Rational& rhs)
{
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

LaurentQ LaurentQ::operator-() const
{
    LaurentQ r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentQ operator*(const LaurentQ& lhs, const LaurentQ& rhs)
{
    LaurentQ r;
    if (lhs.is_zero() || rhs.is_zero()) return r;
    if (lhs.terms_.size() == 1 && lhs.terms_.begin()->first == 0 && lhs.terms_.begin()->second == 1) return rhs;
    if (rhs.terms_.size() == 1 && rhs.terms_.begin()->first == 0 && rhs.terms_.begin()->second == 1) return lhs;
    Rational prod;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            prod = ca * cb;
            r.add_term(ea + eb, prod);
        }
    }
    return r;
}

std::string LaurentQ::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Rational c = it->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool unit = (c == 1);
        if (e == 0) {
            out += c.get_str();
            continue;
        }
        if (!unit) out += c.get_str() + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

std::string normalize_minus(std::string_view text)
{
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s += text[i];
        }
    }
    return s;
}

[[noreturn]] void parse_fail(std::string_view text)
{
    throw Error(ErrorCode::parse, "malformed Laurent polynomial '" + std::string(text) + "'");
}

}  // namespace

LaurentQ LaurentQ::parse(std::string_view text)
{
    const std::string s = normalize_minus(text);
    if (s.empty()) parse_fail(text);
    LaurentQ result;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            parse_fail(text);
        }
        first = false;
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            // a '-' right after '^' belongs to the exponent
            ++end;
            if (end < s.size() && s[end] == '-' && s[end - 1] == '^') ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty()) parse_fail(text);

        Rational coeff(1);
        int exponent = 0;
        const auto qpos = term.find('q');
        std::string coeff_part = qpos == std::string::npos ? term : term.substr(0, qpos);
        if (qpos != std::string::npos) {
            if (!coeff_part.empty()) {
                if (coeff_part.back() != '*') parse_fail(text);
                coeff_part.pop_back();
                if (coeff_part.empty()) parse_fail(text);
            }
            std::string rest = term.substr(qpos + 1);
            if (rest.empty()) {
                exponent = 1;
            } else {
                if (rest[0] != '^' || rest.size() < 2) parse_fail(text);
                try {
                    std::size_t used = 0;
                    exponent = std::stoi(rest.substr(1), &used);
                    if (used != rest.size() - 1) parse_fail(text);
                } catch (const std::logic_error&) {
                    parse_fail(text);
                }
            }
        }
        if (!coeff_part.empty()) {
            if (!std::all_of(coeff_part.begin(), coeff_part.end(),
                             [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; }))
                parse_fail(text);
            try {
                coeff = Rational(coeff_part);
                coeff.canonicalize();
            } catch (const std::invalid_argument&) {
                parse_fail(text);
            }
            if (coeff.get_den() == 0) parse_fail(text);
        }
        result.add_term(exponent, sign * coeff);
    }
    return result;
}

RatFuncQ::RatFuncQ(LaurentQ numerator) : num_(std::move(numerator)), den_(1) {}

RatFuncQ::RatFuncQ(LaurentQ numerator, LaurentQ denominator) : num_(std::move(numerator)), den_(std::move(denominator))
{
    if (den_.is_zero()) throw Error(ErrorCode::degenerate, "zero denominator in rational function");
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b)
{
    if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b)
{
    if (a.den_ == b.den_) return RatFuncQ(a.num_ - b.num_, a.den_);
    return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b)
{
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b)
{
    if (b.num_.is_zero()) throw Error(ErrorCode::degenerate, "division by zero rational function");
    return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFuncQ& a, const RatFuncQ& b)
{
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFuncQ::to_string() const
{
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentQ qnum(int k)
{
    if (k < 0) return -qnum(-k);
    LaurentQ r;
    for (int j = 0; j < k; ++j) r += LaurentQ::q_power(k - 1 - 2 * j);
    return r;
}

std::string_view to_string(AppendixIdentity which)
{
    switch (which) {
        case AppendixIdentity::a1: return "A1";
        case AppendixIdentity::a2: return "A2";
        case AppendixIdentity::a3: return "A3";
        case AppendixIdentity::a7: return "A7";
    }
    return "?";
}

namespace {

void check_b_set(std::span<const int> b)
{
    if (b.empty()) throw Error(ErrorCode::degenerate, "degenerate b-set: empty");
    std::set<int> seen;
    for (int v : b) {
        if (v == 0) throw Error(ErrorCode::degenerate, "degenerate b-set: zero entry");
        if (!seen.insert(v).second) throw Error(ErrorCode::degenerate, "degenerate b-set: repeated entry " + std::to_string(v));
    }
}

// prod_{i != j} (b_i - b_j + 1)_q / (b_i - b_j)_q
RatFuncQ cross_product(std::span<const int> b, std::size_t j)
{
    LaurentQ num(1), den(1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i == j) continue;
        num *= qnum(b[i] - b[j] + 1);
        den *= qnum(b[i] - b[j]);
    }
    return RatFuncQ(std::move(num), std::move(den));
}

RatFuncQ shifted_ratio_product(std::span<const int> b)
{
    LaurentQ num(1), den(1);
    for (int v : b) {
        num *= qnum(v + 1);
        den *= qnum(v);
    }
    return RatFuncQ(std::move(num), std::move(den));
}

}  // namespace

std::pair<RatFuncQ, RatFuncQ> appendix_sides(AppendixIdentity which, std::span<const int> b, int x)
{
    check_b_set(b);
    const int k = static_cast<int>(b.size());
    RatFuncQ lhs, rhs;
    switch (which) {
        case AppendixIdentity::a1:
            lhs = RatFuncQ(LaurentQ::q_power(k)) - shifted_ratio_product(b);
            for (std::size_t j = 0; j < b.size(); ++j)
                rhs = rhs - RatFuncQ(LaurentQ::q_power(-b[j]), qnum(b[j])) * cross_product(b, j);
            break;
        case AppendixIdentity::a2:
            lhs = RatFuncQ(qnum(k));
            for (std::size_t j = 0; j < b.size(); ++j) rhs = rhs + cross_product(b, j);
            break;
        case AppendixIdentity::a3:
            lhs = shifted_ratio_product(b);
            for (std::size_t j = 0; j < b.size(); ++j)
                rhs = rhs + RatFuncQ(qnum(b[j] + k), qnum(k) * qnum(b[j])) * cross_product(b, j);
            break;
        case AppendixIdentity::a7:
            lhs = RatFuncQ(qnum(k + x)) - RatFuncQ(qnum(x)) * shifted_ratio_product(b);
            for (std::size_t j = 0; j < b.size(); ++j)
                rhs = rhs + RatFuncQ(qnum(b[j] - x), qnum(b[j])) * cross_product(b, j);
            break;
    }
    return {std::move(lhs), std::move(rhs)};
}

bool verify_appendix(AppendixIdentity which, std::span<const int> b, int x)
{
    const auto [lhs, rhs] = appendix_sides(which, b, x);
    return lhs == rhs;
}

}  // namespace qsym
