#include "qsym/chidentity.hpp"
#include "qsym/error.hpp"
#include "qsym/supersym.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace qsym;

namespace {

SchurVector s(std::initializer_list<int> parts, const LaurentQ& c = LaurentQ(1))
{
    return SchurVector::basis(Partition(parts), c);
}

LaurentQ q(int e)
{
    return LaurentQ::q_power(e);
}

PowVector pow_of(PowBasis basis, const QuotientContext& ctx, std::initializer_list<std::pair<int, SchurVector>> terms)
{
    PowVector u(basis, ctx);
    for (const auto& [k, c] : terms) u.add_term(k, c);
    return u;
}

PowVector random_pow(std::mt19937& rng, PowBasis basis, const QuotientContext& ctx, int max_weight)
{
    std::uniform_int_distribution<int> degree(0, 3);
    PowVector u(basis, ctx);
    const int top = degree(rng);
    for (int k = 0; k <= top; ++k) u.add_term(k, qsym::test::random_schur_vector(rng, max_weight, 2));
    return u;
}

const std::vector<std::pair<int, int>> kSmall = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

}  // namespace

TEST_CASE("standard identity instances")
{
    const QuotientContext c10(1, 0);
    CHECK(ch_standard(1, 0) == pow_of(PowBasis::power, c10, {{1, SchurVector::unit()}, {0, s({1}, -q(1))}}));
    const QuotientContext c11(1, 1);
    CHECK(ch_standard(1, 1) ==
          pow_of(PowBasis::power, c11, {{2, s({1})}, {1, s({1, 1}, q(-1)) - s({2}, q(1))}, {0, -s({2, 1})}}));
    const QuotientContext c01(0, 1);
    CHECK(ch_standard(0, 1) == pow_of(PowBasis::power, c01, {{1, SchurVector::unit()}, {0, s({1}, q(-1))}}));
    CHECK(ch_standard(1, 1).to_string() == "M^2: s(1)\nM^1: -q*s(2) + q^-1*s(1,1)\nM^0: -s(2,1)");
    CHECK_THROWS_AS(ch_standard(0, 0), Error);
}

TEST_CASE("extreme coefficients of the standard identity")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0) continue;
            const PowVector ch = ch_standard(m, n);
            CHECK(ch.coefficient(m + n) == hook_schur(m, n));
            if (m * n == 0) CHECK(ch.coefficient(m + n) == SchurVector::unit());
            const LaurentQ sign = (m % 2 ? -q(m - n) : q(m - n));
            CHECK(ch.coefficient(0) == QuotientContext(m, n).reduce(hook_schur(m, n, m, n) * sign));
        }
}

TEST_CASE("factors")
{
    const QuotientContext c11(1, 1);
    auto [a, b] = ch_factors(1, 1);
    CHECK(a == pow_of(PowBasis::power, c11, {{1, s({1})}, {0, s({2}, -q(1))}}));
    CHECK(b == pow_of(PowBasis::power, c11, {{1, s({1})}, {0, s({1, 1}, q(-1))}}));
    auto [a10, b10] = ch_factors(1, 0);
    const QuotientContext c10(1, 0);
    CHECK(a10 == pow_of(PowBasis::power, c10, {{1, SchurVector::unit()}, {0, s({1}, -q(1))}}));
    CHECK(b10 == pow_of(PowBasis::power, c10, {{0, SchurVector::unit()}}));
    auto [a21, b21] = ch_factors(2, 1);
    CHECK(a21.terms().size() == 3);
    CHECK(a21.coefficient(2) == s({1, 1}));
    CHECK(a21.coefficient(1) == s({2, 1}, -q(1)));
    CHECK(a21.coefficient(0) == s({2, 2}, q(2)));
}

TEST_CASE("factorization")
{
    for (const auto& [m, n] : kSmall) CHECK(verify_factorization(m, n).is_zero());
    // The product reproduces the identity only up to the factor s_[m|n].
    auto [a, b] = ch_factors(1, 1);
    CHECK_FALSE(a * b == ch_standard(1, 1).scaled(SchurVector::unit()));
    CHECK_THROWS_AS(verify_factorization(0, 1), Error);
}

TEST_CASE("d and f coefficients")
{
    CHECK(dk_coeff(1, 1, 0) == s({1}));
    CHECK(dk_coeff(1, 1, 1) == s({1, 1}, qnum(2)));
    CHECK(dk_coeff(1, 1, 2) == s({1, 1, 1}));
    CHECK(fk_coeff(1, 1, 0) == s({1}));
    CHECK(fk_coeff(1, 1, 1) == s({2}, -qnum(2)));
    CHECK(fk_coeff(1, 1, 2) == s({3}));
    try {
        (void)dk_coeff(1, 1, 3);
        FAIL("k out of range accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::out_of_range);
    }
    CHECK_THROWS_AS(fk_coeff(1, 2, 3), Error);
    CHECK_THROWS_AS(dk_coeff(1, 1, -1), Error);
}

TEST_CASE("power basis conversions")
{
    const QuotientContext ctx(2, 2);
    const PowVector wedge1 = pow_of(PowBasis::wedge, ctx, {{1, SchurVector::unit()}});
    CHECK(basis_convert(wedge1, PowBasis::power) ==
          pow_of(PowBasis::power, ctx, {{1, SchurVector::unit()}, {0, s({1}, -q(1))}}));
    const PowVector sym1 = pow_of(PowBasis::sym, ctx, {{1, SchurVector::unit()}});
    CHECK(basis_convert(sym1, PowBasis::power) ==
          pow_of(PowBasis::power, ctx, {{1, SchurVector::unit()}, {0, s({1}, q(-1))}}));
    const PowVector m2 = pow_of(PowBasis::power, ctx, {{2, SchurVector::unit()}});
    CHECK(basis_convert(basis_convert(m2, PowBasis::wedge), PowBasis::power) == m2);

    std::mt19937 rng(12);
    for (int t = 0; t < 50; ++t) {
        const auto [m, n] = kSmall[t % kSmall.size()];
        const QuotientContext c(m, n);
        const PowVector u = random_pow(rng, PowBasis::power, c, 4);
        CHECK(basis_convert(basis_convert(u, PowBasis::wedge), PowBasis::power) == u);
        CHECK(basis_convert(basis_convert(u, PowBasis::sym), PowBasis::power) == u);
        const PowVector w = random_pow(rng, PowBasis::wedge, c, 4);
        CHECK(basis_convert(basis_convert(w, PowBasis::power), PowBasis::wedge) == w);
        CHECK(basis_convert(basis_convert(w, PowBasis::sym), PowBasis::wedge) == w);
    }
}

TEST_CASE("star product is commutative and associative")
{
    std::mt19937 rng(13);
    for (int t = 0; t < 50; ++t) {
        const auto [m, n] = kSmall[t % kSmall.size()];
        const QuotientContext c(m, n);
        const PowVector a = random_pow(rng, PowBasis::power, c, 4);
        const PowVector b = random_pow(rng, PowBasis::power, c, 4);
        const PowVector d = random_pow(rng, PowBasis::power, c, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * d == a * (b * d));
    }
    const QuotientContext c(1, 1);
    CHECK_THROWS_AS(pow_of(PowBasis::wedge, c, {{1, s({1})}}) * pow_of(PowBasis::wedge, c, {{1, s({1})}}), Error);
    CHECK_THROWS_AS(pow_of(PowBasis::power, c, {{1, s({1})}}) + pow_of(PowBasis::power, QuotientContext(2, 1), {{1, s({1})}}),
                    Error);
}

TEST_CASE("wedge and symmetric forms")
{
    const QuotientContext c11(1, 1);
    CHECK(ch_wedge(1, 1) == pow_of(PowBasis::wedge, c11, {{2, s({1})}, {1, s({1, 1}, qnum(2))}, {0, s({1, 1, 1})}}));
    CHECK(ch_sym(1, 1) == pow_of(PowBasis::sym, c11, {{2, s({1})}, {1, s({2}, -qnum(2))}, {0, s({3})}}));
    const QuotientContext c10(1, 0);
    CHECK(ch_wedge(1, 0) == pow_of(PowBasis::wedge, c10, {{1, SchurVector::unit()}}));
    CHECK(basis_convert(ch_wedge(1, 0), PowBasis::power) == ch_standard(1, 0));
    for (const auto& [m, n] : kSmall) {
        CHECK(basis_convert(ch_wedge(m, n), PowBasis::power) == ch_standard(m, n));
        CHECK(basis_convert(ch_sym(m, n), PowBasis::power) == ch_standard(m, n));
    }
}

TEST_CASE("d_k and f_k under the parameterization")
{
    // m = n = 1, k = 1 by hand: 2_q s(1,1) -> 2_q (q^2 nu^2 - mu nu), and
    // -(1 + q^2) nu (q^-1 mu - q nu) is the same polynomial.
    const MultiPoly mu = MultiPoly::mu(1, 1, 1);
    const MultiPoly nu = MultiPoly::nu(1, 1, 1);
    auto k = [](const LaurentQ& v) { return MultiPoly::constant(1, 1, v); };
    const MultiPoly lhs = eval_susy(dk_coeff(1, 1, 1), 1, 1);
    CHECK(lhs == k(qnum(2)) * (k(q(2)) * nu * nu - mu * nu));
    CHECK(lhs == -(k(LaurentQ(1) + q(2)) * nu * (k(q(-1)) * mu - k(q(1)) * nu)));
    for (const auto& [m, n] : kSmall) {
        for (int kk = 0; kk <= std::min(2 * n, m + n); ++kk) CHECK(verify_dkd0(m, n, kk));
        for (int kk = 0; kk <= std::min(2 * m, m + n); ++kk) CHECK(verify_fkf0(m, n, kk));
    }
    CHECK_THROWS_AS(verify_dkd0(1, 1, 3), Error);
}

TEST_CASE("complete factorization")
{
    for (const auto& [m, n] : kSmall) CHECK(parametric_ch_residual(m, n).is_zero());
    const ParamPowVector ev = evaluate(ch_standard(1, 1));
    CHECK(ev.coefficient(2) == eval_susy(SchurVector::basis(Partition({1})), 1, 1));
    CHECK_THROWS_AS(parametric_ch_residual(1, 0), Error);
}
