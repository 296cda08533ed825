#include "qsym/error.hpp"
#include "qsym/partitions.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace qsym;

namespace {

std::vector<Partition> partitions_up_to(int weight)
{
    std::vector<Partition> out;
    for (int w = 0; w <= weight; ++w)
        for (auto& p : partitions_of(w)) out.push_back(p);
    return out;
}

Rational binomial(int n, int k)
{
    Rational out(1);
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("partition construction and text forms")
{
    CHECK(Partition({3, 2, 0}).parts() == std::vector<int>{3, 2});
    CHECK(Partition({3, 2, 1}).to_string() == "3,2,1");
    CHECK(Partition().to_string() == "[]");
    CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
    CHECK(Partition::parse("[3,2,1]") == Partition({3, 2, 1}));
    CHECK(Partition::parse("(2,2)") == Partition({2, 2}));
    CHECK(Partition::parse("[]").empty());
    CHECK(Partition::parse("").empty());
    CHECK(Partition({4, 1}).weight() == 5);
    CHECK(Partition({4, 1})[5] == 0);
    for (const char* bad : {"2,3", "1,-1", "a", "1,,2", "[1,2"}) {
        try {
            (void)Partition::parse(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse);
        }
    }
}

TEST_CASE("partitions_of counts")
{
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
    std::mt19937 rng(1);
    for (int t = 0; t < 500; ++t) {
        const Partition lam = qsym::test::random_partition(rng, 12);
        CHECK(conjugate(conjugate(lam)) == lam);
        CHECK(conjugate(lam).weight() == lam.weight());
    }
}

TEST_CASE("containment and strips")
{
    CHECK(contains(Partition({3, 2}), Partition({2, 2})));
    CHECK_FALSE(contains(Partition({3, 2}), Partition({1, 1, 1})));
    CHECK(contains(Partition({4, 1}), Partition({4, 1})));
    CHECK(is_vertical_strip(Partition({2, 1, 1}), Partition({1, 1})));
    CHECK_FALSE(is_vertical_strip(Partition({3, 1}), Partition({1, 1})));
    CHECK(is_vertical_strip(Partition({3, 1}), Partition({3, 1})));
    CHECK(is_horizontal_strip(Partition({3, 1}), Partition({1})));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
}

TEST_CASE("strip enumeration matches the predicates")
{
    for (const auto& inner : partitions_up_to(4))
        for (int k = 0; k <= 3; ++k) {
            const auto vertical = add_vertical_strip(inner, k);
            const auto horizontal = add_horizontal_strip(inner, k);
            std::size_t v_count = 0;
            std::size_t h_count = 0;
            for (const auto& outer : partitions_of(inner.weight() + k)) {
                if (contains(outer, inner) && is_vertical_strip(outer, inner)) ++v_count;
                if (contains(outer, inner) && is_horizontal_strip(outer, inner)) ++h_count;
            }
            CHECK(vertical.size() == v_count);
            CHECK(horizontal.size() == h_count);
            for (const auto& outer : vertical) CHECK(is_vertical_strip(outer, inner));
            for (const auto& outer : horizontal) CHECK(is_horizontal_strip(outer, inner));
        }
}

TEST_CASE("hook and frame diagrams")
{
    CHECK(hook_partition(1, 1, 1, 1) == Partition({2, 1}));
    CHECK(hook_partition(2, 3, 0, 2) == Partition({3, 3, 2}));
    CHECK(hook_partition(3, 2, 0, 0) == rectangle(3, 2));
    CHECK(hook_partition(2, 2, 2, 2) == Partition({3, 3, 2}));
    CHECK_THROWS_AS(hook_partition(1, 1, 2, 0), Error);
    CHECK_THROWS_AS(hook_partition(1, 1, 0, 2), Error);
    try {
        (void)hook_partition(2, 2, -1, 0);
        FAIL("negative index accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::out_of_range);
        CHECK(std::string(e.what()).find("index out of range") == 0);
    }

    CHECK(frame_partition(1, 1, Partition({1}), Partition()) == Partition({1, 1}));
    CHECK(frame_partition(2, 2, Partition({2, 1}), Partition({1})) == Partition({3, 2, 2, 1}));
    CHECK(frame_partition(1, 1, Partition(), Partition({1})) == Partition({2}));
    try {
        (void)frame_partition(1, 1, Partition({2}), Partition());
        FAIL("oversized mu accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "diagram does not fit frame");
    }
    CHECK_THROWS_AS(frame_partition(1, 1, Partition(), Partition({1, 1})), Error);
}

TEST_CASE("LR coefficient examples")
{
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    CHECK(lr_coefficient(Partition({2, 1}), Partition({1, 1}), Partition({4})) == 0);
    CHECK(lr_coefficient(Partition(), Partition({2, 1}), Partition({2, 1})) == 1);
}

TEST_CASE("LR coefficients agree with alternant extraction")
{
    // Test-side oracle: signed Kostka sums over the symmetric group.
    const auto small = partitions_up_to(3);
    for (const auto& lam : small)
        for (const auto& mu : small)
            for (const auto& nu : partitions_of(lam.weight() + mu.weight()))
                CHECK(lr_coefficient(lam, mu, nu) == qsym::test::lr_by_alternants(lam, mu, nu));
}

TEST_CASE("LR symmetries for |lam|,|mu| <= 5")
{
    const auto all = partitions_up_to(5);
    for (const auto& lam : all)
        for (const auto& mu : all) {
            const auto expansion = lr_expand(lam, mu);
            const auto swapped = lr_expand(mu, lam);
            CHECK(expansion == swapped);
            for (const auto& [nu, c] : expansion) {
                CHECK(lr_coefficient(lam, mu, nu) == c);
                CHECK(lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu)) == c);
            }
        }
}

TEST_CASE("LR dimension count")
{
    const auto all = partitions_up_to(4);
    for (const auto& lam : all)
        for (const auto& mu : all) {
            Rational total(0);
            for (const auto& [nu, c] : lr_expand(lam, mu)) total += c * qsym::test::standard_tableaux(nu);
            const Rational expected = binomial(lam.weight() + mu.weight(), lam.weight()) *
                                      qsym::test::standard_tableaux(lam) * qsym::test::standard_tableaux(mu);
            CHECK(total == expected);
        }
}

TEST_CASE("LR with a column is the vertical strip rule")
{
    for (const auto& lam : partitions_up_to(5))
        for (int k = 0; k <= 4; ++k) {
            const Partition column(std::vector<int>(k, 1));
            for (const auto& nu : partitions_of(lam.weight() + k)) {
                const auto c = lr_coefficient(lam, column, nu);
                CHECK((c == 0 || c == 1));
                CHECK((c == 1) == (contains(nu, lam) && is_vertical_strip(nu, lam)));
            }
        }
}
