#include "qsym/qsym.h"

#include <doctest.h>

#include <string>

namespace {

std::string take(char* s)
{
    std::string out(s);
    qsym_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("Schur handles")
{
    qsym_schur* a = nullptr;
    qsym_schur* b = nullptr;
    qsym_schur* p = nullptr;
    REQUIRE(qsym_schur_from_partition("1", &a) == QSYM_OK);
    REQUIRE(qsym_schur_from_partition("[1]", &b) == QSYM_OK);
    int equal = 0;
    REQUIRE(qsym_schur_equal(a, b, &equal) == QSYM_OK);
    CHECK(equal == 1);
    REQUIRE(qsym_schur_multiply(a, b, &p) == QSYM_OK);
    size_t count = 0;
    REQUIRE(qsym_schur_term_count(p, &count) == QSYM_OK);
    CHECK(count == 2);
    char* text = nullptr;
    REQUIRE(qsym_schur_render(p, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text) == "s(2) + s(1,1)");
    REQUIRE(qsym_schur_render(p, QSYM_FORMAT_JSON, &text) == QSYM_OK);
    CHECK(take(text) == R"({"schema":"1","terms":[{"partition":[2],"coeff":"1"},{"partition":[1,1],"coeff":"1"}]})");
    qsym_schur_free(a);
    qsym_schur_free(b);
    qsym_schur_free(p);
    qsym_schur_free(nullptr);
}

TEST_CASE("error codes and messages")
{
    qsym_schur* a = nullptr;
    CHECK(qsym_schur_from_partition("1,2", &a) == QSYM_ERR_PARSE);
    CHECK(a == nullptr);
    CHECK(std::string(qsym_last_error()).find("malformed partition") != std::string::npos);
    CHECK(qsym_schur_from_partition(nullptr, &a) == QSYM_ERR_NULL_ARGUMENT);
    char* text = nullptr;
    CHECK(qsym_ch_render(0, 0, QSYM_CH_STANDARD, 0, QSYM_FORMAT_TEXT, &text) == QSYM_ERR_OUT_OF_RANGE);
    CHECK(std::string(qsym_last_error()).find("index out of range") == 0);
    CHECK(qsym_ch_render(1, 1, static_cast<qsym_ch_form>(9), 0, QSYM_FORMAT_TEXT, &text) == QSYM_ERR_INVALID_ARGUMENT);
    qsym_report* r = nullptr;
    CHECK(qsym_verify("nosuch", nullptr, 0, 0, 100, &r) == QSYM_ERR_UNKNOWN_CHECK);
    const char* degenerate[] = {"0", "1"};
    CHECK(qsym_verify("appendix-a2", degenerate, 2, 0, 100, &r) == QSYM_ERR_DEGENERATE);
    CHECK(qsym_verify("appendix-a2", nullptr, 0, 0, 0, &r) == QSYM_ERR_INVALID_ARGUMENT);
    CHECK(qsym_verify("kirillov", nullptr, 2, 0, 100, &r) == QSYM_ERR_NULL_ARGUMENT);
    CHECK(r == nullptr);
    int64_t c = 0;
    REQUIRE(qsym_lr_coefficient("1", "1", "2", &c) == QSYM_OK);
    CHECK(std::string(qsym_last_error()).empty());
}

TEST_CASE("LR coefficient")
{
    int64_t c = -1;
    REQUIRE(qsym_lr_coefficient("2,1", "2,1", "3,2,1", &c) == QSYM_OK);
    CHECK(c == 2);
    REQUIRE(qsym_lr_coefficient("2,1", "1,1", "4", &c) == QSYM_OK);
    CHECK(c == 0);
}

TEST_CASE("parameterization and identity listings")
{
    char* text = nullptr;
    REQUIRE(qsym_susy_eval("1", 1, 1, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text) == "q^-1 * mu1 - q * nu1");
    REQUIRE(qsym_susy_eval("2,2", 1, 1, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text) == "0");
    CHECK(qsym_susy_eval("1", -1, 1, QSYM_FORMAT_TEXT, &text) == QSYM_ERR_OUT_OF_RANGE);
    REQUIRE(qsym_ch_render(1, 1, QSYM_CH_STANDARD, 0, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text) == "M^2: s(1)\nM^1: -q*s(2) + q^-1*s(1,1)\nM^0: -s(2,1)");
    REQUIRE(qsym_ch_render(1, 0, QSYM_CH_STANDARD, 0, QSYM_FORMAT_JSON, &text) == QSYM_OK);
    CHECK(take(text) ==
          R"({"schema":"1","m":1,"n":0,"form":"standard","param":false,"identity":[{"power":1,"basis":"power","coeff":{"terms":[{"partition":[],"coeff":"1"}]}},{"power":0,"basis":"power","coeff":{"terms":[{"partition":[1],"coeff":"-q"}]}}]})");
    REQUIRE(qsym_ch_render(1, 1, QSYM_CH_FACTORIZED, 0, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text) == "factor 1:\n  M^1: s(1)\n  M^0: -q*s(2)\nfactor 2:\n  M^1: s(1)\n  M^0: q^-1*s(1,1)");
    REQUIRE(qsym_ch_render(1, 1, QSYM_CH_SYMMETRIC, 1, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text).find("M^(sym 2): q^-1 * mu1 - q * nu1") == 0);
}

TEST_CASE("verification reports")
{
    CHECK(qsym_check_count() == 21);
    CHECK(std::string(qsym_check_name(0)) == "bil");
    CHECK(qsym_check_name(qsym_check_count()) == nullptr);
    qsym_report* r = nullptr;
    const char* params[] = {"2", "2"};
    REQUIRE(qsym_verify("kirillov", params, 2, 0, 100, &r) == QSYM_OK);
    CHECK(qsym_report_holds(r) == 1);
    char* text = nullptr;
    REQUIRE(qsym_report_render(r, QSYM_FORMAT_TEXT, &text) == QSYM_OK);
    CHECK(take(text) == "OK kirillov m=2 n=2");
    qsym_report_free(r);
    CHECK(qsym_report_holds(nullptr) == 0);
}

TEST_CASE("version")
{
    CHECK(std::string(qsym_version()) == "1.0.0");
}
