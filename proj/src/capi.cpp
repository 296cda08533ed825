#include "qsym/qsym.h"

#include "qsym/acceptance.hpp"
#include "qsym/chidentity.hpp"
#include "qsym/error.hpp"
#include "qsym/serialize.hpp"
#include "qsym/supersym.hpp"
#include "qsym/verify.hpp"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

struct qsym_schur {
    qsym::SchurVector value;
};

struct qsym_report {
    std::optional<qsym::Report> single;
    std::vector<qsym::CriterionResult> criteria;
    bool holds = true;
};

namespace {

thread_local std::string last_error;

qsym_status fail(qsym_status status, const std::string& message)
{
    last_error = message;
    return status;
}

qsym_status status_of(qsym::ErrorCode code)
{
    switch (code) {
    case qsym::ErrorCode::parse: return QSYM_ERR_PARSE;
    case qsym::ErrorCode::out_of_range: return QSYM_ERR_OUT_OF_RANGE;
    case qsym::ErrorCode::degenerate: return QSYM_ERR_DEGENERATE;
    case qsym::ErrorCode::arity_mismatch: return QSYM_ERR_ARITY;
    case qsym::ErrorCode::invalid_argument: return QSYM_ERR_INVALID_ARGUMENT;
    }
    return QSYM_ERR_INTERNAL;
}

template <typename Body>
qsym_status guarded(Body&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const qsym::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(QSYM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QSYM_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string render(const qsym::Json& j, const std::string& text, qsym_format format)
{
    return format == QSYM_FORMAT_JSON ? qsym::dump(j) : text;
}

const char* form_name(qsym_ch_form form)
{
    switch (form) {
    case QSYM_CH_STANDARD: return "standard";
    case QSYM_CH_FACTORIZED: return "factorized";
    case QSYM_CH_WEDGE: return "wedge";
    case QSYM_CH_SYMMETRIC: return "symmetric";
    }
    return "standard";
}

struct Listing {
    qsym::Json json;
    std::string text;
};

Listing listing(const qsym::PowVector& u, bool param)
{
    if (param) {
        const qsym::ParamPowVector p = qsym::evaluate(u);
        return {qsym::to_json(p), p.to_string()};
    }
    return {qsym::to_json(u), u.to_string()};
}

std::string indent(const std::string& text)
{
    std::string out = "  ";
    for (char c : text) {
        out += c;
        if (c == '\n') out += "  ";
    }
    return out;
}

}  // namespace

extern "C" {

const char* qsym_version(void)
{
    return "1.0.0";
}

const char* qsym_last_error(void)
{
    return last_error.c_str();
}

void qsym_string_free(char* s)
{
    delete[] s;
}

qsym_status qsym_schur_from_partition(const char* partition, qsym_schur** out)
{
    if (partition == nullptr || out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new qsym_schur{qsym::SchurVector::basis(qsym::Partition::parse(partition))};
        return QSYM_OK;
    });
}

qsym_status qsym_schur_multiply(const qsym_schur* a, const qsym_schur* b, qsym_schur** out)
{
    if (a == nullptr || b == nullptr || out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new qsym_schur{a->value * b->value};
        return QSYM_OK;
    });
}

qsym_status qsym_schur_equal(const qsym_schur* a, const qsym_schur* b, int* equal)
{
    if (a == nullptr || b == nullptr || equal == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    *equal = a->value == b->value ? 1 : 0;
    return QSYM_OK;
}

qsym_status qsym_schur_term_count(const qsym_schur* f, size_t* count)
{
    if (f == nullptr || count == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    *count = f->value.size();
    return QSYM_OK;
}

qsym_status qsym_schur_render(const qsym_schur* f, qsym_format format, char** out)
{
    if (f == nullptr || out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        qsym::Json j{{"schema", qsym::kSchemaVersion}};
        j.update(qsym::to_json(f->value));
        *out = copy_string(render(j, f->value.to_string(), format));
        return QSYM_OK;
    });
}

void qsym_schur_free(qsym_schur* f)
{
    delete f;
}

qsym_status qsym_lr_coefficient(const char* lam, const char* mu, const char* nu, int64_t* out)
{
    if (lam == nullptr || mu == nullptr || nu == nullptr || out == nullptr)
        return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        *out = qsym::lr_coefficient(qsym::Partition::parse(lam), qsym::Partition::parse(mu), qsym::Partition::parse(nu));
        return QSYM_OK;
    });
}

qsym_status qsym_susy_eval(const char* partition, int m, int n, qsym_format format, char** out)
{
    if (partition == nullptr || out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        if (m < 0 || n < 0) qsym::throw_out_of_range("m and n must be nonnegative");
        const qsym::MultiPoly p = qsym::eval_susy(qsym::SchurVector::basis(qsym::Partition::parse(partition)), m, n);
        qsym::Json j{{"schema", qsym::kSchemaVersion}, {"m", m}, {"n", n}};
        j["poly"] = qsym::to_json(p);
        *out = copy_string(render(j, p.to_string(), format));
        return QSYM_OK;
    });
}

qsym_status qsym_ch_render(int m, int n, qsym_ch_form form, int param, qsym_format format, char** out)
{
    if (out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        if (m < 0 || n < 0 || m + n < 1) qsym::throw_out_of_range("need m, n >= 0 and m + n >= 1");
        if (form < QSYM_CH_STANDARD || form > QSYM_CH_SYMMETRIC)
            return fail(QSYM_ERR_INVALID_ARGUMENT, "unknown identity form");
        qsym::Json j{{"schema", qsym::kSchemaVersion}, {"m", m}, {"n", n}, {"form", form_name(form)}, {"param", param != 0}};
        std::string text;
        if (form == QSYM_CH_FACTORIZED) {
            const auto [first, second] = qsym::ch_factors(m, n);
            const Listing a = listing(first, param != 0);
            const Listing b = listing(second, param != 0);
            j["factors"] = qsym::Json::array({a.json, b.json});
            text = "factor 1:\n" + indent(a.text) + "\nfactor 2:\n" + indent(b.text);
        } else {
            qsym::PowVector u = form == QSYM_CH_STANDARD ? qsym::ch_standard(m, n)
                                : form == QSYM_CH_WEDGE  ? qsym::ch_wedge(m, n)
                                                         : qsym::ch_sym(m, n);
            const Listing l = listing(u, param != 0);
            j["identity"] = l.json;
            text = l.text;
        }
        *out = copy_string(render(j, text, format));
        return QSYM_OK;
    });
}

size_t qsym_check_count(void)
{
    return qsym::check_names().size();
}

const char* qsym_check_name(size_t index)
{
    const auto& names = qsym::check_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

qsym_status qsym_verify(const char* name, const char* const* params, size_t nparams, uint64_t seed, int trials,
                        qsym_report** out)
{
    if (name == nullptr || out == nullptr || (nparams > 0 && params == nullptr))
        return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    if (!qsym::is_check_name(name)) return fail(QSYM_ERR_UNKNOWN_CHECK, std::string("unknown check: ") + name);
    return guarded([&] {
        if (trials < 1) return fail(QSYM_ERR_INVALID_ARGUMENT, "trials must be positive");
        std::vector<std::string> args;
        for (size_t i = 0; i < nparams; ++i) {
            if (params[i] == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null parameter");
            args.emplace_back(params[i]);
        }
        auto* report = new qsym_report;
        report->single = qsym::run_check(name, args, {seed, trials});
        report->holds = report->single->holds;
        *out = report;
        return QSYM_OK;
    });
}

qsym_status qsym_verify_all(uint64_t seed, int trials, qsym_report** out)
{
    if (out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        if (trials < 1) return fail(QSYM_ERR_INVALID_ARGUMENT, "trials must be positive");
        auto* report = new qsym_report;
        report->criteria = qsym::run_acceptance({seed, trials});
        for (const auto& c : report->criteria) report->holds = report->holds && c.holds;
        *out = report;
        return QSYM_OK;
    });
}

int qsym_report_holds(const qsym_report* report)
{
    return report != nullptr && report->holds ? 1 : 0;
}

qsym_status qsym_report_render(const qsym_report* report, qsym_format format, char** out)
{
    if (report == nullptr || out == nullptr) return fail(QSYM_ERR_NULL_ARGUMENT, "null argument");
    return guarded([&] {
        if (report->single)
            *out = copy_string(render(qsym::render_json(*report->single), qsym::render_text(*report->single), format));
        else
            *out = copy_string(render(qsym::render_acceptance_json(report->criteria),
                                      qsym::render_acceptance_text(report->criteria), format));
        return QSYM_OK;
    });
}

void qsym_report_free(qsym_report* report)
{
    delete report;
}

}  // extern "C"
