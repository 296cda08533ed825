#include "qsym/qsym.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string output = "text";
    std::vector<std::string> partitions;
    int m = 0;
    int n = 0;
    std::string form = "standard";
    bool param = false;
    std::string check;
    std::vector<std::string> params;
    bool all = false;
    std::uint64_t seed = 0;
    int trials = 100;
};

qsym_format format_of(const Options& o)
{
    return o.output == "json" ? QSYM_FORMAT_JSON : QSYM_FORMAT_TEXT;
}

int report_error(qsym_status status)
{
    std::cerr << "error: " << qsym_last_error() << '\n';
    return status == QSYM_ERR_INTERNAL ? kExitViolated : kExitUsage;
}

int emit(char* text)
{
    std::cout << text << '\n';
    qsym_string_free(text);
    return kExitOk;
}

int run_lr(const Options& o)
{
    qsym_schur* a = nullptr;
    qsym_schur* b = nullptr;
    qsym_schur* product = nullptr;
    char* text = nullptr;
    qsym_status st = qsym_schur_from_partition(o.partitions[0].c_str(), &a);
    if (st == QSYM_OK) st = qsym_schur_from_partition(o.partitions[1].c_str(), &b);
    if (st == QSYM_OK) st = qsym_schur_multiply(a, b, &product);
    if (st == QSYM_OK) st = qsym_schur_render(product, format_of(o), &text);
    qsym_schur_free(a);
    qsym_schur_free(b);
    qsym_schur_free(product);
    return st == QSYM_OK ? emit(text) : report_error(st);
}

int run_lr_coeff(const Options& o)
{
    int64_t c = 0;
    const qsym_status st = qsym_lr_coefficient(o.partitions[0].c_str(), o.partitions[1].c_str(), o.partitions[2].c_str(), &c);
    if (st != QSYM_OK) return report_error(st);
    if (format_of(o) == QSYM_FORMAT_JSON)
        std::cout << nlohmann::ordered_json{{"schema", "1"}, {"coefficient", c}}.dump() << '\n';
    else
        std::cout << c << '\n';
    return kExitOk;
}

int run_ch(const Options& o)
{
    static const std::map<std::string, qsym_ch_form> forms = {
        {"standard", QSYM_CH_STANDARD}, {"factorized", QSYM_CH_FACTORIZED}, {"wedge", QSYM_CH_WEDGE}, {"symmetric", QSYM_CH_SYMMETRIC}};
    char* text = nullptr;
    const qsym_status st = qsym_ch_render(o.m, o.n, forms.at(o.form), o.param ? 1 : 0, format_of(o), &text);
    return st == QSYM_OK ? emit(text) : report_error(st);
}

int run_susy_eval(const Options& o)
{
    char* text = nullptr;
    const qsym_status st = qsym_susy_eval(o.partitions[0].c_str(), o.m, o.n, format_of(o), &text);
    return st == QSYM_OK ? emit(text) : report_error(st);
}

int list_checks(const Options& o)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < qsym_check_count(); ++i) names.emplace_back(qsym_check_name(i));
    if (o.output == "json") {
        std::cout << nlohmann::ordered_json{{"schema", "1"}, {"checks", names}}.dump() << '\n';
    } else {
        for (const auto& name : names) std::cout << name << '\n';
    }
    return kExitOk;
}

int run_verify(const Options& o)
{
    if (o.all && !o.check.empty()) {
        std::cerr << "error: verify takes NAME or --all, not both\n";
        return kExitUsage;
    }
    if (!o.all && o.check.empty()) return list_checks(o);
    if (o.all && !o.params.empty()) {
        std::cerr << "error: --all takes no parameters\n";
        return kExitUsage;
    }
    qsym_report* report = nullptr;
    qsym_status st;
    if (o.all) {
        st = qsym_verify_all(o.seed, o.trials, &report);
    } else {
        std::vector<const char*> args;
        for (const auto& p : o.params) args.push_back(p.c_str());
        st = qsym_verify(o.check.c_str(), args.data(), args.size(), o.seed, o.trials, &report);
    }
    if (st != QSYM_OK) return report_error(st);
    char* text = nullptr;
    st = qsym_report_render(report, format_of(o), &text);
    const bool holds = qsym_report_holds(report) != 0;
    qsym_report_free(report);
    if (st != QSYM_OK) return report_error(st);
    emit(text);
    return holds ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schur functions, GL(m|n) quotients and quantum Cayley-Hamilton identities"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* lr = app.add_subcommand("lr", "Expand s_lam * s_mu in the Schur basis");
    o.partitions.resize(3);
    lr->add_option("lam", o.partitions[0], "Partition, e.g. 2,1 or []")->required();
    lr->add_option("mu", o.partitions[1], "Partition")->required();

    auto* lr_coeff = app.add_subcommand("lr-coeff", "Littlewood-Richardson coefficient c^nu_{lam,mu}");
    lr_coeff->add_option("lam", o.partitions[0], "Partition")->required();
    lr_coeff->add_option("mu", o.partitions[1], "Partition")->required();
    lr_coeff->add_option("nu", o.partitions[2], "Partition")->required();

    auto* ch = app.add_subcommand("ch", "List the Cayley-Hamilton identity for GL(m|n)");
    ch->add_option("m", o.m, "Even rank")->required();
    ch->add_option("n", o.n, "Odd rank")->required();
    ch->add_option("--form", o.form, "Identity form")
        ->check(CLI::IsMember({"standard", "factorized", "wedge", "symmetric"}))
        ->capture_default_str();
    ch->add_flag("--param", o.param, "Apply the parameterization map to the coefficients");

    auto* susy = app.add_subcommand("susy-eval", "Image of s_lam in mu_1..mu_m, nu_1..nu_n");
    susy->add_option("lam", o.partitions[0], "Partition")->required();
    susy->add_option("--m", o.m, "Number of even eigenvalues")->required();
    susy->add_option("--n", o.n, "Number of odd eigenvalues")->required();

    auto* verify = app.add_subcommand("verify", "Check a named identity, or every acceptance criterion with --all");
    verify->add_option("name", o.check, "Check name");
    verify->add_option("params", o.params, "Check parameters");
    verify->add_flag("--all", o.all, "Run the full acceptance suite");
    verify->add_option("--seed", o.seed, "Seed for randomized sweeps")->capture_default_str();
    verify->add_option("--trials", o.trials, "Trials for randomized sweeps")->check(CLI::PositiveNumber)->capture_default_str();

    for (auto* sub : {lr, lr_coeff, ch, susy, verify})
        sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (lr->parsed()) return run_lr(o);
    if (lr_coeff->parsed()) return run_lr_coeff(o);
    if (ch->parsed()) return run_ch(o);
    if (susy->parsed()) return run_susy_eval(o);
    return run_verify(o);
}
