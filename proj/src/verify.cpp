#include "qsym/verify.hpp"

#include "qsym/chidentity.hpp"
#include "qsym/error.hpp"
#include "qsym/quotient.hpp"
#include "qsym/scalars.hpp"
#include "qsym/supersym.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>
#include <sstream>

namespace qsym {

namespace {

struct Instance {
    bool holds = true;
    std::string residual_text;
    Json residual;
};

Instance from_schur(const SchurVector& r)
{
    if (r.is_zero()) return {};
    return {false, r.to_string(), to_json(r)};
}

Instance from_pow(const PowVector& r)
{
    if (r.is_zero()) return {};
    return {false, r.to_string(), to_json(r)};
}

Instance from_param(const ParamPowVector& r)
{
    if (r.is_zero()) return {};
    return {false, r.to_string(), to_json(r)};
}

Instance from_poly(const MultiPoly& r)
{
    if (r.is_zero()) return {};
    return {false, r.to_string(), to_json(r)};
}

Instance from_ratios(const PolyRatio& computed, const PolyRatio& expected)
{
    if (computed == expected) return {};
    return {false, computed.to_string() + " != " + expected.to_string(),
            Json{{"computed", to_json(computed)}, {"expected", to_json(expected)}}};
}

Instance from_flag(bool holds, const std::string& what)
{
    if (holds) return {};
    return {false, what, Json(what)};
}

Instance combine(std::initializer_list<Instance> parts)
{
    for (const auto& part : parts)
        if (!part.holds) return part;
    return {};
}

using IntArgs = std::vector<int>;

int parse_int(const std::string& text)
{
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) throw Error(ErrorCode::parse, "malformed integer: '" + text + "'");
    return value;
}

std::string join_label(const std::vector<std::string>& names, const IntArgs& args)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ' ';
        out += names[i] + '=' + std::to_string(args[i]);
    }
    return out;
}

struct GridCheck {
    std::vector<std::string> param_names;
    std::function<Instance(const IntArgs&)> single;
    std::function<std::vector<IntArgs>()> grid;
    std::string sweep_label;
};

// -- grids -------------------------------------------------------------------

std::vector<IntArgs> pairs_grid(int m_lo, int m_hi, int n_lo, int n_hi)
{
    std::vector<IntArgs> out;
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = n_lo; n <= n_hi; ++n)
            if (m + n >= 1) out.push_back({m, n});
    return out;
}

std::vector<IntArgs> ch_pairs()
{
    return {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
}

// -- single instances ----------------------------------------------------------

Instance wronski_instance(const IntArgs& a)
{
    const int k = a[0];
    if (k < 0) throw_out_of_range("wronski needs k >= 0");
    return combine({from_schur(wronski_residual(k)), from_poly(wronski_image(k, a[1], a[2]))});
}

Instance ch_basis_instance(const IntArgs& a)
{
    const int m = a[0];
    const int n = a[1];
    if (m < 0 || n < 0 || m + n < 1) throw_out_of_range("ch-basis needs m, n >= 0, m + n >= 1");
    const PowVector standard = ch_standard(m, n);
    return combine({from_pow(basis_convert(ch_wedge(m, n), PowBasis::power) - standard),
                    from_pow(basis_convert(ch_sym(m, n), PowBasis::power) - standard),
                    from_pow(basis_convert(basis_convert(standard, PowBasis::wedge), PowBasis::power) - standard),
                    from_pow(basis_convert(basis_convert(standard, PowBasis::sym), PowBasis::power) - standard)});
}

Instance c0_instance(const IntArgs& a)
{
    const int m = a[0];
    const int n = a[1];
    if (m < 1 || n < 1) throw_out_of_range("c0 needs m, n >= 1");
    return from_poly(eval_susy(SchurVector::basis(rectangle(m, n)), m, n) - rectangle_product(m, n));
}

Instance dkd0_instance(const IntArgs& a)
{
    return from_flag(verify_dkd0(a[0], a[1], a[2]), "parameterized d_k identity violated");
}

Instance fkf0_instance(const IntArgs& a)
{
    return from_flag(verify_fkf0(a[0], a[1], a[2]), "parameterized f_k identity violated");
}

Instance susy_instance(const IntArgs& a)
{
    const int k = a[0];
    const int m = a[1];
    const int n = a[2];
    if (k < 0 || m < 0 || n < 0 || m + n < 1) throw_out_of_range("susy-cancel needs k >= 0 and m, n >= 0, m + n >= 1");
    Instance out = combine({from_flag(is_supersymmetric(generator_image(GeneratorKind::row, k, m, n), m, n),
                                      "row generator image is not supersymmetric"),
                            from_flag(is_supersymmetric(generator_image(GeneratorKind::column, k, m, n), m, n),
                                      "column generator image is not supersymmetric")});
    if (!out.holds || m < 1 || n < 1) return out;
    return combine({from_flag(verify_expansion_lemma(GeneratorKind::row, k, m, n), "row expansion lemma violated"),
                    from_flag(verify_expansion_lemma(GeneratorKind::column, k, m, n), "column expansion lemma violated")});
}

Instance def_mu_nu_instance(const IntArgs& a)
{
    const int m = a[0];
    const int n = a[1];
    if (m < 1 || n < 1) throw_out_of_range("def-mu-nu needs m, n >= 1");
    if (!verify_def_mu_nu(m, n)) return from_flag(false, "hook images disagree with e_k(q^-1 mu), e_r(-q nu) scaling");
    for (int k = 0; k <= 6; ++k) {
        if (!verify_generator_route(GeneratorKind::column, k, m, n))
            return from_flag(false, "column generator image disagrees with Jacobi-Trudi route at k=" + std::to_string(k));
        if (!verify_generator_route(GeneratorKind::row, k, m, n))
            return from_flag(false, "row generator image disagrees with Jacobi-Trudi route at k=" + std::to_string(k));
    }
    return {};
}

std::vector<IntArgs> dk_grid(bool d)
{
    std::vector<IntArgs> out;
    for (const auto& mn : pairs_grid(1, 2, 1, 2)) {
        const int m = mn[0];
        const int n = mn[1];
        const int top = d ? std::min(2 * n, m + n) : std::min(2 * m, m + n);
        for (int k = 0; k <= top; ++k) out.push_back({m, n, k});
    }
    return out;
}

const std::map<std::string, GridCheck, std::less<>>& grid_checks()
{
    static const std::map<std::string, GridCheck, std::less<>> checks = [] {
        std::map<std::string, GridCheck, std::less<>> c;
        c["bil"] = {{"r", "p", "l", "k"},
                    [](const IntArgs& a) { return from_schur(bilinear_residual(a[0], a[1], a[2], a[3])); },
                    [] {
                        std::vector<IntArgs> g;
                        for (int r = 1; r <= 3; ++r)
                            for (int p = 1; p <= 3; ++p)
                                for (int l = 1; l <= r; ++l)
                                    for (int k = 1; k <= p; ++k) g.push_back({r, p, l, k});
                        return g;
                    },
                    "1<=l<=r<=3 1<=k<=p<=3"};
        c["bil-quotient"] = {{"m", "n", "l", "k"},
                             [](const IntArgs& a) {
                                 return from_schur(bilinear_quotient_residual(a[2], a[3], QuotientContext(a[0], a[1])));
                             },
                             [] {
                                 std::vector<IntArgs> g;
                                 for (const auto& mn : pairs_grid(0, 3, 0, 3))
                                     for (int l = 0; l <= mn[0]; ++l)
                                         for (int k = 0; k <= mn[1]; ++k) g.push_back({mn[0], mn[1], l, k});
                                 return g;
                             },
                             "m,n<=3 0<=l<=m 0<=k<=n"};
        c["sum"] = {{"m", "n", "r", "k"},
                    [](const IntArgs& a) { return from_schur(verify_sum_lemma(a[0], a[1], a[2], a[3])); },
                    [] {
                        std::vector<IntArgs> g;
                        for (const auto& mn : pairs_grid(0, 3, 0, 3))
                            for (int r = 0; r <= mn[1]; ++r)
                                for (int k = r; k <= mn[0] + mn[1]; ++k) g.push_back({mn[0], mn[1], r, k});
                        return g;
                    },
                    "m,n<=3 0<=r<=n r<=k<=m+n"};
        c["kirillov"] = {{"m", "n"},
                         [](const IntArgs& a) { return from_schur(kirillov_residual(a[0], a[1])); },
                         [] { return pairs_grid(1, 4, 1, 4); },
                         "1<=m,n<=4"};
        c["sab"] = {{"a", "b", "m", "n"},
                    [](const IntArgs& a) { return from_schur(sab_residual(a[0], a[1], a[2], a[3])); },
                    [] {
                        std::vector<IntArgs> g;
                        for (int m = 1; m <= 3; ++m)
                            for (int n = 1; n <= 3; ++n)
                                for (int a = 1; a <= m; ++a)
                                    for (int b = 1; b <= n; ++b) g.push_back({a, b, m, n});
                        return g;
                    },
                    "1<=a<=m<=3 1<=b<=n<=3"};
        c["wronski"] = {{"k", "m", "n"},
                        wronski_instance,
                        [] {
                            std::vector<IntArgs> g;
                            for (int k = 0; k <= 10; ++k) g.push_back({k, 0, 1});
                            for (const auto& mn : pairs_grid(0, 2, 0, 2))
                                for (int k = 0; k <= 8; ++k) g.push_back({k, mn[0], mn[1]});
                            return g;
                        },
                        "Lambda k<=10, image k<=8 (m,n)<=(2,2)"};
        c["ch-factor"] = {{"m", "n"},
                          [](const IntArgs& a) { return from_pow(verify_factorization(a[0], a[1])); },
                          ch_pairs,
                          "(m,n) in {(1,1),(2,1),(1,2),(2,2)}"};
        c["ch-basis"] = {{"m", "n"},
                         ch_basis_instance,
                         [] {
                             auto g = ch_pairs();
                             g.insert(g.begin(), {{1, 0}, {0, 1}});
                             return g;
                         },
                         "(m,n) in {(1,0),(0,1),(1,1),(2,1),(1,2),(2,2)}"};
        c["factor2"] = {{"m", "n"},
                        [](const IntArgs& a) { return from_param(parametric_ch_residual(a[0], a[1])); },
                        ch_pairs,
                        "(m,n) in {(1,1),(2,1),(1,2),(2,2)}"};
        c["c0"] = {{"m", "n"}, c0_instance, [] { return pairs_grid(1, 3, 1, 3); }, "1<=m,n<=3"};
        c["dkd0"] = {{"m", "n", "k"}, dkd0_instance, [] { return dk_grid(true); }, "1<=m,n<=2 all k"};
        c["fkf0"] = {{"m", "n", "k"}, fkf0_instance, [] { return dk_grid(false); }, "1<=m,n<=2 all k"};
        c["susy-cancel"] = {{"k", "m", "n"},
                            susy_instance,
                            [] {
                                std::vector<IntArgs> g;
                                for (const auto& mn : pairs_grid(0, 3, 0, 2))
                                    for (int k = 0; k <= 8; ++k) g.push_back({k, mn[0], mn[1]});
                                return g;
                            },
                            "k<=8 (m,n)<=(3,2)"};
        c["def-mu-nu"] = {{"m", "n"}, def_mu_nu_instance, [] { return pairs_grid(1, 3, 1, 2); }, "(m,n)<=(3,2) k<=6"};
        c["berezinian"] = {{"m", "n"},
                           [](const IntArgs& a) {
                               return from_ratios(berezinian_param(a[0], a[1]), berezinian_closed_form(a[0], a[1]));
                           },
                           [] { return pairs_grid(1, 2, 1, 2); },
                           "1<=m,n<=2"};
        c["determinant"] = {{"m", "n"},
                            [](const IntArgs& a) {
                                const PolyRatio param = determinant_param(a[0], a[1]);
                                return combine({from_ratios(param, determinant_closed_form(a[0], a[1])),
                                                from_ratios(param, determinant_product_form(a[0], a[1]))});
                            },
                            [] { return pairs_grid(1, 2, 1, 2); },
                            "1<=m,n<=2"};
        return c;
    }();
    return checks;
}

Report run_grid(std::string_view name, const GridCheck& check, std::span<const std::string> params)
{
    Report report;
    report.check = std::string(name);
    auto record = [&](const IntArgs& args) {
        Instance inst = check.single(args);
        ++report.instances;
        if (!inst.holds && report.holds) {
            report.holds = false;
            report.failed_instance = join_label(check.param_names, args);
            report.residual_text = std::move(inst.residual_text);
            report.residual = std::move(inst.residual);
        }
    };
    if (params.empty()) {
        report.label = "sweep " + check.sweep_label;
        report.params = Json{{"sweep", check.sweep_label}};
        for (const auto& args : check.grid()) record(args);
        return report;
    }
    if (params.size() != check.param_names.size()) {
        std::string expected;
        for (const auto& p : check.param_names) expected += ' ' + p;
        throw Error(ErrorCode::invalid_argument, std::string(name) + " takes parameters" + expected);
    }
    IntArgs args;
    for (const auto& p : params) args.push_back(parse_int(p));
    report.label = join_label(check.param_names, args);
    for (std::size_t i = 0; i < args.size(); ++i) report.params[check.param_names[i]] = args[i];
    record(args);
    return report;
}

// -- appendix ----------------------------------------------------------------

struct AppendixSample {
    std::vector<int> b;
    int x = 0;
};

std::vector<AppendixSample> appendix_samples(const VerifyOptions& options)
{
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> size_dist(1, 5);
    std::uniform_int_distribution<int> entry_dist(-8, 8);
    std::uniform_int_distribution<int> x_dist(-4, 4);
    std::vector<AppendixSample> out;
    for (int t = 0; t < options.trials; ++t) {
        AppendixSample s;
        const int size = size_dist(rng);
        while (static_cast<int>(s.b.size()) < size) {
            const int v = entry_dist(rng);
            if (v != 0 && std::find(s.b.begin(), s.b.end(), v) == s.b.end()) s.b.push_back(v);
        }
        s.x = x_dist(rng);
        out.push_back(std::move(s));
    }
    return out;
}

std::string b_label(const std::vector<int>& b)
{
    std::string out = "b=";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(b[i]);
    }
    return out;
}

Report run_appendix(std::string_view name, AppendixIdentity which, std::span<const std::string> params, const VerifyOptions& options)
{
    Report report;
    report.check = std::string(name);
    const bool with_x = which == AppendixIdentity::a7;
    auto record = [&](const AppendixSample& s) {
        auto [lhs, rhs] = appendix_sides(which, s.b, with_x ? s.x : 0);
        ++report.instances;
        if (!(lhs == rhs) && report.holds) {
            report.holds = false;
            report.failed_instance = (with_x ? "x=" + std::to_string(s.x) + " " : std::string()) + b_label(s.b);
            report.residual_text = (lhs - rhs).to_string();
            report.residual = Json{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
        }
    };
    if (params.empty()) {
        if (options.trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be positive");
        report.label = "seed=" + std::to_string(options.seed) + " trials=" + std::to_string(options.trials);
        report.params = Json{{"seed", options.seed}, {"trials", options.trials}};
        for (const auto& s : appendix_samples(options)) record(s);
        return report;
    }
    AppendixSample s;
    std::size_t first_b = 0;
    if (with_x) {
        s.x = parse_int(params[0]);
        first_b = 1;
        report.params["x"] = s.x;
    }
    for (std::size_t i = first_b; i < params.size(); ++i) s.b.push_back(parse_int(params[i]));
    report.params["b"] = s.b;
    report.label = (with_x ? "x=" + std::to_string(s.x) + " " : std::string()) + b_label(s.b);
    record(s);
    return report;
}

// -- monomial oracle -----------------------------------------------------------

// Coefficient of x^alpha in s_lam(x) s_mu(x): sum over beta <= alpha with
// |beta| = |lam| of K(lam, beta) K(mu, alpha - beta).
LaurentQ product_coefficient(MonomialOracle& oracle, const Partition& lam, const Partition& mu, const std::vector<int>& alpha)
{
    const SchurVector s_lam = SchurVector::basis(lam);
    const SchurVector s_mu = SchurVector::basis(mu);
    std::vector<int> beta(alpha.size(), 0);
    std::vector<int> rest(alpha.size(), 0);
    LaurentQ total;
    auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == alpha.size()) {
            if (remaining != 0) return;
            for (std::size_t j = 0; j < alpha.size(); ++j) rest[j] = alpha[j] - beta[j];
            const LaurentQ a = oracle.coefficient(s_lam, beta);
            if (a.is_zero()) return;
            total += a * oracle.coefficient(s_mu, rest);
            return;
        }
        for (int v = std::min(alpha[i], remaining); v >= 0; --v) {
            beta[i] = v;
            self(self, i + 1, remaining - v);
        }
        beta[i] = 0;
    };
    recurse(recurse, 0, lam.weight());
    return total;
}

Instance oracle_pair(MonomialOracle& oracle, const Partition& lam, const Partition& mu, int nvars)
{
    const SchurVector product = SchurVector::basis(lam) * SchurVector::basis(mu);
    for (const auto& alpha : partitions_of(lam.weight() + mu.weight())) {
        if (alpha.length() > nvars) continue;
        std::vector<int> exps(alpha.parts());
        exps.resize(nvars, 0);
        const LaurentQ lhs = oracle.coefficient(product, exps);
        const LaurentQ rhs = product_coefficient(oracle, lam, mu, exps);
        if (!(lhs == rhs))
            return {false, "coefficient of x^(" + alpha.to_string() + "): " + lhs.to_string() + " != " + rhs.to_string(),
                    Json{{"exponents", exps}, {"lr", lhs.to_string()}, {"oracle", rhs.to_string()}}};
    }
    return {};
}

Report run_oracle(std::span<const std::string> params)
{
    Report report;
    report.check = "oracle-monomial";
    if (params.empty()) {
        constexpr int kMaxWeight = 5;
        constexpr int kVariables = 10;
        report.label = "sweep |lam|,|mu|<=5 in 10 variables";
        report.params = Json{{"sweep", "|lam|,|mu|<=5"}, {"nvars", kVariables}};
        std::vector<Partition> all;
        for (int w = 0; w <= kMaxWeight; ++w)
            for (auto& p : partitions_of(w)) all.push_back(std::move(p));
        MonomialOracle oracle;
        for (const auto& lam : all)
            for (const auto& mu : all) {
                Instance inst = oracle_pair(oracle, lam, mu, kVariables);
                ++report.instances;
                if (!inst.holds && report.holds) {
                    report.holds = false;
                    report.failed_instance = "lam=" + lam.to_string() + " mu=" + mu.to_string();
                    report.residual_text = inst.residual_text;
                    report.residual = inst.residual;
                }
            }
        return report;
    }
    if (params.size() < 2 || params.size() > 3)
        throw Error(ErrorCode::invalid_argument, "oracle-monomial takes parameters lam mu [nvars]");
    const Partition lam = Partition::parse(params[0]);
    const Partition mu = Partition::parse(params[1]);
    const int nvars = params.size() == 3 ? parse_int(params[2]) : std::max(1, lam.length() + mu.length());
    if (nvars < 1 || nvars > 12) throw_out_of_range("nvars must lie in [1, 12]");
    report.label = "lam=" + lam.to_string() + " mu=" + mu.to_string() + " nvars=" + std::to_string(nvars);
    report.params = Json{{"lam", to_json(lam)}, {"mu", to_json(mu)}, {"nvars", nvars}};
    const MonomialExpansion lr = monomial_expand(SchurVector::basis(lam) * SchurVector::basis(mu), nvars);
    const MonomialExpansion direct =
        multiply(monomial_expand(SchurVector::basis(lam), nvars), monomial_expand(SchurVector::basis(mu), nvars));
    report.instances = 1;
    if (lr != direct) {
        report.holds = false;
        report.failed_instance = report.label;
        int differing = 0;
        for (const auto& [e, c] : lr) {
            auto it = direct.find(e);
            if (it == direct.end() || !(it->second == c)) ++differing;
        }
        for (const auto& [e, c] : direct)
            if (!lr.contains(e)) ++differing;
        report.residual_text = std::to_string(differing) + " monomial coefficients differ";
        report.residual = Json{{"differing_monomials", differing}};
    }
    return report;
}

}  // namespace

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {
        "bil", "bil-quotient", "sum", "kirillov", "sab", "wronski", "appendix-a1", "appendix-a2", "appendix-a3",
        "appendix-a7", "ch-factor", "ch-basis", "factor2", "c0", "dkd0", "fkf0", "susy-cancel", "def-mu-nu",
        "berezinian", "determinant", "oracle-monomial"};
    return names;
}

bool is_check_name(std::string_view name)
{
    const auto& names = check_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_check(std::string_view name, std::span<const std::string> params, const VerifyOptions& options)
{
    if (name == "oracle-monomial") return run_oracle(params);
    if (name == "appendix-a1") return run_appendix(name, AppendixIdentity::a1, params, options);
    if (name == "appendix-a2") return run_appendix(name, AppendixIdentity::a2, params, options);
    if (name == "appendix-a3") return run_appendix(name, AppendixIdentity::a3, params, options);
    if (name == "appendix-a7") return run_appendix(name, AppendixIdentity::a7, params, options);
    const auto& checks = grid_checks();
    auto it = checks.find(name);
    if (it == checks.end()) throw Error(ErrorCode::invalid_argument, "unknown check: " + std::string(name));
    return run_grid(name, it->second, params);
}

std::string render_text(const Report& report)
{
    std::ostringstream out;
    out << (report.holds ? "OK " : "FAIL ") << report.check << ' ' << report.label;
    if (report.instances > 1) out << " (" << report.instances << " instances)";
    if (!report.holds) {
        out << "\nfailed at: " << report.failed_instance;
        out << "\nresidual: " << report.residual_text;
    }
    return out.str();
}

Json render_json(const Report& report)
{
    Json j{{"schema", kSchemaVersion},
           {"check", report.check},
           {"params", report.params},
           {"holds", report.holds},
           {"instances", report.instances}};
    if (report.holds) {
        j["residual"] = nullptr;
    } else {
        j["failed_instance"] = report.failed_instance;
        j["residual"] = report.residual;
    }
    return j;
}

}  // namespace qsym
