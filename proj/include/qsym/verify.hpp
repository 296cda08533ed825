#pragma once

#include "qsym/serialize.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

struct VerifyOptions {
    std::uint64_t seed = 0;
    int trials = 100;
};

/// Outcome of one named check, either a single instance or a sweep.
struct Report {
    std::string check;
    /// Display label: "m=2 n=2", or the sweep description.
    std::string label;
    Json params = Json::object();
    bool holds = true;
    int instances = 0;
    /// First failing instance, empty when everything holds.
    std::string failed_instance;
    std::string residual_text;
    Json residual;
};

/// All names accepted by run_check, in display order.
const std::vector<std::string>& check_names();
bool is_check_name(std::string_view name);

/// Runs `name` on the given positional parameters. With no parameters the
/// check's default sweep runs; randomized sweeps take seed and trials from
/// `options`. Malformed parameters throw qsym::Error.
Report run_check(std::string_view name, std::span<const std::string> params, const VerifyOptions& options = {});

/// "OK kirillov m=2 n=2", or "FAIL ..." followed by the residual.
std::string render_text(const Report& report);
Json render_json(const Report& report);

}  // namespace qsym
