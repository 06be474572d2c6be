#ifndef QORTHO_TOOLS_CLI_HPP
#define QORTHO_TOOLS_CLI_HPP

#include <qortho/poly.hpp>
#include <qortho/solver.hpp>
#include <qortho/weights.hpp>

#include "json.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qortho::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, check_failed = 1, invalid_input = 2, inconsistent = 3 };

enum class Family { q, classical };

struct JobConfig {
    std::string command;
    Family family = Family::q;
    std::optional<Scalar> v;
    std::vector<Scalar> p;
    std::vector<Scalar> beta;  // defaults to 1 - p
    bool beta_given = false;
    long N = 0;
    MultiIndex index;
    std::string format = "json";
    std::string out;
    std::vector<std::string> checks{"all"};
    std::string convention = "both";
    int precision = 10;
    Scalar delta{1, 8};
    long steps = 5;

    KravchukParams kravchuk() const;
    ClassicalParams classical() const;
};

/// A command's structured output plus its exit code.
struct Outcome {
    Json doc;
    int code = ok;
};

/// Hook applied to the computed polynomial before the checks run.
using Tamper = std::function<void(Poly&)>;

Outcome cmd_compute(const JobConfig& cfg);
Outcome cmd_verify(const JobConfig& cfg, const Tamper& tamper = {});
Outcome cmd_zeros(const JobConfig& cfg);
Outcome cmd_limit(const JobConfig& cfg);

/// Renders an outcome in the configured format.
std::string render(const JobConfig& cfg, const Outcome& outcome);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qortho::cli

#endif // QORTHO_TOOLS_CLI_HPP
