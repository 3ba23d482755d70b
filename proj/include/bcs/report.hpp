#pragma once

/**
 * @file report.hpp
 * @brief Run configuration, verification reports, serialization and the
 * process exit-code contract behind the `bcs-census` tool.
 */

#include "bcs/census.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bcs::report {

inline constexpr const char* kToolVersion = "0.1.0";

/// Environment variable overriding the default exhaustive ceiling.
inline constexpr const char* kCeilingEnv = "BCS_CEILING";

enum class Command { fibers, coprime, sigma, toeplitz, splitting, pointed, bounds, binomial, trinomial, nilpotent, all };
enum class Mode { exhaustive, sample };
enum class Format { json, csv, md };
enum class Status { match, counterexample_candidate, implementation_error, unverified_sampled };
/// Whether a check compares against a theorem (mismatch = our bug) or a conjecture.
enum class Claim { proven, conjectured };

const char* to_string(Command c);
const char* to_string(Mode m);
const char* to_string(Format f);
const char* to_string(Status s);
const char* to_string(Claim c);
Command command_from_string(const std::string& s);
Mode mode_from_string(const std::string& s);
Format format_from_string(const std::string& s);
Status status_from_string(const std::string& s);
Claim claim_from_string(const std::string& s);

/// Invalid command line or parameter combination (exit code 1).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    Command command = Command::all;
    std::optional<std::uint64_t> q;
    std::optional<unsigned> m, n, r, d;
    Mode mode = Mode::exhaustive;
    std::uint64_t sample_size = 10000;
    std::uint64_t seed = 1;
    Format format = Format::json;
    std::uint64_t ceiling = kDefaultCeiling;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws UsageError if a required parameter is missing, an inapplicable one
/// is present, or a value is out of range.
void validate(const RunConfig& config);

/// kDefaultCeiling, or the value of BCS_CEILING when set (UsageError if malformed).
std::uint64_t default_ceiling_from_env();

/// Integers, booleans (predicate checks) or free text (rationals, estimates).
using Value = std::variant<std::uint64_t, bool, std::string>;
std::string to_string(const Value& v);

struct Check {
    std::string name;
    std::string paper_anchor;
    Value formula;
    Value observed;
    Status status = Status::match;
    Claim claim = Claim::proven;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Skipped {
    std::string name;
    std::string reason;
    friend bool operator==(const Skipped&, const Skipped&) = default;
};

struct VerificationReport {
    std::string tool_version = kToolVersion;
    RunConfig config;
    std::vector<Check> checks;
    std::vector<Skipped> skipped;
    std::optional<double> runtime_ms;

    std::size_t count(Status s) const;
    /// 3 if any implementation_error, else 2 if any counterexample_candidate,
    /// else 4 if anything was sampled or skipped, else 0.
    int exit_code() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Test seam: returns a replacement formula value for a check, or nullopt.
using FormulaHook = std::function<std::optional<Value>(const std::string& check_name, const Value& formula)>;

struct RunOptions {
    int workers = 0;
    bool timing = false;
    FormulaHook formula_hook;
};

/// Validates and executes the configured census.
VerificationReport run(const RunConfig& config, const RunOptions& options = {});

std::string serialize(const VerificationReport& report, Format format);
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
std::string to_markdown(const VerificationReport& report);
/// Inverse of to_json.
VerificationReport parse_json(const std::string& text);

} // namespace bcs::report
