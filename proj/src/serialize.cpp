#include "bcs/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace bcs::report {

namespace {

using json = nlohmann::ordered_json;

// Doubles represent integers exactly only up to 2^53; larger ones go out as strings.
constexpr std::uint64_t kExactDouble = std::uint64_t{1} << 53;

json value_to_json(const Value& v) {
    if (const auto* u = std::get_if<std::uint64_t>(&v)) return *u <= kExactDouble ? json(*u) : json(std::to_string(*u));
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    return std::get<std::string>(v);
}

Value value_from_json(const json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_unsigned() || j.is_number_integer()) return j.get<std::uint64_t>();
    const auto s = j.get<std::string>();
    if (!s.empty() && s.size() <= 20 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        try {
            return std::stoull(s);
        } catch (const std::out_of_range&) {
        }
    }
    return s;
}

template <class T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

json config_to_json(const RunConfig& c) {
    json j;
    j["command"] = to_string(c.command);
    j["q"] = optional_to_json(c.q);
    j["m"] = optional_to_json(c.m);
    j["n"] = optional_to_json(c.n);
    j["r"] = optional_to_json(c.r);
    j["d"] = optional_to_json(c.d);
    j["mode"] = to_string(c.mode);
    j["sample_size"] = c.sample_size;
    j["seed"] = c.seed;
    j["format"] = to_string(c.format);
    j["ceiling"] = c.ceiling;
    return j;
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    c.command = command_from_string(j.at("command").get<std::string>());
    c.q = optional_from_json<std::uint64_t>(j.at("q"));
    c.m = optional_from_json<unsigned>(j.at("m"));
    c.n = optional_from_json<unsigned>(j.at("n"));
    c.r = optional_from_json<unsigned>(j.at("r"));
    c.d = optional_from_json<unsigned>(j.at("d"));
    c.mode = mode_from_string(j.at("mode").get<std::string>());
    c.sample_size = j.at("sample_size").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.format = format_from_string(j.at("format").get<std::string>());
    c.ceiling = j.at("ceiling").get<std::uint64_t>();
    return c;
}

constexpr Status kAllStatuses[] = {Status::match, Status::counterexample_candidate, Status::implementation_error,
                                   Status::unverified_sampled};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_json(const VerificationReport& r) {
    json j;
    j["tool_version"] = r.tool_version;
    j["config"] = config_to_json(r.config);
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["paper_anchor"] = c.paper_anchor;
        e["formula"] = value_to_json(c.formula);
        e["observed"] = value_to_json(c.observed);
        e["status"] = to_string(c.status);
        e["claim"] = to_string(c.claim);
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    json skipped = json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    json counts;
    for (auto s : kAllStatuses) counts[to_string(s)] = r.count(s);
    counts["skipped"] = r.skipped.size();
    j["summary"] = {{"checks", r.checks.size()}, {"counts", std::move(counts)}, {"exit_code", r.exit_code()}};
    if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
    return j.dump(2) + "\n";
}

VerificationReport parse_json(const std::string& text) {
    const json j = json::parse(text);
    VerificationReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.config = config_from_json(j.at("config"));
    for (const auto& e : j.at("checks")) {
        Check c;
        c.name = e.at("name").get<std::string>();
        c.paper_anchor = e.at("paper_anchor").get<std::string>();
        c.formula = value_from_json(e.at("formula"));
        c.observed = value_from_json(e.at("observed"));
        c.status = status_from_string(e.at("status").get<std::string>());
        c.claim = claim_from_string(e.at("claim").get<std::string>());
        c.detail = e.value("detail", "");
        r.checks.push_back(std::move(c));
    }
    for (const auto& e : j.at("skipped"))
        r.skipped.push_back({e.at("name").get<std::string>(), e.at("reason").get<std::string>()});
    if (j.contains("runtime_ms")) r.runtime_ms = j["runtime_ms"].get<double>();
    return r;
}

std::string to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "name,paper_anchor,formula,observed,status\n";
    for (const auto& c : r.checks)
        out << csv_field(c.name) << ',' << csv_field(c.paper_anchor) << ',' << csv_field(to_string(c.formula)) << ','
            << csv_field(to_string(c.observed)) << ',' << to_string(c.status) << '\n';
    for (const auto& s : r.skipped) out << csv_field(s.name) << ",,,," << "skipped\n";
    for (auto s : kAllStatuses) out << "summary." << to_string(s) << ",,," << r.count(s) << ",summary\n";
    out << "summary.skipped,,," << r.skipped.size() << ",summary\n";
    out << "summary.exit_code,,," << r.exit_code() << ",summary\n";
    return out.str();
}

std::string to_markdown(const VerificationReport& r) {
    std::ostringstream out;
    out << "# bcs-census " << to_string(r.config.command) << " (v" << r.tool_version << ")\n\n";
    out << "| name | anchor | formula | observed | status | claim |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const auto& c : r.checks)
        out << "| " << md_cell(c.name) << " | " << md_cell(c.paper_anchor) << " | " << md_cell(to_string(c.formula))
            << " | " << md_cell(to_string(c.observed)) << " | " << to_string(c.status) << " | " << to_string(c.claim)
            << " |\n";
    if (!r.skipped.empty()) {
        out << "\n## Skipped\n\n";
        for (const auto& s : r.skipped) out << "- `" << s.name << "`: " << s.reason << "\n";
    }
    out << "\n**Summary:**";
    for (auto s : kAllStatuses) out << ' ' << to_string(s) << '=' << r.count(s);
    out << " skipped=" << r.skipped.size() << ", exit code " << r.exit_code() << "\n";
    if (r.runtime_ms) out << "\nRuntime: " << *r.runtime_ms << " ms\n";
    return out.str();
}

std::string serialize(const VerificationReport& r, Format f) {
    switch (f) {
    case Format::json: return to_json(r);
    case Format::csv: return to_csv(r);
    case Format::md: return to_markdown(r);
    }
    return {};
}

} // namespace bcs::report
