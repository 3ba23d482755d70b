// bcs-census: run a census and print a verification report.

#include "bcs/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace bcs::report;

struct Flags {
    std::optional<std::uint64_t> q;
    std::optional<unsigned> m, n, r, d;
    std::string mode = "exhaustive", format = "json", out;
    std::uint64_t sample_size = 10000, seed = 1;
    std::optional<std::uint64_t> ceiling;
    int workers = 0;
    bool timing = false;
};

void add_flags(CLI::App& sub, Flags& f) {
    sub.add_option("--q", f.q, "field size (prime power)");
    sub.add_option("--m", f.m, "block size");
    sub.add_option("--n", f.n, "number of blocks / degree bound");
    sub.add_option("--r", f.r, "tuple length");
    sub.add_option("--d", f.d, "binomial degree");
    sub.add_option("--mode", f.mode, "exhaustive | sample")->check(CLI::IsMember({"exhaustive", "sample"}));
    sub.add_option("--sample-size", f.sample_size, "samples per estimate");
    sub.add_option("--seed", f.seed, "sampling seed");
    sub.add_option("--format", f.format, "json | csv | md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub.add_option("--ceiling", f.ceiling, "largest exhaustive search space (default 2^26, or $BCS_CEILING)");
    sub.add_option("--out", f.out, "write the report here instead of stdout");
    sub.add_option("--workers", f.workers, "OpenMP threads (0 = runtime default)");
    sub.add_flag("--timing", f.timing, "include runtime_ms in the report");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive census of block companion matrices and related counts"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    Flags flags;
    const char* commands[] = {"fibers",   "coprime", "sigma",    "toeplitz",  "splitting", "pointed",
                              "bounds",   "binomial", "trinomial", "nilpotent", "all"};
    for (const char* c : commands) add_flags(*app.add_subcommand(c, std::string("run the ") + c + " census"), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    RunConfig config;
    RunOptions options;
    try {
        config.command = command_from_string(app.get_subcommands().front()->get_name());
        config.q = flags.q;
        config.m = flags.m;
        config.n = flags.n;
        config.r = flags.r;
        config.d = flags.d;
        config.mode = mode_from_string(flags.mode);
        config.format = format_from_string(flags.format);
        config.sample_size = flags.sample_size;
        config.seed = flags.seed;
        config.ceiling = flags.ceiling ? *flags.ceiling : default_ceiling_from_env();
        validate(config);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return 1;
    }
    options.workers = flags.workers;
    options.timing = flags.timing;

    const VerificationReport report = run(config, options);
    const std::string text = serialize(report, config.format);
    if (flags.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(flags.out, std::ios::binary);
        if (!(file << text)) {
            std::cerr << "error: cannot write " << flags.out << "\n";
            return 1;
        }
    }
    for (const auto& s : report.skipped) std::cerr << s.name << ": " << s.reason << "\n";
    return report.exit_code();
}
