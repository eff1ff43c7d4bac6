#pragma once

// Command-line front end: presentation, verify, sweep, gamma and rank-lemma.
// Every command builds a JSON report; text and CSV are rendered from it.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "springer/ideals.hpp"
#include "springer/lambda_ring.hpp"
#include "springer/monomial.hpp"
#include "springer/oracle.hpp"
#include "springer/partition.hpp"

namespace springer {

inline constexpr int kReportSchemaVersion = 1;

enum class ExitCode : int { pass = 0, failure = 1, usage = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::vector<Partition> partitions;
    std::optional<int> n;
    std::string flavor = "both";  // cohomology | ktheory | both
    Convention convention = Convention::v;
    MonomialOrder order;
    std::optional<int> degree_cap;
    int escalation_depth = 2;
    std::string format = "json";  // json | csv | text
    std::string cache_dir;
    int jobs = 1;
    std::vector<std::string> suites;  // verify only; empty means all
    std::vector<int> subset;          // gamma only
    int d = 0;                        // gamma only
    bool timings = true;
    std::optional<int> max_n;

    nlohmann::json to_json() const;
};

// Suites run by `verify`, in report order.
const std::vector<std::string>& verify_suites();

// Throws UsageError on any invalid combination.
void validate(RunConfig& config);

// The common header of a per-partition report entry.
nlohmann::json partition_header(const Partition& lambda);

nlohmann::json report_json(const FiltrationReport& r);
nlohmann::json report_json(const FreenessReport& r);
nlohmann::json report_json(const RankLemmaReport& r);
nlohmann::json report_json(const RelationReport& r, std::string_view prefix);
std::string filtration_csv(const FiltrationReport& r);

struct CommandResult {
    nlohmann::json report;
    bool pass = true;
};

CommandResult cmd_presentation(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);
CommandResult cmd_gamma(const RunConfig& config);
CommandResult cmd_rank_lemma(const RunConfig& config);

std::string render(const RunConfig& config, const nlohmann::json& report);

// Parses argv, runs the command and writes the rendered report to out.
// Diagnostics go to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer
