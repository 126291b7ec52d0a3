#ifndef DZK_RUNNER_HPP
#define DZK_RUNNER_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dzk/csv.hpp"
#include "dzk/manifest.hpp"

namespace dzk {

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunResult {
    std::vector<Verdict> verdicts;
    csv::Table results;  // mirror of the results.csv written to output_dir

    bool ok() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

// Executes a validated manifest and writes results.csv, summary.txt and any
// run artifacts (ledger CSV, .dzkf snapshots) into manifest.output_dir.
// Returns the verdicts; throws only on environment errors (I/O, invalid
// manifest) - failed assertions are reported, not thrown.
RunResult run_manifest(const Manifest& m);

// Prints a per-experiment verdict table aggregated from every summary.txt
// under `dir` (recursively), echoing stored values verbatim. Returns the
// process exit code: 0 all pass, 1 any fail, 2 nothing found.
int report(const std::filesystem::path& dir, std::ostream& out);

// Worker-pool size: DZK_THREADS if set (>=1), else hardware concurrency.
int worker_count();

} // namespace dzk

#endif
