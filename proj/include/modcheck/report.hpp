#pragma once

#include "modcheck/cubic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modcheck::report {

enum class Status { Pass, Fail, Skip };
std::string status_name(Status s);

struct Check {
    std::string id;
    std::string description;
    Status status = Status::Skip;
    std::string detail;
    double seconds = 0;  // wall time, reported only in the timing block
};

struct Report {
    std::string suite;
    std::vector<Check> checks;  // sorted by id

    std::size_t count(Status s) const;
    bool passed() const { return count(Status::Fail) == 0; }
    // Timing is kept in a separate "timing" object so the rest is reproducible.
    std::string to_json(bool with_timing = true) const;
    std::string to_markdown() const;
};

struct RunOptions {
    int n = 8;                        // marked points for hassett-strata
    std::optional<int> degree_bound;  // Hilbert stabilisation bound
    bool epsilon_report = false;      // include epsilon coefficients in details
    std::uint64_t seed = 20240611;
    int jobs = 1;
};

class UnknownSuite : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();  // without "all"

struct CheckSpec {
    std::string id;
    std::string description;
    std::function<std::pair<Status, std::string>()> body;
};
std::vector<CheckSpec> suite_checks(const std::string& suite, const RunOptions& opts);

// Runs the checks of a suite (or every suite for "all") with up to opts.jobs threads.
Report run(const std::string& suite, const RunOptions& opts = {});

// JSON verdict for a stratum: {stratum, census, lc_points, ampleness, stable}.
std::string pair_json(const cubic::PairConfig& cfg, const cubic::StabilityReport& r, bool epsilon_report);
// Plain-text incidence listing: lines with multiplicities, grouped by plane for three-plane strata.
std::string incidence_ascii(const cubic::PairConfig& cfg);

}  // namespace modcheck::report
