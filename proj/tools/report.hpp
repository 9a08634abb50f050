#pragma once

// Report model of the command-line tool and its JSON form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbbox/kinematics.hpp"

namespace mbbox::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kNotConverged = 3 };

struct LaurentTerm {
    int power = 0;
    Complex value;
    bool operator==(const LaurentTerm&) const = default;
};

/// One evaluated point. Sweeps add per-method values and deviations from the reference.
struct PointRecord {
    std::string integral;   // "massless" | "onemass"
    Kinematics kinematics;
    std::string method;
    Complex value;
    std::vector<LaurentTerm> laurent;
    std::map<std::string, Complex> breakdown;
    std::map<std::string, double> diagnostics;
    std::map<std::string, Complex> values;        // sweep: method -> value
    std::map<std::string, double> deviations;     // sweep: method -> relative deviation
    std::string status = "ok";                    // ok | fail | skipped-degenerate | input-error | not-converged
    std::string message;

    bool operator==(const PointRecord& o) const;
};

struct CheckRecord {
    std::string suite, name, point;
    double deviation = 0.0, tolerance = 0.0;
    bool pass = false;
    std::string error;
    bool operator==(const CheckRecord& o) const;
};

struct Summary {
    double max_deviation = 0.0;
    int failures = 0;
    int warnings = 0;
    bool operator==(const Summary&) const = default;
};

struct Report {
    std::string command;
    std::vector<PointRecord> records;
    std::vector<CheckRecord> checks;
    Summary summary;
    bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const PointRecord& r);
PointRecord point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Exit code implied by the report: input errors, then non-convergence, then failures.
int exit_code(const Report& r);

}  // namespace mbbox::cli
