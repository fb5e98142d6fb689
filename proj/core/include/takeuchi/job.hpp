#pragma once

#include "takeuchi/report.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace takeuchi {

/// Malformed job. path is a JSON pointer to the offending value ("" for the
/// root or for syntax errors).
class JobError : public std::runtime_error {
public:
    JobError(std::string path, const std::string& what)
        : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

inline constexpr int job_schema_version = 1;

/// The commands a job can run.
const std::vector<std::string>& job_commands();

/// A validated job document. Entities keep their canonical JSON; objects are
/// built when the job runs. Canonical form fills defaults, so serializing a
/// parsed job and parsing it again gives the same job.
struct JobSpec {
    std::string field;  // "Q" or "F<p>"
    int max_level = 3;  // N
    int bound = 6;      // D
    std::map<std::string, json> algebras;
    std::map<std::string, json> hopf;
    std::map<std::string, json> actions;
    std::map<std::string, json> coactions;
    std::map<std::string, json> modules;
    std::string command;
    json arguments = json::object();
    std::string output;

    /// The field plus every named definition.
    [[nodiscard]] std::size_t entity_count() const;
    [[nodiscard]] json to_json() const;
};

/// Parses and validates a job; throws JobError with the offending path.
JobSpec parse_job(const std::string& text);
JobSpec parse_job(const json& doc);

struct JobResult {
    json report;  // schema-versioned report document
    int exit_code = 0;  // 0 all pass, 1 a check failed or stayed open, 2 input error
};

/// Builds the referenced objects and runs the command. Errors raised while
/// computing are captured in the report (exit code 1); errors in building
/// the inputs give exit code 2.
JobResult run_job(const JobSpec& job);

/// Human-readable rendering of a report document.
std::string render_report(const json& report);

}  // namespace takeuchi
