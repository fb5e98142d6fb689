#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace takeuchi {

using json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct Check {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string message;
};

/// Outcome of a validator or a verification pipeline. Failures are entries,
/// not exceptions.
class Report {
public:
    Report() = default;
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    void add(std::string name, Verdict v, std::string message = {});
    void pass(std::string name, std::string message = {}) { add(std::move(name), Verdict::pass, std::move(message)); }
    void fail(std::string name, std::string message) { add(std::move(name), Verdict::fail, std::move(message)); }
    /// Records pass or fail depending on ok.
    void expect(bool ok, std::string name, std::string failure_message);
    /// Appends every check of other, prefixing names with prefix.
    void merge(const Report& other, const std::string& prefix = {});

    [[nodiscard]] bool ok() const;
    [[nodiscard]] bool any_inconclusive() const;
    [[nodiscard]] Verdict verdict() const;
    [[nodiscard]] const std::vector<Check>& checks() const noexcept { return checks_; }
    [[nodiscard]] std::vector<Check> failures() const;
    [[nodiscard]] const std::string& subject() const noexcept { return subject_; }

    json& data() noexcept { return data_; }
    [[nodiscard]] const json& data() const noexcept { return data_; }

    [[nodiscard]] json to_json() const;
    [[nodiscard]] std::string summary() const;

private:
    std::string subject_;
    std::vector<Check> checks_;
    json data_ = json::object();
};

}  // namespace takeuchi
