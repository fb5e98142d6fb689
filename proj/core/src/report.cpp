#include "takeuchi/report.hpp"

#include <algorithm>
#include <sstream>

namespace takeuchi {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

void Report::add(std::string name, Verdict v, std::string message) {
    checks_.push_back(Check{std::move(name), v, std::move(message)});
}

void Report::expect(bool ok, std::string name, std::string failure_message) {
    if (ok) {
        pass(std::move(name));
    } else {
        fail(std::move(name), std::move(failure_message));
    }
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks_) checks_.push_back(Check{prefix + c.name, c.verdict, c.message});
}

bool Report::ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.verdict == Verdict::pass; });
}

bool Report::any_inconclusive() const {
    return std::any_of(checks_.begin(), checks_.end(),
                       [](const Check& c) { return c.verdict == Verdict::inconclusive; });
}

Verdict Report::verdict() const {
    if (std::any_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.verdict == Verdict::fail; }))
        return Verdict::fail;
    return any_inconclusive() ? Verdict::inconclusive : Verdict::pass;
}

std::vector<Check> Report::failures() const {
    std::vector<Check> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
                 [](const Check& c) { return c.verdict != Verdict::pass; });
    return out;
}

json Report::to_json() const {
    json j;
    j["subject"] = subject_;
    j["verdict"] = to_string(verdict());
    json checks = json::array();
    for (const auto& c : checks_) {
        json e;
        e["name"] = c.name;
        e["verdict"] = to_string(c.verdict);
        if (!c.message.empty()) e["message"] = c.message;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    if (!data_.empty()) j["data"] = data_;
    return j;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << subject_ << ": " << to_string(verdict()) << " (" << checks_.size() << " checks";
    auto bad = failures();
    if (!bad.empty()) os << ", " << bad.size() << " not passing";
    os << ")";
    for (const auto& c : bad) os << "\n  [" << to_string(c.verdict) << "] " << c.name << ": " << c.message;
    return os.str();
}

}  // namespace takeuchi
