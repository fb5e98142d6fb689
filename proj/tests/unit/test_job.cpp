#include "doctest.h"

#include "takeuchi/job.hpp"

#include <fstream>
#include <sstream>

using namespace takeuchi;

namespace {

std::string read_job(const std::string& name) {
    std::ifstream in(std::string(TAKEUCHI_JOBS_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Timing fields are the only permitted source of nondeterminism.
void strip_seconds(json& j) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end();) {
            if (it.key().find("seconds") != std::string::npos) it = j.erase(it);
            else strip_seconds(*it++);
        }
    } else if (j.is_array()) {
        for (auto& x : j) strip_seconds(x);
    }
}

std::string error_path(const json& doc) {
    try {
        parse_job(doc);
    } catch (const JobError& e) {
        return e.path();
    }
    return "<accepted>";
}

json base() {
    return json::parse(R"({"schema": 1, "field": "F7",
        "algebras": {"A": {"type": "polynomial", "variables": ["x"]},
                     "B": {"type": "polynomial", "variables": ["y"]}},
        "hopf": {"C2": {"type": "cyclic", "order": 2}},
        "actions": {"s": {"hopf": "C2", "algebra": "A", "images": {"1": {"x": "x"}, "g": {"x": "-x"}}}},
        "coactions": {"r": {"hopf": "C2", "algebra": "B", "images": {"y": {"g": "y"}}}},
        "command": {"name": "smash", "action": "s", "coaction": "r"}})");
}

}  // namespace

TEST_CASE("minimal job parses with defaults filled in") {
    JobSpec j = parse_job(read_job("kx_validate.json"));
    CHECK(j.field == "F7");
    CHECK(j.command == "validate");
    CHECK(j.max_level == 3);
    CHECK(j.bound == 6);
    REQUIRE(j.algebras.count("A") == 1);
    CHECK(j.algebras.at("A")["degrees"] == json::array({1}));
    CHECK(j.entity_count() == 2);
}

TEST_CASE("undefined reference is reported with its path and name") {
    try {
        parse_job(read_job("undefined_action.json"));
        FAIL("accepted a job with an undefined action");
    } catch (const JobError& e) {
        CHECK(e.path() == "/command/action");
        CHECK(std::string(e.what()).find("'sigma'") != std::string::npos);
    }
}

TEST_CASE("quantum-plane job: eight entities and serialization round-trips") {
    JobSpec j = parse_job(read_job("quantum_plane_ext.json"));
    CHECK(j.entity_count() == 8);
    const json once = j.to_json();
    const json twice = parse_job(once).to_json();
    CHECK(once == twice);
    CHECK(parse_job(once.dump()).to_json().dump() == once.dump());
}

TEST_CASE("schema violations carry JSON pointers") {
    json d = base();
    d["extra"] = 1;
    CHECK(error_path(d) == "/extra");

    d = base();
    d["schema"] = 2;
    CHECK(error_path(d) == "/schema");

    d = base();
    d["field"] = "F8";
    CHECK(error_path(d) == "/field");

    d = base();
    d["bounds"] = {{"N", 0}, {"D", 4}};
    CHECK(error_path(d) == "/bounds/N");

    d = base();
    d["hopf"]["C2"]["order"] = "two";
    CHECK(error_path(d) == "/hopf/C2/order");

    d = base();
    d["algebras"]["A"]["colour"] = "red";
    CHECK(error_path(d) == "/algebras/A/colour");

    d = base();
    d["coactions"]["r"]["hopf"] = "C3";
    CHECK(error_path(d) == "/coactions/r/hopf");

    d = base();
    d["command"]["module"] = "s";
    CHECK(error_path(d) == "/command/module");

    d = base();
    d["command"] = "frobnicate";
    CHECK(error_path(d) == "/command");

    d = base();
    d["command"].erase("coaction");
    CHECK(error_path(d) == "/command/coaction");

    d = base();
    d["algebras"]["P"] = {{"generators", {"x", "y"}}, {"degrees", {1}}};
    CHECK(error_path(d) == "/algebras/P/degrees");

    CHECK(error_path(base()) == "<accepted>");
}

TEST_CASE("cyclic Ore definitions are rejected") {
    json d = base();
    d["algebras"]["O1"] = {{"type", "ore"}, {"base", "O2"}, {"sigma", {"u"}}};
    d["algebras"]["O2"] = {{"type", "ore"}, {"base", "O1"}, {"sigma", {"u"}}};
    CHECK(error_path(d).rfind("/algebras/O", 0) == 0);
}

TEST_CASE("syntax errors are input errors") {
    CHECK_THROWS_AS(parse_job(std::string("{\"schema\": 1,")), JobError);
}

TEST_CASE("exit codes: validate passes, bad images are input errors, refutation fails") {
    CHECK(run_job(parse_job(read_job("kx_validate.json"))).exit_code == 0);

    JobResult r = run_job(parse_job(read_job("dual_numbers_regular.json")));
    CHECK(r.exit_code == 1);
    CHECK(r.report["tables"]["regularity"] == "refuted");
    CHECK(r.report["verdict"] == "fail");

    json d = base();
    d["actions"]["s"]["images"]["g"]["x"] = "x^2";  // not homogeneous of degree 1
    JobResult bad = run_job(parse_job(d));
    CHECK(bad.exit_code == 2);
    CHECK(bad.report["error"]["path"] == "/actions/s/images/g/x");

    d = base();
    d["actions"]["s"]["images"]["g"].erase("x");
    CHECK(run_job(parse_job(d)).report["error"]["path"] == "/actions/s/images");
}

TEST_CASE("quantum-plane verify-ext-theorem job passes with dims 1;2;1") {
    JobResult r = run_job(parse_job(read_job("quantum_plane_ext.json")));
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdict"] == "pass");
    const json& t = r.report["tables"]["total_dims"];
    REQUIRE(t.size() >= 3);
    CHECK(t[0] == 1);
    CHECK(t[1] == 2);
    CHECK(t[2] == 1);
}

TEST_CASE("reports are deterministic apart from timings") {
    for (const char* name : {"quantum_plane_ext.json", "kx_validate.json", "dual_numbers_regular.json"}) {
        JobSpec j = parse_job(read_job(name));
        json a = run_job(j).report, b = run_job(j).report;
        strip_seconds(a);
        strip_seconds(b);
        CHECK_MESSAGE(a.dump() == b.dump(), name);
    }
}

TEST_CASE("every command runs on a small datum") {
    json d = base();
    d["modules"] = json::parse(R"({
        "Mr": {"type": "hmodule", "action": "s", "side": "right"},
        "Ml": {"type": "hmodule", "action": "s", "side": "left"},
        "Xr": {"type": "hopf_module", "coaction": "r", "side": "right"},
        "Xl": {"type": "module", "algebra": "B", "side": "left"},
        "Nr": {"type": "module", "algebra": "A", "side": "right"},
        "Yr": {"type": "hopf_module", "coaction": "r", "side": "right"}})");
    const std::vector<json> commands{
        {{"name", "validate"}},
        {{"name", "smash"}, {"action", "s"}, {"coaction", "r"}},
        {{"name", "resolve"}, {"module", "Mr"}},
        {{"name", "ext"}, {"algebra", "A"}},
        {{"name", "verify-ext-theorem"}, {"action", "s"}, {"coaction", "r"}, {"M", "Mr"}, {"X", "Xr"}},
        {{"name", "tor-check"}, {"action", "s"}, {"coaction", "r"}, {"N", "Nr"}, {"Y", "Yr"}, {"M", "Ml"}, {"X", "Xl"}},
        {{"name", "as-regular"}, {"action", "s"}, {"coaction", "r"}},
        {{"name", "nakayama"}, {"action", "s"}, {"coaction", "r"}},
    };
    CHECK(commands.size() == job_commands().size());
    for (const auto& c : commands) {
        d["command"] = c;
        JobResult r = run_job(parse_job(d));
        const std::string why = c.dump() + "\n" + render_report(r.report);
        CHECK_MESSAGE(r.exit_code == 0, why);
    }
}
