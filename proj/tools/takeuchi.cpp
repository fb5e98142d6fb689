#include "takeuchi/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using takeuchi::json;

namespace {

json error_report(const std::string& command, const std::string& path, const std::string& msg) {
    return {{"schema", takeuchi::job_schema_version},
            {"command", command},
            {"verdict", "input error"},
            {"error", {{"path", path}, {"message", msg}}},
            {"exit_code", 2}};
}

// The command given on the command line wins over the job file; a job that
// names a different command is rejected rather than silently rewritten.
bool merge_command(json& doc, const std::string& command, std::string& err) {
    if (!doc.is_object()) return true;  // parse_job reports the type error
    if (!doc.contains("command")) {
        doc["command"] = command;
        return true;
    }
    json& c = doc["command"];
    std::string named;
    if (c.is_string()) named = c.get<std::string>();
    else if (c.is_object() && c.contains("name") && c["name"].is_string()) named = c["name"].get<std::string>();
    else if (c.is_object()) c["name"] = command, named = command;
    if (named != command) {
        err = "job runs '" + named + "' but '" + command + "' was requested";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smash products, Ext algebras and AS-regularity over exact fields"};
    app.require_subcommand(1, 1);

    std::string job_path, out_path, bounds;
    std::optional<long long> seed;
    for (const auto& name : takeuchi::job_commands()) {
        auto* sub = app.add_subcommand(name, "run the " + name + " command of a job file");
        sub->add_option("--job", job_path, "job file (JSON, schema 1)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "report file (JSON)");
        sub->add_option("--bounds", bounds, "override bounds as N,D");
        sub->add_option("--seed", seed, "accepted for interface stability; every validator here is exhaustive");
    }
    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    std::ifstream in(job_path);
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    takeuchi::JobResult result;
    auto fail_input = [&](const std::string& path, const std::string& msg) {
        result.exit_code = 2;
        result.report = error_report(command, path, msg);
    };
    std::string err;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        fail_input("", std::string("invalid JSON: ") + e.what());
    }
    if (result.exit_code == 0 && !merge_command(doc, command, err)) fail_input("/command", err);
    if (result.exit_code == 0 && !bounds.empty()) {
        int n = 0, d = 0;
        char comma = 0;
        std::istringstream bs(bounds);
        if (!(bs >> n >> comma >> d) || comma != ',' || !bs.eof()) fail_input("--bounds", "expected N,D");
        else if (doc.is_object()) doc["bounds"] = {{"N", n}, {"D", d}};
    }
    if (result.exit_code == 0) {
        try {
            result = takeuchi::run_job(takeuchi::parse_job(doc));
        } catch (const takeuchi::JobError& e) {
            fail_input(e.path(), e.what());
        }
    }
    if (seed) result.report["seed"] = *seed;

    std::cout << takeuchi::render_report(result.report);
    if (out_path.empty() && doc.is_object() && doc.contains("output") && doc["output"].is_string())
        out_path = doc["output"].get<std::string>();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "takeuchi: cannot write " << out_path << "\n";
            return 2;
        }
        out << result.report.dump(2) << "\n";
    }
    return result.exit_code;
}
