#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subext/error.hpp"
#include "subext/scenarios.hpp"

namespace {

// Exit codes of `verify`.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_to(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

int status_exit(subext::Status s) {
    switch (s) {
    case subext::Status::Pass:
        return kExitPass;
    case subext::Status::Budget:
        return kExitBudget;
    case subext::Status::Fail:
        return kExitFail;
    }
    return kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subfunctors of Ext^1 over small local rings"};
    app.require_subcommand(1);

    std::string ws_path;
    app.add_option("--workspace", ws_path, "Workspace file (default: bundled desk workspace)")->check(CLI::ExistingFile);

    auto* list = app.add_subcommand("list-scenarios", "List registered scenarios");

    auto* verify = app.add_subcommand("verify", "Run scenarios and emit their reports");
    std::vector<std::string> names;
    bool all = false;
    std::uint64_t seed = 1;
    std::uint64_t budget = subext::kDefaultBudget;
    std::string out;
    int threads = 1;
    bool no_time = false;
    verify->add_option("scenario", names, "Scenario names");
    verify->add_flag("--all", all, "Run every registered scenario");
    verify->add_option("--seed", seed, "Seed of sampled instances");
    verify->add_option("--budget", budget, "Enumerated class budget per Ext group");
    verify->add_option("--out", out, "Report file (a directory with --all or several scenarios)");
    verify->add_option("--threads", threads, "Scenarios run concurrently")->check(CLI::PositiveNumber);
    verify->add_flag("--no-time", no_time, "Omit wall_ms from reports");

    auto* comp = app.add_subcommand("compute", "Run one computation over workspace objects");
    subext::ComputeRequest req;
    comp->add_option("cmd", req.cmd, "ring-info | mod-invariants | ext | ext-sub | ext-ul | verify-ses")
        ->required()
        ->check(CLI::IsMember({"ring-info", "mod-invariants", "ext", "ext-sub", "ext-ul", "verify-ses"}));
    comp->add_option("labels", req.labels, "Workspace labels (ring, or module M [N])");
    comp->add_option("--fn", req.fns, "mu | nu[:IDEAL] | et[:IDEAL] | len_tensor:M | len_hom_from:M | len_hom_to:M");
    comp->add_option("--ideal", req.ideal, "Ideal label for ext-ul, or m");
    comp->add_option("--s", req.s, "Cohen-Macaulay stratum for ext-ul")->check(CLI::Range(0, 1));
    comp->add_option("--degree", req.degree, "Ext degree for ext")->check(CLI::PositiveNumber);
    comp->add_option("--class", req.class_index, "Class index for verify-ses");
    comp->add_option("--budget", req.budget, "Enumerated class budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto& s : subext::scenario_registry()) {
                std::cout << s.name << "\t" << s.claim << "\n";
            }
            return 0;
        }
        std::string ws_text = ws_path.empty() ? std::string() : slurp(ws_path);
        if (*comp) {
            subext::Workspace ws = subext::parse_workspace(ws_text.empty() ? subext::desk_workspace_text() : ws_text);
            bool ok = true;
            std::cout << subext::compute(ws, req, &ok);
            return ok ? 0 : 1;
        }
        if (all) {
            names.clear();
            for (const auto& s : subext::scenario_registry()) {
                names.push_back(s.name);
            }
        }
        if (names.empty()) {
            std::cerr << "verify: give a scenario name or --all\n";
            return kExitUsage;
        }
        subext::ScenarioOptions opts;
        opts.seed = seed;
        opts.budget = budget;
        opts.workspace = ws_text;
        auto results = subext::run_scenarios(names, opts, threads);
        int code = kExitPass;
        for (const auto& r : results) {
            code = std::max(code, status_exit(r.status) == kExitFail ? 10 : status_exit(r.status));
        }
        if (results.size() == 1 && names.size() == 1 && !all) {
            const std::string text = subext::to_text(results.front(), !no_time);
            if (out.empty()) {
                std::cout << text;
            } else {
                write_to(out, text);
            }
        } else {
            if (!out.empty()) {
                std::filesystem::create_directories(out);
            }
            for (const auto& r : results) {
                if (!out.empty()) {
                    write_to((std::filesystem::path(out) / (r.scenario + ".json")).string(), subext::to_text(r, !no_time));
                }
                std::cout << subext::status_name(r.status) << "\t" << r.scenario << "\t" << r.instances.size()
                          << " instances\t" << static_cast<long>(r.wall_ms) << " ms\n";
            }
        }
        return code == 10 ? kExitFail : code;
    } catch (const subext::Error& e) {
        std::cerr << subext::error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
