// Runs the law suite and prints a human-readable report; optionally writes a
// line-delimited JSON summary.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optics/laws/suite.hpp"

namespace laws = optics::laws;

int main(int argc, char** argv)
{
    CLI::App app{"Check profunctor optic laws over the instance registry"};
    laws::Config cfg;
    unsigned jobs = 1;
    std::string jsonl;
    std::vector<std::string> groups;
    bool quiet = false;
    app.add_option("--samples", cfg.samples, "Samples per law")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("-j,--jobs", jobs, "Worker threads")->capture_default_str();
    app.add_option("--jsonl", jsonl, "Write a JSON-lines summary to this file");
    app.add_option("--group", groups,
                   "Suites to run: core, structure, roundtrip, morphism, lemma, oracle, "
                   "mutation, well-behaved, all")
        ->capture_default_str();
    app.add_flag("-q,--quiet", quiet, "Only print failures and the summary");
    CLI11_PARSE(app, argc, argv);
    if (groups.empty()) groups = {"core", "mutation"};

    std::vector<laws::LawTask> tasks;
    auto add = [&tasks](std::vector<laws::LawTask> more) {
        for (auto& t : more) tasks.push_back(std::move(t));
    };
    for (const auto& g : groups) {
        if (g == "core" || g == "all") add(laws::core_tasks(cfg));
        if (g == "structure") add(laws::structure_law_tasks(cfg));
        if (g == "roundtrip") add(laws::roundtrip_tasks(cfg));
        if (g == "morphism") add(laws::morphism_tasks(cfg));
        if (g == "lemma") add(laws::lemma_tasks(cfg));
        if (g == "oracle") add(laws::traversal_oracle_tasks(cfg));
        if (g == "mutation" || g == "all") add(laws::mutation_tasks(cfg));
        if (g == "well-behaved" || g == "all") add(laws::wellbehaved_tasks(cfg));
    }

    const auto reports = laws::run_tasks(tasks, jobs);
    if (quiet) {
        std::vector<laws::LawReport> failed;
        for (const auto& r : reports) {
            if (!r.as_expected()) failed.push_back(r);
        }
        laws::write_human(std::cout, failed);
    } else {
        laws::write_human(std::cout, reports);
    }
    const auto bad = laws::unexpected_count(reports);
    std::cout << reports.size() << " checks, " << bad << " unexpected\n";

    if (!jsonl.empty()) {
        std::ofstream out(jsonl);
        if (!out) {
            std::cerr << "cannot write " << jsonl << '\n';
            return 1;
        }
        laws::write_jsonl(out, reports);
    }
    return bad == 0 ? 0 : 1;
}
