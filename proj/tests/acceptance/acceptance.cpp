// Runs every acceptance criterion at full strength and prints one
// PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "contacts/cli.hpp"
#include "optics/laws/registry.hpp"
#include "optics/laws/suite.hpp"
#include "optics/optic.hpp"

using namespace optics;
using namespace optics::laws;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

unsigned jobs()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

Config full()
{
    Config cfg;
    cfg.samples = 1000;
    cfg.seed = 0;
    return cfg;
}

/// Every report as expected; unexpected ones are listed.
Outcome all_expected(const std::vector<LawReport>& reports)
{
    std::ostringstream detail;
    detail << reports.size() << " checks";
    bool ok = !reports.empty();
    for (const auto& r : reports) {
        if (r.as_expected()) continue;
        ok = false;
        detail << "; unexpected: " << r.instance << " / " << r.law;
        if (r.counterexample) detail << " at " << r.counterexample->input;
    }
    return {ok, detail.str()};
}

bool covers(const std::vector<LawReport>& reports, const std::vector<std::string>& instances)
{
    std::set<std::string> seen;
    for (const auto& r : reports) seen.insert(r.instance);
    return std::all_of(instances.begin(), instances.end(),
                       [&](const std::string& i) { return seen.count(i) != 0; });
}

Outcome worked_example()
{
    using P = Pair<Integer, bool>;
    auto square = compose(pi1_p<Integer, Integer, bool>(), the_p<P, P>())(
        function_arrow, Fn<Integer, Integer>([](Integer x) { return x * x; }));
    const auto got = square(Option<P>({3, true}));
    const bool ok = got == Option<P>({9, true});
    return {ok, ok ? "Just (3, True) -> Just (9, True)" : "wrong result"};
}

Outcome round_trips()
{
    const auto start = std::chrono::steady_clock::now();
    const auto reports = run_tasks(roundtrip_tasks(full()), jobs());
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto outcome = all_expected(reports);
    const bool fast = seconds < 60.0;
    outcome.passed = outcome.passed && fast;
    outcome.detail += ", " + std::to_string(seconds) + " s" + (fast ? "" : " (over a minute)");
    return outcome;
}

Outcome structure_laws()
{
    const auto reports = run_tasks(structure_law_tasks(full()), jobs());
    auto outcome = all_expected(reports);
    if (!covers(reports, DefaultRegistry::names())) {
        outcome.passed = false;
        outcome.detail += "; some registry entry has no checks";
    }
    return outcome;
}

Outcome lemmas()
{
    const auto reports = run_tasks(lemma_tasks(full()), jobs());
    auto outcome = all_expected(reports);
    std::vector<std::string> lengths;
    for (int n = 0; n <= 8; ++n) lengths.push_back("funlist length " + std::to_string(n));
    if (!covers(reports, lengths)) {
        outcome.passed = false;
        outcome.detail += "; FunList lengths 0..8 not all checked";
    }
    return outcome;
}

Outcome traversal_oracle()
{
    return all_expected(run_tasks(traversal_oracle_tasks(full(), 500), jobs()));
}

Outcome morphisms()
{
    const auto reports = run_tasks(morphism_tasks(full()), jobs());
    auto outcome = all_expected(reports);
    if (!covers(reports, {"adapter -> function-arrow", "lens -> function-arrow",
                          "prism -> function-arrow", "traversal -> function-arrow"})) {
        outcome.passed = false;
        outcome.detail += "; a concrete entry is missing";
    }
    return outcome;
}

Outcome mutations()
{
    const auto reports = run_tasks(mutation_tasks(full()), jobs());
    auto outcome = all_expected(reports);
    auto caught = [&](const std::string& instance, const std::string& law_prefix) {
        return std::any_of(reports.begin(), reports.end(), [&](const LawReport& r) {
            return r.instance == instance && r.law.rfind(law_prefix, 0) == 0 && !r.passed &&
                   !r.expected_to_hold;
        });
    };
    const bool all_caught = caught("swapped-dimap function arrow", "dimap (f' . f)") &&
                            caught("sign", "lensP2C") && caught("pi1", "lensP2C") &&
                            caught("update-ignoring lens", "view (update");
    outcome.passed = outcome.passed && all_caught;
    if (!all_caught) outcome.detail += "; an injected fault went unnoticed";
    return outcome;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome cli_golden()
{
    const std::filesystem::path data = CONTACTS_DATA_DIR;
    const auto sample = (data / "sample_book.json").string();
    std::ostringstream err;
    std::vector<std::string> problems;

    std::ostringstream listed;
    if (contacts::run_cli({"list", sample}, listed, err) != 0 ||
        listed.str() != "555 123 4567\n5551112222\n") {
        problems.push_back("list output");
    }

    const auto golden = slurp(data / "sample_book_tidy.golden.json");
    std::ostringstream once;
    if (contacts::run_cli({"tidy", sample}, once, err) != 0 || once.str() != golden) {
        problems.push_back("tidy differs from golden");
    }
    const auto tmp = std::filesystem::temp_directory_path() / "contacts_acceptance_tidy.json";
    std::ofstream(tmp, std::ios::binary) << once.str();
    std::ostringstream twice;
    if (contacts::run_cli({"tidy", tmp.string()}, twice, err) != 0 || twice.str() != once.str()) {
        problems.push_back("tidy not idempotent");
    }
    std::filesystem::remove(tmp);

    std::ostringstream ignored;
    for (const char* bad : {"malformed_book.json", "truncated_book.json"}) {
        if (contacts::run_cli({"list", (data / bad).string()}, ignored, err) != 2) {
            problems.push_back(std::string(bad) + " did not exit 2");
        }
    }

    std::string detail = "list, tidy golden, idempotence, malformed exit 2";
    for (const auto& p : problems) detail += "; " + p;
    return {problems.empty(), detail};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 worked example", worked_example},
        {"2 concrete/profunctor round trips", round_trips},
        {"3 profunctor structure laws", structure_laws},
        {"4 lemmas", lemmas},
        {"5 traversal oracle", traversal_oracle},
        {"6 profunctor morphisms", morphisms},
        {"7 mutation sensitivity", mutations},
        {"8 CLI golden", cli_golden},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = check();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.passed ? 0 : 1;
        std::cout << (o.passed ? "PASS " : "FAIL ") << name << ": " << o.detail << " ["
                  << seconds << " s]" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
