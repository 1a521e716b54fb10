#pragma once

// Law reports, the sampling driver, and a task runner.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "optics/laws/generators.hpp"

namespace optics::laws {

struct Config {
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

struct Counterexample {
    std::size_t trial = 0;
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string law;
    std::string instance;
    std::size_t samples = 0;
    bool passed = true;
    std::uint64_t seed = 0;
    /// False for deliberate fault injections, which are expected to fail.
    bool expected_to_hold = true;
    std::optional<Counterexample> counterexample;
    double elapsed_ms = 0.0;

    bool as_expected() const { return passed == expected_to_hold; }
};

/// One sampled comparison of the two sides of a law.
struct Trial {
    std::string input;
    std::string lhs;
    std::string rhs;
};

/// Renders both sides from the same rng state, so functions are probed at the
/// same inputs.
template <class X>
Trial compare(Rng& rng, std::string input, const X& lhs, const X& rhs)
{
    Rng a = rng;
    Rng b = rng;
    std::string l = render(lhs, a);
    std::string r = render(rhs, b);
    rng = a;
    return {std::move(input), std::move(l), std::move(r)};
}

template <class X>
std::string describe(const X& x, Rng& rng)
{
    Rng copy = rng;
    return render(x, copy);
}

/// The rng seed of trial `index`; a failing trial reproduces from it.
inline std::uint64_t trial_seed(std::uint64_t seed, const std::string& law,
                                const std::string& instance, std::size_t index)
{
    return mix(mix(seed ^ fnv1a(law + "@" + instance)) + index);
}

using TrialFn = std::function<Trial(Rng&)>;

/// Runs up to cfg.samples trials and stops at the first disagreement.
inline LawReport run_law(std::string law, std::string instance, const Config& cfg,
                         const TrialFn& trial)
{
    LawReport report;
    report.law = std::move(law);
    report.instance = std::move(instance);
    report.seed = cfg.seed;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        Rng rng(trial_seed(cfg.seed, report.law, report.instance, i));
        Trial t = trial(rng);
        ++report.samples;
        if (t.lhs != t.rhs) {
            report.passed = false;
            report.counterexample =
                Counterexample{i, std::move(t.input), std::move(t.lhs), std::move(t.rhs)};
            break;
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Re-runs a single trial of a law, e.g. the one a counterexample names.
inline Trial replay(const std::string& law, const std::string& instance, std::uint64_t seed,
                    std::size_t index, const TrialFn& trial)
{
    Rng rng(trial_seed(seed, law, instance, index));
    return trial(rng);
}

/// A deferred law check.
struct LawTask {
    std::string group;
    std::function<LawReport()> run;
};

/// Collects reports from concurrent checks.
class ReportCollector {
public:
    void add(std::size_t slot, LawReport report)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        entries_.emplace_back(slot, std::move(report));
    }

    /// Reports ordered by slot, independent of completion order.
    std::vector<LawReport> reports() const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto sorted = entries_;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<LawReport> out;
        out.reserve(sorted.size());
        for (auto& [slot, r] : sorted) out.push_back(std::move(r));
        return out;
    }

private:
    mutable std::mutex mutex_;
    std::vector<std::pair<std::size_t, LawReport>> entries_;
};

inline std::vector<LawReport> run_tasks(const std::vector<LawTask>& tasks, unsigned jobs = 1)
{
    ReportCollector collector;
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) collector.add(i, tasks[i].run());
        return collector.reports();
    }
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i = 0;
            {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next == tasks.size()) return;
                i = next++;
            }
            collector.add(i, tasks[i].run());
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return collector.reports();
}

inline nlohmann::json to_json(const LawReport& r)
{
    nlohmann::json j = {{"law", r.law},
                        {"instance", r.instance},
                        {"samples", r.samples},
                        {"passed", r.passed},
                        {"expected", r.expected_to_hold},
                        {"seed", r.seed},
                        {"elapsed_ms", r.elapsed_ms}};
    if (r.counterexample) {
        j["counterexample"] = {{"trial", r.counterexample->trial},
                               {"input", r.counterexample->input},
                               {"lhs", r.counterexample->lhs},
                               {"rhs", r.counterexample->rhs}};
    }
    return j;
}

/// One JSON object per line.
inline void write_jsonl(std::ostream& out, const std::vector<LawReport>& reports)
{
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
}

inline void write_human(std::ostream& out, const std::vector<LawReport>& reports)
{
    for (const auto& r : reports) {
        const char* status = r.as_expected() ? (r.passed ? "pass" : "fail (expected)")
                                             : (r.passed ? "PASS (expected failure)" : "FAIL");
        out << status << "  " << r.instance << "  " << r.law << "  [" << r.samples
            << " samples, seed " << r.seed << "]\n";
        if (r.counterexample && !r.as_expected()) {
            const auto& c = *r.counterexample;
            out << "    trial " << c.trial << "\n    input: " << c.input << "\n    lhs:   "
                << c.lhs << "\n    rhs:   " << c.rhs << '\n';
        }
    }
}

inline std::size_t unexpected_count(const std::vector<LawReport>& reports)
{
    return static_cast<std::size_t>(std::count_if(
        reports.begin(), reports.end(), [](const LawReport& r) { return !r.as_expected(); }));
}

}  // namespace optics::laws
