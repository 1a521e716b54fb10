#include "optics/laws/checks.hpp"
#include "optics/laws/suite.hpp"

namespace optics::laws {

std::vector<LawTask> structure_law_tasks(const Config& cfg)
{
    std::vector<LawTask> tasks;
    DefaultRegistry::for_each([&](auto entry) {
        using P = typename decltype(entry)::type;
        for (auto& t : structure_law_tasks_at<P>(cfg)) tasks.push_back(std::move(t));
    });
    return tasks;
}

}  // namespace optics::laws
