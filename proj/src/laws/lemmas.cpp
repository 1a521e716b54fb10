#include "optics/laws/checks.hpp"
#include "optics/laws/suite.hpp"

namespace optics::laws {

std::vector<LawTask> lemma_tasks(const Config& cfg)
{
    std::vector<LawTask> tasks;
    DefaultRegistry::for_each([&](auto entry) {
        using P = typename decltype(entry)::type;
        if constexpr (Cartesian<P>) tasks.push_back(lemma_fork_first_task<P>(cfg));
        if constexpr (Cocartesian<P>) tasks.push_back(lemma_right_either_task<P>(cfg));
    });
    tasks.push_back(lemma_traverse_concrete_task(cfg));
    DefaultRegistry::for_each([&](auto entry) {
        using P = typename decltype(entry)::type;
        if constexpr (TraversalCapable<P>) tasks.push_back(lemma_traverse_done_task<P>(cfg));
    });
    tasks.push_back(lemma_right_left_identity_task(cfg));
    DefaultRegistry::for_each([&](auto entry) {
        using P = typename decltype(entry)::type;
        if constexpr (TraversalCapable<P>) tasks.push_back(lemma_traverse_single_task<P>(cfg));
    });
    for (std::size_t n = 0; n <= 8; ++n) tasks.push_back(lemma_fuse_single_task(cfg, n));
    return tasks;
}

}  // namespace optics::laws
