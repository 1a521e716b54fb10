#include "optics/laws/checks.hpp"
#include "optics/laws/suite.hpp"

namespace optics::laws {

std::vector<LawTask> morphism_tasks(const Config& cfg)
{
    using S = std::string;
    using T = Option<Integer>;
    using S2 = Pair<Integer, bool>;
    using T2 = std::string;
    return {
        morphism_task<AdapterEntry, Integer, bool, S, T, S2, T2>(
            "dimap f g . flip adapterC2P k = flip adapterC2P k . dimap f g", cfg,
            [](const auto& x) { return adapter_c2p(x); }),
        morphism_task<LensEntry, Integer, bool, S, T, S2, T2>(
            "dimap f g . flip lensC2P k = flip lensC2P k . dimap f g", cfg,
            [](const auto& x) { return lens_c2p(x); }),
        morphism_task<PrismEntry, Integer, bool, S, T, S2, T2>(
            "dimap f g . flip prismC2P k = flip prismC2P k . dimap f g", cfg,
            [](const auto& x) { return prism_c2p(x); }),
        morphism_task<TraversalEntry, Integer, bool, S, T, S2, T2>(
            "dimap f g . flip traversalC2P k = flip traversalC2P k . dimap f g", cfg,
            [](const auto& x) { return traversal_c2p(x); }),
    };
}

}  // namespace optics::laws
