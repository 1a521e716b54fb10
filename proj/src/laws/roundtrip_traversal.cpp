#include "parts.hpp"
#include "roundtrip_common.hpp"

namespace optics::laws::parts {

std::vector<LawTask> traversal_roundtrips(const Config& cfg)
{
    std::vector<LawTask> tasks;
    const std::string law = "traversalC2P (traversalP2C l) = l";
    auto rt = [](const auto& l) { return traversal_c2p(traversal_p2c(l)); };
    constexpr Capabilities need = Capabilities::traversal();

    at_qualifying_entries<need>(
        tasks, law, "inorderP", cfg, [](Rng&) { return inorder_p<Integer, bool>(); }, rt);
    at_qualifying_entries<need>(
        tasks, law, "theP . pi1P", cfg,
        [](Rng&) {
            return compose(pi1_p<Integer, bool, std::string>(),
                           the_p<Pair<Integer, std::string>, Pair<bool, std::string>>());
        },
        rt);
    at_qualifying_entries<need>(
        tasks, law, "inorderP . pi1P", cfg,
        [](Rng&) {
            return compose(pi1_p<Integer, bool, std::string>(),
                           inorder_p<Pair<Integer, std::string>, Pair<bool, std::string>>());
        },
        rt);
    at_qualifying_entries<need>(
        tasks, law, "random traversal", cfg,
        [](Rng& rng) {
            return traversal_c2p(
                arbitrary<Traversal<Integer, bool, std::string, Option<Integer>>>(rng));
        },
        rt);
    return tasks;
}

}  // namespace optics::laws::parts
