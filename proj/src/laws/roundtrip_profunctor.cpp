#include "parts.hpp"
#include "roundtrip_common.hpp"

namespace optics::laws::parts {

std::vector<LawTask> profunctor_roundtrips(const Config& cfg)
{
    using S = std::string;
    using T = Option<Integer>;
    std::vector<LawTask> tasks;

    const std::string adapter_law = "adapterC2P (adapterP2C l) = l";
    auto adapter_rt = [](const auto& l) { return adapter_c2p(adapter_p2c(l)); };
    at_qualifying_entries<Capabilities::adapter()>(
        tasks, adapter_law, "flattenP", cfg,
        [](Rng&) {
            return adapter_c2p(flatten<Integer, bool, std::string, bool, Integer, std::string>());
        },
        adapter_rt);
    at_qualifying_entries<Capabilities::adapter()>(
        tasks, adapter_law, "identity optic", cfg,
        [](Rng&) { return identity_optic<Integer, bool>(); }, adapter_rt);
    at_qualifying_entries<Capabilities::adapter()>(
        tasks, adapter_law, "random adapter", cfg,
        [](Rng& rng) { return adapter_c2p(arbitrary<Adapter<Integer, bool, S, T>>(rng)); },
        adapter_rt);

    const std::string lens_law = "lensC2P (lensP2C l) = l";
    auto lens_rt = [](const auto& l) { return lens_c2p(lens_p2c(l)); };
    at_qualifying_entries<Capabilities::lens()>(
        tasks, lens_law, "pi1P", cfg, [](Rng&) { return pi1_p<Integer, bool, std::string>(); },
        lens_rt);
    at_qualifying_entries<Capabilities::lens()>(
        tasks, lens_law, "pi11P", cfg,
        [](Rng&) { return pi11_p<Integer, bool, std::string, Integer>(); }, lens_rt);
    at_qualifying_entries<Capabilities::lens()>(
        tasks, lens_law, "signP", cfg, [](Rng&) { return lens_c2p(sign()); }, lens_rt);
    at_qualifying_entries<Capabilities::lens()>(
        tasks, lens_law, "random lens", cfg,
        [](Rng& rng) { return lens_c2p(arbitrary<Lens<Integer, bool, S, T>>(rng)); }, lens_rt);

    const std::string prism_law = "prismC2P (prismP2C l) = l";
    auto prism_rt = [](const auto& l) { return prism_c2p(prism_p2c(l)); };
    at_qualifying_entries<Capabilities::prism()>(
        tasks, prism_law, "theP", cfg, [](Rng&) { return the_p<Integer, bool>(); }, prism_rt);
    at_qualifying_entries<Capabilities::prism()>(
        tasks, prism_law, "wholeP", cfg, [](Rng&) { return prism_c2p(whole()); }, prism_rt);
    at_qualifying_entries<Capabilities::prism()>(
        tasks, prism_law, "random prism", cfg,
        [](Rng& rng) { return prism_c2p(arbitrary<Prism<Integer, bool, S, T>>(rng)); }, prism_rt);
    return tasks;
}

}  // namespace optics::laws::parts
