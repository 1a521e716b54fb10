#include "optics/laws/suite.hpp"
#include "parts.hpp"
#include "roundtrip_common.hpp"

namespace optics::laws {

namespace parts {

namespace {

template <class X>
auto fixed(X x)
{
    return [x](Rng&) { return x; };
}

/// p2c (c2p x) = x on 100 random concrete optics of one kind, each checked on
/// cfg.samples probes.
template <class X, class RoundTrip>
void random_concrete(std::vector<LawTask>& tasks, const std::string& law, const std::string& kind,
                     const Config& cfg, RoundTrip roundtrip)
{
    for (std::size_t j = 0; j < random_optics_per_kind; ++j) {
        Rng rng(mix(cfg.seed ^ fnv1a(kind)) + j);
        X x = arbitrary<X>(rng);
        tasks.push_back(concrete_roundtrip_task(law, "random " + kind + " #" + std::to_string(j),
                                                cfg, fixed(x), roundtrip));
    }
}

}  // namespace

std::vector<LawTask> concrete_roundtrips(const Config& cfg)
{
    using S = std::string;
    using T = Option<Integer>;
    std::vector<LawTask> tasks;

    const std::string adapter_law = "adapterP2C (adapterC2P a) = a";
    auto adapter_rt = [](const auto& a) { return adapter_p2c(adapter_c2p(a)); };
    tasks.push_back(concrete_roundtrip_task(
        adapter_law, "flatten", cfg,
        fixed(flatten<Integer, bool, std::string, bool, Integer, std::string>()), adapter_rt));
    random_concrete<Adapter<Integer, bool, S, T>>(tasks, adapter_law, "adapter", cfg, adapter_rt);

    const std::string lens_law = "lensP2C (lensC2P l) = l";
    auto lens_rt = [](const auto& l) { return lens_p2c(lens_c2p(l)); };
    tasks.push_back(concrete_roundtrip_task(lens_law, "pi1", cfg,
                                            fixed(pi1<Integer, bool, std::string>()), lens_rt));
    tasks.push_back(concrete_roundtrip_task(lens_law, "sign", cfg, fixed(sign()), lens_rt));
    random_concrete<Lens<Integer, bool, S, T>>(tasks, lens_law, "lens", cfg, lens_rt);

    const std::string prism_law = "prismP2C (prismC2P p) = p";
    auto prism_rt = [](const auto& p) { return prism_p2c(prism_c2p(p)); };
    tasks.push_back(
        concrete_roundtrip_task(prism_law, "the", cfg, fixed(the<Integer, bool>()), prism_rt));
    tasks.push_back(concrete_roundtrip_task(prism_law, "whole", cfg, fixed(whole()), prism_rt));
    random_concrete<Prism<Integer, bool, S, T>>(tasks, prism_law, "prism", cfg, prism_rt);

    const std::string traversal_law = "traversalP2C (traversalC2P t) = t";
    auto traversal_rt = [](const auto& t) { return traversal_p2c(traversal_c2p(t)); };
    tasks.push_back(concrete_roundtrip_task(traversal_law, "inorderC", cfg,
                                            fixed(inorder_c<Integer, bool>()), traversal_rt));
    random_concrete<Traversal<Integer, bool, S, T>>(tasks, traversal_law, "traversal", cfg,
                                                    traversal_rt);
    return tasks;
}

}  // namespace parts

std::vector<LawTask> roundtrip_tasks(const Config& cfg)
{
    auto tasks = parts::concrete_roundtrips(cfg);
    for (auto* more : {&parts::profunctor_roundtrips, &parts::traversal_roundtrips}) {
        for (auto& t : more(cfg)) tasks.push_back(std::move(t));
    }
    return tasks;
}

}  // namespace optics::laws
