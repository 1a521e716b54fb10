#include "optics/laws/checks.hpp"
#include "optics/laws/suite.hpp"

namespace optics::laws {

namespace {

/// dimap f g h = f . h . g: type-correct only when every type coincides, and
/// composes in the wrong order.
struct SwappedArrow {
    template <class A, class B>
    using type = Fn<A, B>;

    template <class X>
    static Fn<X, X> dimap(Fn<X, X> f, Fn<X, X> g, Fn<X, X> h)
    {
        return after(std::move(f), after(std::move(h), std::move(g)));
    }
};

/// lensP2C seeded with Lens id snd in place of Lens id fst.
template <class O>
auto lens_p2c_snd(const O& optic)
{
    using A = typename optic_traits<O>::focus_type;
    return optic(LensOf<A, A>{}, Lens<A, A, A, A>{id<A>(), snd<A, A>()});
}

bool odd(Integer n)
{
    return n % 2 != 0;
}

}  // namespace

std::vector<LawTask> traversal_oracle_tasks(const Config& cfg, std::size_t trees)
{
    Config oracle_cfg = cfg;
    oracle_cfg.samples = trees;
    using Result = Pair<Tree<bool>, Integer>;
    using Counter = StateApplicative<Integer>;
    const Fn<Integer, State<Integer, bool>> count = count_odd;

    auto via_optic = [count](const Tree<Integer>& t, Integer s0) -> Result {
        return traverse_of<Counter>(inorder_p<Integer, bool>(), count)(t).run(s0);
    };
    auto direct = [count](const Tree<Integer>& t, Integer s0) -> Result {
        return inorder<Counter>(count, t).run(s0);
    };
    auto fold = [](const Tree<Integer>& t, Integer s0) -> Result {
        Integer n = s0;
        for (Integer x : inorder_labels(t)) n += odd(x) ? 1 : 0;
        return {map_tree(t, odd), n};
    };
    auto trial = [](auto lhs, auto rhs) {
        return [lhs, rhs](Rng& rng) {
            auto t = sample_tree<Integer>(rng, 31);
            auto s0 = arbitrary<Integer>(rng);
            std::string input = "tree=" + describe(t, rng) + " s0=" + std::to_string(s0);
            return compare(rng, input, lhs(t, s0), rhs(t, s0));
        };
    };
    return {
        law_task("oracle", "traverseOf inorderP countOdd = inorder countOdd", "upstar-state-integer",
                 oracle_cfg, trial(via_optic, direct)),
        law_task("oracle", "traverseOf inorderP countOdd = in-order fold", "upstar-state-integer",
                 oracle_cfg, trial(via_optic, fold)),
        law_task("oracle", "inorder countOdd = in-order fold", "upstar-state-integer", oracle_cfg,
                 trial(direct, fold)),
    };
}

std::vector<LawTask> mutation_tasks(const Config& cfg)
{
    auto tasks = profunctor_law_tasks<SwappedArrow, Integer, Integer, Integer, Integer, Integer,
                                      Integer>(cfg, "swapped-dimap function arrow", false);
    for (auto& t : tasks) t.group = "mutation";

    const std::string law = "lensP2C (lensC2P l) = l, seeded with Lens id snd";
    auto broken_rt = [](const auto& l) { return lens_p2c_snd(lens_c2p(l)); };
    auto fixed = [](auto x) { return [x](Rng&) { return x; }; };
    tasks.push_back(concrete_roundtrip_task(law, "sign", cfg, fixed(sign()), broken_rt, false));
    tasks.push_back(concrete_roundtrip_task(law, "pi1", cfg, fixed(pi1<Integer, Integer, bool>()),
                                            broken_rt, false));

    using S = Pair<Integer, bool>;
    Lens<Integer, Integer, S, S> ignoring{fst<Integer, bool>(), snd<Integer, S>()};
    tasks.push_back(put_get_task("update-ignoring lens", cfg, ignoring, false));
    for (std::size_t i = 2; i < tasks.size(); ++i) tasks[i].group = "mutation";
    return tasks;
}

std::vector<LawTask> wellbehaved_tasks(const Config& cfg)
{
    auto pi1_mono = pi1<Integer, Integer, bool>();
    return {
        put_get_task("pi1", cfg, pi1_mono),
        get_put_task("pi1", cfg, pi1_mono),
        // update (False, 0) = 0, whose view is True.
        put_get_task("sign", cfg, sign(), false),
        get_put_task("sign", cfg, sign()),
    };
}

std::vector<LawTask> core_tasks(const Config& cfg)
{
    std::vector<LawTask> tasks;
    for (auto* group : {&structure_law_tasks, &roundtrip_tasks, &morphism_tasks, &lemma_tasks}) {
        for (auto& t : group(cfg)) tasks.push_back(std::move(t));
    }
    for (auto& t : traversal_oracle_tasks(cfg)) tasks.push_back(std::move(t));
    return tasks;
}

}  // namespace optics::laws
