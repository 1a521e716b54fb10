#include <gtest/gtest.h>

#include <tuple>

#include "optics/laws/generators.hpp"
#include "optics/optic.hpp"

using namespace optics;
using optics::laws::Rng;

namespace {

using T3 = Tree<Integer>;
using Ints = std::vector<Integer>;
using OptionStar = UpStarOf<OptionApplicative>;
using St = StateApplicative<Integer>;

T3 small_tree()
{
    return T3::node(T3::leaf(1), 2, T3::leaf(3));
}

Fn<Integer, Integer> succ() { return [](Integer x) { return x + 1; }; }

}  // namespace

TEST(Optic, WorkedExampleSquaresInsideJust)
{
    using P = Pair<Integer, bool>;
    auto o = compose(pi1_p<Integer, Integer, bool>(), the_p<P, P>());
    auto square = over(o, [](Integer x) { return x * x; });
    EXPECT_EQ(square(Option<P>({3, true})), Option<P>({9, true}));
    EXPECT_EQ(square(Option<P>()), Option<P>());
}

TEST(Optic, AdapterConversions)
{
    using Nested = Pair<Pair<Integer, Integer>, Integer>;
    using Flat = std::tuple<Integer, Integer, Integer>;
    auto o = adapter_c2p(flatten<Integer, Integer, Integer, Integer, Integer, Integer>());
    EXPECT_EQ(o(function_arrow, id<Flat>())(Nested{{1, 2}, 3}), (Nested{{1, 2}, 3}));
    Fn<Flat, Flat> bump = [](const Flat& t) {
        return Flat{std::get<0>(t) + 1, std::get<1>(t), std::get<2>(t)};
    };
    EXPECT_EQ(o(function_arrow, bump)(Nested{{1, 2}, 3}), (Nested{{2, 2}, 3}));

    auto a = adapter_p2c(identity_optic<Integer, Integer>());
    for (Integer x = -20; x <= 20; ++x) {
        EXPECT_EQ(a.from(x), x);
        EXPECT_EQ(a.to(x), x);
    }
}

TEST(Optic, LensConversions)
{
    using P = Pair<Integer, char>;
    EXPECT_EQ((lens_c2p(pi1<Integer, Integer, char>())(function_arrow, succ())(P{3, 'a'})),
              (P{4, 'a'}));
    Fn<bool, bool> negation = [](bool b) { return !b; };
    EXPECT_EQ(lens_c2p(sign())(function_arrow, negation)(-7), 7);

    auto l = lens_p2c(identity_optic<Integer, Integer>());
    EXPECT_EQ(l.view(4), 4);
    EXPECT_EQ(l.update({5, 4}), 5);

    auto round = lens_p2c(lens_c2p(sign()));
    Rng rng(0);
    for (int i = 0; i < 1000; ++i) {
        const auto x = laws::arbitrary<Integer>(rng);
        const auto b = laws::arbitrary<bool>(rng);
        EXPECT_EQ(round.view(x), sign().view(x));
        EXPECT_EQ(round.update({b, x}), sign().update({b, x}));
    }
}

TEST(Optic, PrismConversions)
{
    auto o = prism_c2p(the<Integer, Integer>());
    EXPECT_EQ(o(function_arrow, succ())(Option<Integer>(3)), Option<Integer>(4));
    EXPECT_EQ(o(function_arrow, succ())(Option<Integer>()), Option<Integer>());

    auto p = prism_p2c(identity_optic<Integer, Integer>());
    EXPECT_EQ(p.match(4), (Sum<Integer, Integer>::right(4)));
    EXPECT_EQ(p.build(4), 4);

    auto round = prism_p2c(prism_c2p(whole()));
    Rng rng(0);
    for (int i = 0; i < 1000; ++i) {
        const auto x = laws::arbitrary<double>(rng);
        const auto n = laws::arbitrary<Integer>(rng);
        EXPECT_EQ(laws::key_of(round.match(x)), laws::key_of(whole().match(x)));
        EXPECT_EQ(round.build(n), whole().build(n));
    }
}

TEST(Optic, TraverseActsOnEveryElement)
{
    FunList<Integer, Integer, Ints> l{{1, 2, 3}, [](const Slice<Integer>& bs) { return bs.to_vector(); }};
    auto lifted = traverse<Integer, Integer, Integer, Ints>(function_arrow, succ());
    const auto r = lifted(l);
    EXPECT_EQ(r.contents, (Ints{2, 3, 4}));
    EXPECT_EQ(r.fill({7, 8, 9}), (Ints{7, 8, 9}));

    const auto d = lifted(done<Integer, Integer, Ints>({5}));
    EXPECT_TRUE(d.is_done());
    EXPECT_EQ(d.fill({}), Ints{5});

    auto failing = traverse<Integer, Integer, Integer, Ints>(
        OptionStar{}, UpStar<OptionApplicative, Integer, Integer>{[](Integer x) {
            return x == 2 ? Option<Integer>() : Option<Integer>(x);
        }});
    EXPECT_FALSE(failing.run(l).has_value());
}

// traverse (Traversal h) = Traversal (travFunList h), at the FunList instance.
TEST(Optic, TraverseAtTheTraversalInstance)
{
    using TI = TraversalOf<Integer, Integer>;
    using FLI = FunList<Integer, Integer, Integer>;
    auto via_traverse = traverse<Integer, Integer, Integer, Integer>(
        TI{}, Traversal<Integer, Integer, Integer, Integer>{single_fn<Integer, Integer>()});
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const FLI l = laws::sample_funlist<Integer, Integer, Integer>(rng, laws::uniform(rng, 0, 8));
        const auto a = via_traverse.extract(l);
        const auto b = trav_funlist<FunListApplicative<Integer, Integer>>(
            single_fn<Integer, Integer>(), l);
        ASSERT_EQ(a.contents, b.contents);
        const auto bs = laws::sample_vector<Integer>(rng, a.size());
        EXPECT_EQ(a.fill(bs).contents, b.fill(bs).contents);
        const auto cs = laws::sample_vector<Integer>(rng, l.size());
        EXPECT_EQ(a.fill(bs).fill(cs), b.fill(bs).fill(cs));
    }
}

TEST(Optic, TraversalConversions)
{
    Fn<Integer, Integer> doubled = [](Integer x) { return 2 * x; };
    EXPECT_EQ((inorder_p<Integer, Integer>()(function_arrow, doubled)(small_tree())),
              T3::node(T3::leaf(2), 4, T3::leaf(6)));

    auto single_back = traversal_p2c(identity_optic<Integer, Integer>());
    const auto e = single_back.extract(5);
    EXPECT_EQ(e.contents, Ints{5});
    EXPECT_EQ(e.fill({8}), 8);

    auto round = traversal_p2c(inorder_p<Integer, Integer>());
    Rng rng(0);
    for (int i = 0; i < 300; ++i) {
        const auto t = laws::sample_tree<Integer>(rng, 15);
        const auto a = round.extract(t);
        const auto b = inorder_c<Integer, Integer>().extract(t);
        ASSERT_EQ(a.contents, b.contents);
        const auto bs = laws::sample_vector<Integer>(rng, a.size());
        EXPECT_EQ(a.fill(bs), b.fill(bs));
    }
}

TEST(Optic, TraverseOfThreadsEffects)
{
    const auto [flags, count] = traverse_of<St>(inorder_p<Integer, bool>(), count_odd)(small_tree()).run(0);
    EXPECT_EQ(flags, (Tree<bool>::node(Tree<bool>::leaf(true), false, Tree<bool>::leaf(true))));
    EXPECT_EQ(count, 2);

    Rng rng(0);
    for (int i = 0; i < 200; ++i) {
        const auto t = laws::sample_tree<Integer>(rng, 15);
        auto pure_lift = [](Integer x) { return Identity<Integer>{x}; };
        EXPECT_EQ((traverse_of<IdentityApplicative>(inorder_p<Integer, Integer>(), pure_lift)(t).value), t);
    }
}

TEST(Optic, IdentityTransformer)
{
    EXPECT_EQ(identity_transformer<Integer>(function_arrow)(5), 5);
    EXPECT_EQ(identity_transformer<Integer>(OptionStar{}).run(5), Option<Integer>(5));
}

TEST(Optic, Composites)
{
    using Inner = Pair<Integer, char>;
    using Outer = Pair<Inner, char>;
    EXPECT_EQ((over(pi11_p<Integer, Integer, char, char>(), [](Integer x) { return x + 1; })(
                  Outer{{3, 'a'}, 'b'})),
              (Outer{{4, 'a'}, 'b'}));
    EXPECT_EQ((over(the_p<Integer, Integer>(), [](Integer x) { return x + 1; })(Option<Integer>())),
              Option<Integer>());

    // Every pi1 inside every node of a tree.
    using TP = Tree<Pair<Integer, bool>>;
    auto firsts = compose(pi1_p<Integer, Integer, bool>(), inorder_p<Pair<Integer, bool>, Pair<Integer, bool>>());
    const TP t = TP::node(TP::leaf({1, true}), {2, false}, TP());
    EXPECT_EQ(over(firsts, [](Integer x) { return -x; })(t),
              TP::node(TP::leaf({-1, true}), {-2, false}, TP()));
}

using LensOptic = decltype(pi1_p<Integer, Integer, bool>());
using PrismOptic = decltype(the_p<Integer, Integer>());
using Mixed = decltype(compose(pi1_p<Integer, Integer, bool>(),
                               the_p<Pair<Integer, bool>, Pair<Integer, bool>>()));
static_assert(LensOptic::requirement == Capabilities::lens());
static_assert(PrismOptic::requirement == Capabilities::prism());
static_assert(Mixed::requirement == (Capabilities::lens() | Capabilities::prism()));
static_assert(!Mixed::requirement.has_monoidal());
static_assert(LensOptic::applicable_at<LensOf<Integer, Integer>>);
static_assert(!LensOptic::applicable_at<PrismOf<Integer, Integer>>);
static_assert(!PrismOptic::applicable_at<LensOf<Integer, Integer>>);
static_assert(Mixed::applicable_at<FunctionArrow>);
static_assert(!Mixed::applicable_at<LensOf<Integer, Integer>>);
static_assert(decltype(inorder_p<Integer, Integer>())::requirement == Capabilities::traversal());
static_assert(decltype(identity_optic<Integer, Integer>())::applicable_at<AdapterOf<Integer, Integer>>);
