#include <gtest/gtest.h>

#include <tuple>

#include "optics/concrete.hpp"
#include "optics/laws/generators.hpp"

using namespace optics;
using optics::laws::Rng;

namespace {

using T3 = Tree<Integer>;

T3 small_tree()
{
    return T3::node(T3::leaf(1), 2, T3::leaf(3));
}

// In-order labels counted by hand, as the oracle for tree traversals.
std::vector<Integer> labels_of(const T3& t)
{
    if (t.empty()) return {};
    auto out = labels_of(t.left());
    out.push_back(t.label());
    auto rest = labels_of(t.right());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

TEST(ConcreteOptics, Pi1)
{
    auto l = pi1<Integer, Integer, char>();
    using P = Pair<Integer, char>;
    EXPECT_EQ(l.view(P{3, 'x'}), 3);
    EXPECT_EQ(l.update({9, P{3, 'x'}}), (P{9, 'x'}));
    Rng rng(0);
    for (int i = 0; i < 1000; ++i) {
        const P s{laws::arbitrary<Integer>(rng), static_cast<char>('a' + i % 26)};
        EXPECT_EQ(l.update({l.view(s), s}), s);
    }
}

TEST(ConcreteOptics, Sign)
{
    auto l = sign();
    EXPECT_FALSE(l.view(-7));
    EXPECT_TRUE(l.view(0));
    EXPECT_EQ(l.update({true, -7}), 7);
    EXPECT_EQ(l.update({false, 7}), -7);
    EXPECT_EQ(l.update({false, 0}), 0);
}

TEST(ConcreteOptics, The)
{
    auto p = the<Integer, Integer>();
    using S = Sum<Option<Integer>, Integer>;
    EXPECT_EQ(p.match(Option<Integer>(5)), S::right(5));
    EXPECT_EQ(p.match(Option<Integer>()), S::left(Option<Integer>()));
    EXPECT_EQ(p.build(5), Option<Integer>(5));
}

TEST(ConcreteOptics, Whole)
{
    auto p = whole();
    using S = Sum<double, Integer>;
    EXPECT_EQ(p.match(2.0), S::right(2));
    EXPECT_EQ(p.match(2.5), S::left(2.5));
    EXPECT_EQ(p.match(-0.0), S::right(0));
    EXPECT_TRUE(p.match(1e300).is_left());
    EXPECT_TRUE(p.match(std::numeric_limits<double>::infinity()).is_left());
    EXPECT_EQ(p.build(3), 3.0);
}

TEST(ConcreteOptics, Flatten)
{
    auto a = flatten<Integer, Integer, Integer, Integer, Integer, Integer>();
    using Nested = Pair<Pair<Integer, Integer>, Integer>;
    using Flat = std::tuple<Integer, Integer, Integer>;
    EXPECT_EQ(a.from(Nested{{1, 2}, 3}), (Flat{1, 2, 3}));
    EXPECT_EQ(a.to(Flat{1, 2, 3}), (Nested{{1, 2}, 3}));
    Rng rng(0);
    for (int i = 0; i < 1000; ++i) {
        const auto s = laws::arbitrary<Nested>(rng);
        EXPECT_EQ(a.to(a.from(s)), s);
    }
}

TEST(ConcreteOptics, InorderTraversalOfTrees)
{
    using St = StateApplicative<Integer>;
    EXPECT_TRUE(inorder<St>(count_odd, T3()).run(4).first.empty());
    EXPECT_EQ(inorder<St>(count_odd, T3()).run(4).second, 4);

    const auto [flags, count] = inorder<St>(count_odd, small_tree()).run(0);
    EXPECT_EQ(flags, (Tree<bool>::node(Tree<bool>::leaf(true), false, Tree<bool>::leaf(true))));
    EXPECT_EQ(count, 2);

    auto tr = inorder_c<Integer, Integer>();
    EXPECT_TRUE(tr.extract(T3()).contents.empty());
    EXPECT_EQ(tr.extract(T3::node(T3(), 1, T3::leaf(2))).contents, (std::vector<Integer>{1, 2}));

    Rng rng(0);
    for (int i = 0; i < 200; ++i) {
        const auto t = laws::sample_tree<Integer>(rng, 20);
        EXPECT_EQ(tr.extract(t).contents, labels_of(t));
        EXPECT_EQ(fuse(tr.extract(t)), t);
        auto plus_one = [](Integer x) { return Identity<Integer>{x + 1}; };
        EXPECT_EQ(inorder<IdentityApplicative>(plus_one, t).value,
                  map_tree(t, [](Integer x) { return x + 1; }));
    }
}

TEST(ConcreteInstances, AdapterDimap)
{
    Fn<Integer, Integer> f = [](Integer x) { return x + 1; };
    Fn<Integer, Integer> g = [](Integer x) { return 2 * x; };
    auto a = AdapterOf<Integer, Integer>::dimap(f, g, Adapter<Integer, Integer, Integer, Integer>{
                                                          id<Integer>(), id<Integer>()});
    for (Integer x = -50; x <= 50; ++x) {
        EXPECT_EQ(a.from(x), f(x));
        EXPECT_EQ(a.to(x), g(x));
    }
}

TEST(ConcreteInstances, LensFirst)
{
    using Inner = Pair<Integer, char>;
    auto l = LensOf<Integer, Integer>::first<Integer>(pi1<Integer, Integer, char>());
    EXPECT_EQ(l.view({{3, 'a'}, 9}), 3);
    EXPECT_EQ(l.update({7, {{3, 'a'}, 9}}), (Pair<Inner, Integer>{{7, 'a'}, 9}));
    auto r = LensOf<Integer, Integer>::second<Integer>(pi1<Integer, Integer, char>());
    EXPECT_EQ(r.view({9, {3, 'a'}}), 3);
    EXPECT_EQ(r.update({7, {9, {3, 'a'}}}), (Pair<Integer, Inner>{9, {7, 'a'}}));
}

TEST(ConcreteInstances, PrismRight)
{
    using Whole = Sum<char, Option<Integer>>;
    using Result = Sum<Sum<char, Option<Integer>>, Integer>;
    auto p = PrismOf<Integer, Integer>::right<char>(the<Integer, Integer>());
    EXPECT_EQ(p.match(Whole::right(Option<Integer>(5))), Result::right(5));
    EXPECT_EQ(p.match(Whole::right(Option<Integer>())),
              Result::left(Whole::right(Option<Integer>())));
    EXPECT_EQ(p.match(Whole::left('c')), Result::left(Whole::left('c')));
    EXPECT_EQ(p.build(5), Whole::right(Option<Integer>(5)));
}

TEST(ConcreteInstances, TraversalEmptyAndPar)
{
    using TI = TraversalOf<Integer, Integer>;
    auto e = TI::empty().extract(unit);
    EXPECT_TRUE(e.contents.empty());
    EXPECT_EQ(e.fill({}), unit);

    auto tr = inorder_c<Integer, Integer>();
    auto both = TI::par(tr, tr).extract({small_tree(), T3::leaf(4)});
    EXPECT_EQ(both.contents, (std::vector<Integer>{1, 2, 3, 4}));
    const auto refilled = both.fill({10, 20, 30, 40});
    EXPECT_EQ(refilled.first, T3::node(T3::leaf(10), 20, T3::leaf(30)));
    EXPECT_EQ(refilled.second, T3::leaf(40));
}
