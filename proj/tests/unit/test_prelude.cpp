#include <gtest/gtest.h>

#include <random>

#include "optics/prelude.hpp"

using namespace optics;

namespace {

Fn<Integer, Integer> doubled() { return [](Integer x) { return 2 * x; }; }
Fn<Integer, Integer> negated() { return [](Integer x) { return -x; }; }
Fn<Integer, Integer> succ() { return [](Integer x) { return x + 1; }; }
Fn<bool, bool> negation() { return [](bool b) { return !b; }; }

std::vector<Integer> sample_integers()
{
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<Integer> dist(-100, 100);
    std::vector<Integer> xs;
    for (int i = 0; i < 1000; ++i) xs.push_back(dist(rng));
    return xs;
}

}  // namespace

TEST(Prelude, ForkPairsResults)
{
    EXPECT_EQ(fork(doubled(), negated())(3), (Pair<Integer, Integer>{6, -3}));
    EXPECT_EQ(fork(id<Integer>(), id<Integer>())(7), (Pair<Integer, Integer>{7, 7}));
    using P = Pair<Integer, Integer>;
    EXPECT_EQ(fork(fst<Integer, Integer>(), snd<Integer, Integer>())(P{1, 2}), (P{1, 2}));
}

TEST(Prelude, CrossActsComponentwise)
{
    using P = Pair<Integer, bool>;
    EXPECT_EQ(cross(succ(), negation())(P{3, true}), (P{4, false}));
    EXPECT_EQ(cross(id<Integer>(), id<bool>())(P{3, true}), (P{3, true}));
}

TEST(Prelude, CrossAfterForkFuses)
{
    auto lhs = after(cross(succ(), negated()), fork(doubled(), negated()));
    auto rhs = fork(after(succ(), doubled()), after(negated(), negated()));
    for (Integer x : sample_integers()) EXPECT_EQ(lhs(x), rhs(x));
}

TEST(Prelude, PlusActsOnTheTaggedSide)
{
    using S = Sum<Integer, bool>;
    EXPECT_EQ(plus(succ(), negation())(S::left(3)), S::left(4));
    EXPECT_EQ(plus(succ(), negation())(S::right(true)), S::right(false));
    for (Integer x : sample_integers()) {
        EXPECT_EQ(plus(id<Integer>(), id<bool>())(S::left(x)), S::left(x));
        EXPECT_EQ(plus(id<Integer>(), id<bool>())(S::right(x % 2 == 0)), S::right(x % 2 == 0));
    }
}

TEST(Prelude, EitherEliminates)
{
    using S = Sum<Integer, Integer>;
    EXPECT_EQ(either(id<Integer>(), negated())(S::left(5)), 5);
    EXPECT_EQ(either(id<Integer>(), negated())(S::right(5)), -5);
    auto eta = either(inl<Integer, Integer>(), inr<Integer, Integer>());
    for (Integer x : sample_integers()) {
        EXPECT_EQ(eta(S::left(x)), S::left(x));
        EXPECT_EQ(eta(S::right(x)), S::right(x));
    }
}

TEST(Prelude, MaybeEliminates)
{
    EXPECT_EQ(maybe(Integer{0}, succ())(Option<Integer>(4)), 5);
    EXPECT_EQ(maybe(Integer{0}, succ())(Option<Integer>()), 0);
    auto eta = maybe(Option<Integer>(), just<Integer>());
    EXPECT_EQ(eta(Option<Integer>()), Option<Integer>());
    for (Integer x : sample_integers()) EXPECT_EQ(eta(Option<Integer>(x)), Option<Integer>(x));
}

TEST(Prelude, UnitAndAssociativityIsomorphisms)
{
    EXPECT_EQ(runit<Integer>()(Pair<Integer, Unit>{5, unit}), 5);
    EXPECT_EQ(runit_inv<Integer>()(5), (Pair<Integer, Unit>{5, unit}));
    EXPECT_EQ(lunit<Integer>()(Pair<Unit, Integer>{unit, 5}), 5);
    EXPECT_EQ(lunit_inv<Integer>()(5), (Pair<Unit, Integer>{unit, 5}));

    using Right3 = Pair<Integer, Pair<Integer, Integer>>;
    using Left3 = Pair<Pair<Integer, Integer>, Integer>;
    EXPECT_EQ((assoc<Integer, Integer, Integer>()(Right3{1, {2, 3}})), (Left3{{1, 2}, 3}));
    EXPECT_EQ((assoc_inv<Integer, Integer, Integer>()(Left3{{1, 2}, 3})), (Right3{1, {2, 3}}));
    EXPECT_EQ((swap<Integer, bool>()(Pair<Integer, bool>{1, true})), (Pair<bool, Integer>{true, 1}));
}

TEST(Prelude, SumReassociation)
{
    using Inner = Sum<Integer, Integer>;
    using RightNested = Sum<Integer, Inner>;
    using LeftNested = Sum<Inner, Integer>;
    auto co = coassoc<Integer, Integer, Integer>();
    auto co_inv = coassoc_inv<Integer, Integer, Integer>();
    EXPECT_EQ(co(RightNested::right(Inner::left(2))), LeftNested::left(Inner::right(2)));
    EXPECT_EQ(co(RightNested::left(1)), LeftNested::left(Inner::left(1)));
    EXPECT_EQ(co(RightNested::right(Inner::right(3))), LeftNested::right(3));
    for (Integer x : sample_integers()) {
        for (const auto& s : {RightNested::left(x), RightNested::right(Inner::left(x)),
                              RightNested::right(Inner::right(x))}) {
            EXPECT_EQ(co_inv(co(s)), s);
        }
    }
    using WithVoid = Sum<Integer, Void>;
    EXPECT_EQ(rzero<Integer>()(WithVoid::left(4)), 4);
    EXPECT_EQ(lzero<Integer>()(Sum<Void, Integer>::right(4)), 4);
    EXPECT_EQ(rzero_inv<Integer>()(4), WithVoid::left(4));
}

TEST(Prelude, FlipSwapsCurriedArguments)
{
    Fn<Integer, Fn<Integer, Integer>> subtract = [](Integer a) -> Fn<Integer, Integer> {
        return [a](Integer b) { return a - b; };
    };
    EXPECT_EQ(flip(subtract)(2)(10), 8);
    auto twice = flip(flip(subtract));
    const auto xs = sample_integers();
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        EXPECT_EQ(twice(xs[i])(xs[i + 1]), subtract(xs[i])(xs[i + 1]));
    }
}

TEST(Prelude, FnCopiesShareTheCallable)
{
    Fn<Integer, Integer> f = succ();
    Fn<Integer, Integer> g = f;
    EXPECT_TRUE(static_cast<bool>(g));
    EXPECT_EQ(g(1), 2);
    EXPECT_FALSE(static_cast<bool>(Fn<Integer, Integer>()));
    EXPECT_EQ(constant<Integer>(std::string("k"))(9), "k");
}
