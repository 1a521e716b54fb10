#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "optics/applicative.hpp"

using namespace optics;

namespace {

using S = StateApplicative<Integer>;
using Strings = std::vector<std::string>;
using C = ConstApplicative<Strings>;

}  // namespace

TEST(StateApplicative, PureLeavesStateAlone)
{
    EXPECT_EQ(S::pure(Integer{5}).run(0), (Pair<Integer, Integer>{5, 0}));
}

TEST(StateApplicative, IncCounts)
{
    EXPECT_EQ(inc(true).run(3), (Pair<bool, Integer>{true, 4}));
}

TEST(StateApplicative, ApThreadsLeftToRight)
{
    auto both = S::ap(S::fmap(pairing<bool, bool>(), inc(true)), inc(false));
    EXPECT_EQ(both.run(0), (Pair<Pair<bool, bool>, Integer>{{true, false}, 2}));

    // The first action sees the initial state, the second its successor.
    State<Integer, Integer> peek{[](Integer s) { return Pair<Integer, Integer>{s, s * 10}; }};
    auto seq = S::ap(S::fmap(pairing<Integer, Integer>(), peek), peek);
    EXPECT_EQ(seq.run(1), (Pair<Pair<Integer, Integer>, Integer>{{1, 10}, 100}));
}

TEST(StateApplicative, CountOdd)
{
    EXPECT_EQ(count_odd(2).run(0), (Pair<bool, Integer>{false, 0}));
    EXPECT_EQ(count_odd(3).run(0), (Pair<bool, Integer>{true, 1}));
    EXPECT_EQ(count_odd(0).run(5), (Pair<bool, Integer>{false, 5}));
    EXPECT_EQ(count_odd(-3).run(0), (Pair<bool, Integer>{true, 1}));
}

TEST(ConstApplicative, AccumulatesTheMonoid)
{
    EXPECT_TRUE(C::pure(42).value.empty());
    Const<Strings, Fn<int, int>> f{{"a"}};
    Const<Strings, int> x{{"b"}};
    EXPECT_EQ(C::ap(f, x).value, (Strings{"a", "b"}));
    Const<Strings, int> y{{"x"}};
    EXPECT_EQ(C::fmap([](int n) { return n + 1; }, y).value, (Strings{"x"}));
}

TEST(OptionApplicative, FailurePropagates)
{
    using O = OptionApplicative;
    Option<Fn<int, int>> f = Fn<int, int>([](int n) { return n * 2; });
    EXPECT_EQ(O::ap(f, Option<int>(4)), Option<int>(8));
    EXPECT_EQ(O::ap(f, Option<int>()), Option<int>());
    EXPECT_EQ(O::ap(Option<Fn<int, int>>(), Option<int>(4)), Option<int>());
    EXPECT_EQ(O::pure(3), Option<int>(3));
}

TEST(WriterApplicative, LogsInOrder)
{
    using W = LineSink;
    Writer<Strings, int> a{1, {"one"}};
    Writer<Strings, int> b{2, {"two"}};
    auto both = W::ap(W::fmap(pairing<int, int>(), a), b);
    EXPECT_EQ(both.value, (Pair<int, int>{1, 2}));
    EXPECT_EQ(both.log, (Strings{"one", "two"}));
    EXPECT_TRUE(W::pure(0).log.empty());
}

TEST(IdentityApplicative, IsPlainApplication)
{
    using I = IdentityApplicative;
    Identity<Fn<int, int>> f{[](int n) { return n - 1; }};
    EXPECT_EQ(I::ap(f, I::pure(5)).value, 4);
}

static_assert(Applicative<S>);
static_assert(Applicative<C>);
static_assert(Applicative<OptionApplicative>);
static_assert(Applicative<LineSink>);
static_assert(Applicative<IdentityApplicative>);
