#pragma once

// Random samplers and observational rendering for the law suite.
//
// Arbitrary<T>::sample(rng) draws a value. Observe<T>::render(x, rng) turns a
// value into a canonical string; values containing functions are observed by
// applying them to inputs drawn from rng. Two values are observationally equal
// at a trial when they render identically from the same rng state.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "optics/applicative.hpp"
#include "optics/concrete.hpp"
#include "optics/funlist.hpp"
#include "optics/prelude.hpp"
#include "optics/profunctor.hpp"
#include "optics/tree.hpp"

namespace optics::laws {

using Rng = std::mt19937_64;

template <class T>
struct Arbitrary;

template <class T>
struct Observe;

template <class T>
T arbitrary(Rng& rng)
{
    return Arbitrary<T>::sample(rng);
}

template <class T>
std::string render(const T& x, Rng& rng)
{
    return Observe<T>::render(x, rng);
}

/// Deterministic rendering, used to key pure random functions on their input.
template <class T>
std::string key_of(const T& x)
{
    Rng fixed(0x6b6579);
    return render(x, fixed);
}

inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool chance(Rng& rng, int one_in)
{
    return std::uniform_int_distribution<int>(0, one_in - 1)(rng) == 0;
}

// ---------------------------------------------------------------------------
// Ground types

template <>
struct Arbitrary<Integer> {
    /// Mostly uniform on [-100, 100], with extra weight on 0 and +-1.
    static Integer sample(Rng& rng)
    {
        if (chance(rng, 8)) return static_cast<Integer>(uniform(rng, 0, 2)) - 1;
        return std::uniform_int_distribution<Integer>(-100, 100)(rng);
    }
};

template <>
struct Observe<Integer> {
    static std::string render(Integer x, Rng&) { return std::to_string(x); }
};

template <>
struct Arbitrary<bool> {
    static bool sample(Rng& rng) { return (rng() & 1U) != 0; }
};

template <>
struct Observe<bool> {
    static std::string render(bool x, Rng&) { return x ? "true" : "false"; }
};

template <>
struct Arbitrary<std::string> {
    static std::string sample(Rng& rng)
    {
        static constexpr char alphabet[] = "abcxyz019 ";
        std::string s(uniform(rng, 0, 5), ' ');
        for (char& c : s) c = alphabet[uniform(rng, 0, sizeof(alphabet) - 2)];
        return s;
    }
};

template <>
struct Observe<std::string> {
    static std::string render(const std::string& s, Rng&) { return '"' + s + '"'; }
};

template <>
struct Arbitrary<double> {
    static double sample(Rng& rng)
    {
        static constexpr std::array<double, 6> special = {
            0.0, -0.0, std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::quiet_NaN(),
            1e300};
        switch (uniform(rng, 0, 3)) {
        case 0: return special[uniform(rng, 0, special.size() - 1)];
        case 1: return std::uniform_real_distribution<double>(-1000.0, 1000.0)(rng);
        default: return static_cast<double>(arbitrary<Integer>(rng));
        }
    }
};

template <>
struct Observe<double> {
    static std::string render(double x, Rng&)
    {
        if (std::isnan(x)) return "nan";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <>
struct Arbitrary<Unit> {
    static Unit sample(Rng&) { return unit; }
};

template <>
struct Observe<Unit> {
    static std::string render(Unit, Rng&) { return "()"; }
};

template <>
struct Observe<Void> {
    static std::string render(const Void&, Rng&) { return "void"; }
};

// ---------------------------------------------------------------------------
// Products, sums, options, sequences

template <class A, class B>
struct Arbitrary<Pair<A, B>> {
    static Pair<A, B> sample(Rng& rng)
    {
        A a = arbitrary<A>(rng);
        B b = arbitrary<B>(rng);
        return {std::move(a), std::move(b)};
    }
};

template <class A, class B>
struct Observe<Pair<A, B>> {
    static std::string render(const Pair<A, B>& p, Rng& rng)
    {
        std::string out = "(" + laws::render(p.first, rng);
        return out + ", " + laws::render(p.second, rng) + ")";
    }
};

template <class... Xs>
struct Arbitrary<std::tuple<Xs...>> {
    static std::tuple<Xs...> sample(Rng& rng) { return {arbitrary<Xs>(rng)...}; }
};

template <class... Xs>
struct Observe<std::tuple<Xs...>> {
    static std::string render(const std::tuple<Xs...>& t, Rng& rng)
    {
        std::string out = "(";
        std::apply(
            [&](const auto&... xs) {
                std::size_t i = 0;
                ((out += (i++ ? ", " : "") + laws::render(xs, rng)), ...);
            },
            t);
        return out + ")";
    }
};

template <class L, class R>
struct Arbitrary<Sum<L, R>> {
    static Sum<L, R> sample(Rng& rng)
    {
        if constexpr (std::is_same_v<R, Void>) {
            return Sum<L, R>::left(arbitrary<L>(rng));
        } else if constexpr (std::is_same_v<L, Void>) {
            return Sum<L, R>::right(arbitrary<R>(rng));
        } else {
            if (Arbitrary<bool>::sample(rng)) return Sum<L, R>::left(arbitrary<L>(rng));
            return Sum<L, R>::right(arbitrary<R>(rng));
        }
    }
};

template <class L, class R>
struct Observe<Sum<L, R>> {
    static std::string render(const Sum<L, R>& s, Rng& rng)
    {
        if (s.is_left()) return "Left " + laws::render(s.left_value(), rng);
        return "Right " + laws::render(s.right_value(), rng);
    }
};

template <class A>
struct Arbitrary<Option<A>> {
    static Option<A> sample(Rng& rng)
    {
        if (chance(rng, 4)) return std::nullopt;
        return arbitrary<A>(rng);
    }
};

template <class A>
struct Observe<Option<A>> {
    static std::string render(const Option<A>& x, Rng& rng)
    {
        return x ? "Just " + laws::render(*x, rng) : "Nothing";
    }
};

template <class A>
std::vector<A> sample_vector(Rng& rng, std::size_t n)
{
    std::vector<A> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(arbitrary<A>(rng));
    return out;
}

template <class A>
struct Arbitrary<std::vector<A>> {
    static std::vector<A> sample(Rng& rng) { return sample_vector<A>(rng, uniform(rng, 0, 4)); }
};

template <class A>
struct Observe<std::vector<A>> {
    static std::string render(const std::vector<A>& xs, Rng& rng)
    {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ", ";
            out += laws::render(static_cast<const A&>(xs[i]), rng);
        }
        return out + "]";
    }
};

// ---------------------------------------------------------------------------
// Trees

/// A tree with a uniformly chosen node count in [0, max_nodes] and a random
/// shape.
template <class A>
Tree<A> sample_tree(Rng& rng, std::size_t max_nodes)
{
    auto build = [&rng](const auto& self, std::size_t n) -> Tree<A> {
        if (n == 0) return Tree<A>();
        const std::size_t left_size = uniform(rng, 0, n - 1);
        Tree<A> l = self(self, left_size);
        A x = arbitrary<A>(rng);
        return Tree<A>::node(std::move(l), std::move(x), self(self, n - 1 - left_size));
    };
    return build(build, uniform(rng, 0, max_nodes));
}

template <class A>
struct Arbitrary<Tree<A>> {
    static Tree<A> sample(Rng& rng) { return sample_tree<A>(rng, 12); }
};

template <class A>
struct Observe<Tree<A>> {
    static std::string render(const Tree<A>& t, Rng& rng)
    {
        if (t.empty()) return ".";
        std::string out = "(" + laws::render(t.left(), rng);
        out += " " + laws::render(t.label(), rng);
        return out + " " + laws::render(t.right(), rng) + ")";
    }
};

// ---------------------------------------------------------------------------
// Functions

/// A pure random function: the output is drawn from an rng seeded by a salt
/// and the rendered input. Occasionally constant.
template <class A, class B>
struct Arbitrary<Fn<A, B>> {
    static Fn<A, B> sample(Rng& rng)
    {
        const std::uint64_t salt = rng();
        if (chance(rng, 8)) {
            B value = arbitrary<B>(rng);
            return [value](const A&) { return value; };
        }
        return [salt](const A& a) {
            Rng local(mix(salt ^ fnv1a(key_of(a))));
            return arbitrary<B>(local);
        };
    }
};

inline constexpr int function_probes = 2;

template <class A, class B>
struct Observe<Fn<A, B>> {
    static std::string render(const Fn<A, B>& f, Rng& rng)
    {
        std::string out = "{";
        for (int i = 0; i < function_probes; ++i) {
            A a = arbitrary<A>(rng);
            if (i) out += "; ";
            out += laws::render(a, rng) + " -> ";
            out += laws::render(f(std::move(a)), rng);
        }
        return out + "}";
    }
};

// ---------------------------------------------------------------------------
// FunList

template <class A, class B, class T>
FunList<A, B, T> sample_funlist(Rng& rng, std::size_t n)
{
    auto contents = sample_vector<A>(rng, n);
    auto k = arbitrary<Fn<std::vector<B>, T>>(rng);
    return {std::move(contents), [k](const Slice<B>& bs) { return k(bs.to_vector()); }};
}

template <class A, class B, class T>
struct Arbitrary<FunList<A, B, T>> {
    static FunList<A, B, T> sample(Rng& rng)
    {
        return sample_funlist<A, B, T>(rng, uniform(rng, 0, 8));
    }
};

/// Contents, then the refill applied to a sampled sequence of matching length.
template <class A, class B, class T>
struct Observe<FunList<A, B, T>> {
    static std::string render(const FunList<A, B, T>& l, Rng& rng)
    {
        std::string out = "<" + laws::render(l.contents, rng) + " | ";
        auto bs = sample_vector<B>(rng, l.size());
        out += laws::render(bs, rng) + " => ";
        return out + laws::render(l.fill(std::move(bs)), rng) + ">";
    }
};

// ---------------------------------------------------------------------------
// Applicative carriers

template <class A>
struct Arbitrary<Identity<A>> {
    static Identity<A> sample(Rng& rng) { return {arbitrary<A>(rng)}; }
};

template <class A>
struct Observe<Identity<A>> {
    static std::string render(const Identity<A>& x, Rng& rng)
    {
        return "Identity " + laws::render(x.value, rng);
    }
};

template <class S, class A>
struct Arbitrary<State<S, A>> {
    static State<S, A> sample(Rng& rng) { return {arbitrary<Fn<S, Pair<A, S>>>(rng)}; }
};

/// Run on a sampled initial state.
template <class S, class A>
struct Observe<State<S, A>> {
    static std::string render(const State<S, A>& m, Rng& rng)
    {
        S s = arbitrary<S>(rng);
        std::string out = "State " + laws::render(s, rng) + " -> ";
        return out + laws::render(m.run(std::move(s)), rng);
    }
};

template <class M, class A>
struct Arbitrary<Const<M, A>> {
    static Const<M, A> sample(Rng& rng) { return {arbitrary<M>(rng)}; }
};

template <class M, class A>
struct Observe<Const<M, A>> {
    static std::string render(const Const<M, A>& x, Rng& rng)
    {
        return "Const " + laws::render(x.value, rng);
    }
};

template <class W, class A>
struct Arbitrary<Writer<W, A>> {
    static Writer<W, A> sample(Rng& rng)
    {
        A value = arbitrary<A>(rng);
        return {std::move(value), arbitrary<W>(rng)};
    }
};

template <class W, class A>
struct Observe<Writer<W, A>> {
    static std::string render(const Writer<W, A>& x, Rng& rng)
    {
        std::string out = "Writer " + laws::render(x.value, rng);
        return out + " " + laws::render(x.log, rng);
    }
};

template <class F, class A, class B>
struct Arbitrary<UpStar<F, A, B>> {
    static UpStar<F, A, B> sample(Rng& rng)
    {
        return {arbitrary<Fn<A, typename F::template type<B>>>(rng)};
    }
};

template <class F, class A, class B>
struct Observe<UpStar<F, A, B>> {
    static std::string render(const UpStar<F, A, B>& h, Rng& rng)
    {
        return "UpStar " + laws::render(h.run, rng);
    }
};

// ---------------------------------------------------------------------------
// Concrete optics: fieldwise

template <class A, class B, class S, class T>
struct Arbitrary<Adapter<A, B, S, T>> {
    static Adapter<A, B, S, T> sample(Rng& rng)
    {
        auto from = arbitrary<Fn<S, A>>(rng);
        return {std::move(from), arbitrary<Fn<B, T>>(rng)};
    }
};

template <class A, class B, class S, class T>
struct Observe<Adapter<A, B, S, T>> {
    static std::string render(const Adapter<A, B, S, T>& a, Rng& rng)
    {
        std::string out = "Adapter from=" + laws::render(a.from, rng);
        return out + " to=" + laws::render(a.to, rng);
    }
};

template <class A, class B, class S, class T>
struct Arbitrary<Lens<A, B, S, T>> {
    static Lens<A, B, S, T> sample(Rng& rng)
    {
        auto view = arbitrary<Fn<S, A>>(rng);
        return {std::move(view), arbitrary<Fn<Pair<B, S>, T>>(rng)};
    }
};

template <class A, class B, class S, class T>
struct Observe<Lens<A, B, S, T>> {
    static std::string render(const Lens<A, B, S, T>& l, Rng& rng)
    {
        std::string out = "Lens view=" + laws::render(l.view, rng);
        return out + " update=" + laws::render(l.update, rng);
    }
};

template <class A, class B, class S, class T>
struct Arbitrary<Prism<A, B, S, T>> {
    static Prism<A, B, S, T> sample(Rng& rng)
    {
        auto match = arbitrary<Fn<S, Sum<T, A>>>(rng);
        return {std::move(match), arbitrary<Fn<B, T>>(rng)};
    }
};

template <class A, class B, class S, class T>
struct Observe<Prism<A, B, S, T>> {
    static std::string render(const Prism<A, B, S, T>& p, Rng& rng)
    {
        std::string out = "Prism match=" + laws::render(p.match, rng);
        return out + " build=" + laws::render(p.build, rng);
    }
};

template <class A, class B, class S, class T>
struct Arbitrary<Traversal<A, B, S, T>> {
    static Traversal<A, B, S, T> sample(Rng& rng)
    {
        return {arbitrary<Fn<S, FunList<A, B, T>>>(rng)};
    }
};

template <class A, class B, class S, class T>
struct Observe<Traversal<A, B, S, T>> {
    static std::string render(const Traversal<A, B, S, T>& t, Rng& rng)
    {
        return "Traversal extract=" + laws::render(t.extract, rng);
    }
};

}  // namespace optics::laws
