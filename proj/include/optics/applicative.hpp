#pragma once

// Functor / Applicative dictionaries and the effect types used by traversals.
//
// A dictionary is a stateless struct F providing
//   template <class A> using type = ...;                 // F A
//   fmap(f, F A) -> F B, pure(a) -> F A, ap(F (A -> B), F A) -> F B
// Every effect type exposes `value_type` so callers can recover A from F A.

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "optics/prelude.hpp"

namespace optics {

template <class FA>
using value_of = typename FA::value_type;

template <class F>
concept Functor = requires(typename F::template type<int> x, Fn<int, int> f) {
    { F::fmap(f, x) } -> std::same_as<typename F::template type<int>>;
};

template <class F>
concept Applicative = Functor<F> && requires(typename F::template type<Fn<int, int>> fs,
                                             typename F::template type<int> x) {
    { F::pure(0) } -> std::same_as<typename F::template type<int>>;
    { F::ap(fs, x) } -> std::same_as<typename F::template type<int>>;
};

/// pure f <*> x <*> y
template <class F, class A, class B, class C>
typename F::template type<C> lift_a2(Fn<A, Fn<B, C>> f, const typename F::template type<A>& x,
                                     const typename F::template type<B>& y)
{
    return F::ap(F::ap(F::pure(std::move(f)), x), y);
}

// ---------------------------------------------------------------------------
// Monoids, for Const and Writer.

template <class M>
struct Monoid;

template <class T>
struct Monoid<std::vector<T>> {
    static std::vector<T> empty() { return {}; }
    static std::vector<T> combine(std::vector<T> a, const std::vector<T>& b)
    {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
};

template <>
struct Monoid<std::string> {
    static std::string empty() { return {}; }
    static std::string combine(std::string a, const std::string& b) { return a += b; }
};

// ---------------------------------------------------------------------------
// Option

struct OptionApplicative {
    template <class A>
    using type = Option<A>;

    template <class F, class A>
    static auto fmap(F f, const Option<A>& x) -> Option<std::invoke_result_t<F&, const A&>>
    {
        if (!x) return std::nullopt;
        return f(*x);
    }

    template <class A>
    static Option<A> pure(A x)
    {
        return Option<A>(std::move(x));
    }

    template <class A, class B>
    static Option<B> ap(const Option<Fn<A, B>>& f, const Option<A>& x)
    {
        if (!f || !x) return std::nullopt;
        return (*f)(*x);
    }
};

// ---------------------------------------------------------------------------
// Identity

template <class A>
struct Identity {
    using value_type = A;
    A value;
    friend bool operator==(const Identity&, const Identity&) = default;
};

struct IdentityApplicative {
    template <class A>
    using type = Identity<A>;

    template <class F, class A>
    static auto fmap(F f, const Identity<A>& x) -> Identity<std::invoke_result_t<F&, const A&>>
    {
        return {f(x.value)};
    }

    template <class A>
    static Identity<A> pure(A x)
    {
        return {std::move(x)};
    }

    template <class A, class B>
    static Identity<B> ap(const Identity<Fn<A, B>>& f, const Identity<A>& x)
    {
        return {f.value(x.value)};
    }
};

// ---------------------------------------------------------------------------
// State: a pure state transformer s -> (a, s).

template <class S, class A>
struct State {
    using value_type = A;
    using state_type = S;
    Fn<S, Pair<A, S>> run;
};

template <class S>
struct StateApplicative {
    template <class A>
    using type = State<S, A>;

    template <class F, class A>
    static auto fmap(F f, const State<S, A>& m) -> State<S, std::invoke_result_t<F&, const A&>>
    {
        using B = std::invoke_result_t<F&, const A&>;
        return {[f = std::move(f), m](S s) {
            auto [x, s1] = m.run(std::move(s));
            return Pair<B, S>{f(x), std::move(s1)};
        }};
    }

    template <class A>
    static State<S, A> pure(A x)
    {
        return {[x = std::move(x)](S s) { return Pair<A, S>{x, std::move(s)}; }};
    }

    /// Threads the state through m first, then through n.
    template <class A, class B>
    static State<S, B> ap(const State<S, Fn<A, B>>& m, const State<S, A>& n)
    {
        return {[m, n](S s) {
            auto [f, s1] = m.run(std::move(s));
            auto [x, s2] = n.run(std::move(s1));
            return Pair<B, S>{f(std::move(x)), std::move(s2)};
        }};
    }
};

/// inc b = State (\n -> (b, n + 1))
inline State<Integer, bool> inc(bool b)
{
    return {[b](Integer n) { return Pair<bool, Integer>{b, n + 1}; }};
}

/// Counts odd arguments in the state and returns their parity.
inline State<Integer, bool> count_odd(Integer n)
{
    if (n % 2 == 0) return StateApplicative<Integer>::pure(false);
    return inc(true);
}

// ---------------------------------------------------------------------------
// Const: accumulates a monoid, ignoring the value.

template <class M, class A>
struct Const {
    using value_type = A;
    M value;
    friend bool operator==(const Const&, const Const&) = default;
};

template <class M>
struct ConstApplicative {
    template <class A>
    using type = Const<M, A>;

    template <class F, class A>
    static auto fmap(F, const Const<M, A>& x) -> Const<M, std::invoke_result_t<F&, const A&>>
    {
        return {x.value};
    }

    template <class A>
    static Const<M, A> pure(A)
    {
        return {Monoid<M>::empty()};
    }

    template <class A, class B>
    static Const<M, B> ap(const Const<M, Fn<A, B>>& f, const Const<M, A>& x)
    {
        return {Monoid<M>::combine(f.value, x.value)};
    }
};

// ---------------------------------------------------------------------------
// Writer: a value paired with an appended log. Used as an output sink.

template <class W, class A>
struct Writer {
    using value_type = A;
    A value;
    W log;
    friend bool operator==(const Writer&, const Writer&) = default;
};

template <class W>
struct WriterApplicative {
    template <class A>
    using type = Writer<W, A>;

    template <class F, class A>
    static auto fmap(F f, const Writer<W, A>& x) -> Writer<W, std::invoke_result_t<F&, const A&>>
    {
        return {f(x.value), x.log};
    }

    template <class A>
    static Writer<W, A> pure(A x)
    {
        return {std::move(x), Monoid<W>::empty()};
    }

    template <class A, class B>
    static Writer<W, B> ap(const Writer<W, Fn<A, B>>& f, const Writer<W, A>& x)
    {
        return {f.value(x.value), Monoid<W>::combine(f.log, x.log)};
    }
};

/// Output sink: each emitted line is appended to the log.
using LineSink = WriterApplicative<std::vector<std::string>>;

}  // namespace optics
