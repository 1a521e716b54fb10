#pragma once

// Concrete optic records, the stock example optics, and the profunctor
// instances of the records themselves (which the profunctor-to-concrete
// conversions instantiate optics at).

#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "optics/funlist.hpp"
#include "optics/prelude.hpp"
#include "optics/profunctor.hpp"
#include "optics/tree.hpp"

namespace optics {

/// A change of representation: from : s -> a, to : b -> t.
template <class A, class B, class S, class T>
struct Adapter {
    Fn<S, A> from;
    Fn<B, T> to;
};

/// Access to one component of a product-like s.
template <class A, class B, class S, class T>
struct Lens {
    Fn<S, A> view;
    Fn<Pair<B, S>, T> update;
};

/// Access to one variant of a sum-like s. match yields Left t when the
/// variant is absent, Right a when present.
template <class A, class B, class S, class T>
struct Prism {
    Fn<S, Sum<T, A>> match;
    Fn<B, T> build;
};

/// Access to a sequence of components.
template <class A, class B, class S, class T>
struct Traversal {
    Fn<S, FunList<A, B, T>> extract;
};

// ---------------------------------------------------------------------------
// Instances

template <class X, class Y>
struct AdapterOf {
    template <class S, class T>
    using type = Adapter<X, Y, S, T>;

    /// dimap f g (Adapter o i) = Adapter (o . f) (g . i)
    template <class S2, class S, class T, class T2>
    static Adapter<X, Y, S2, T2> dimap(Fn<S2, S> f, Fn<T, T2> g, Adapter<X, Y, S, T> a)
    {
        return {after(std::move(a.from), std::move(f)), after(std::move(g), std::move(a.to))};
    }

    template <class S, class T>
    static Adapter<X, Y, S, T> delay(Fn<Unit, Adapter<X, Y, S, T>> thunk)
    {
        return {[thunk](S s) { return thunk(unit).from(std::move(s)); },
                [thunk](Y y) { return thunk(unit).to(std::move(y)); }};
    }
};

template <class X, class Y>
struct LensOf {
    template <class S, class T>
    using type = Lens<X, Y, S, T>;

    /// dimap f g (Lens v u) = Lens (v . f) (g . u . cross id f)
    template <class S2, class S, class T, class T2>
    static Lens<X, Y, S2, T2> dimap(Fn<S2, S> f, Fn<T, T2> g, Lens<X, Y, S, T> l)
    {
        return {after(l.view, f), after(std::move(g), after(std::move(l.update), cross(id<Y>(), f)))};
    }

    /// first (Lens v u) = Lens (v . fst) (fork (u . cross id fst) (snd . snd))
    template <class C, class S, class T>
    static Lens<X, Y, Pair<S, C>, Pair<T, C>> first(Lens<X, Y, S, T> l)
    {
        using Whole = Pair<S, C>;
        return {after(std::move(l.view), fst<S, C>()),
                fork(after(std::move(l.update), cross(id<Y>(), fst<S, C>())),
                     after(snd<S, C>(), snd<Y, Whole>()))};
    }

    /// second (Lens v u) = Lens (v . snd) (fork (fst . snd) (u . cross id snd))
    template <class C, class S, class T>
    static Lens<X, Y, Pair<C, S>, Pair<C, T>> second(Lens<X, Y, S, T> l)
    {
        using Whole = Pair<C, S>;
        return {after(std::move(l.view), snd<C, S>()),
                fork(after(fst<C, S>(), snd<Y, Whole>()),
                     after(std::move(l.update), cross(id<Y>(), snd<C, S>())))};
    }

    template <class S, class T>
    static Lens<X, Y, S, T> delay(Fn<Unit, Lens<X, Y, S, T>> thunk)
    {
        return {[thunk](S s) { return thunk(unit).view(std::move(s)); },
                [thunk](Pair<Y, S> p) { return thunk(unit).update(std::move(p)); }};
    }
};

template <class X, class Y>
struct PrismOf {
    template <class S, class T>
    using type = Prism<X, Y, S, T>;

    /// dimap f g (Prism m b) = Prism (plus g id . m . f) (g . b)
    template <class S2, class S, class T, class T2>
    static Prism<X, Y, S2, T2> dimap(Fn<S2, S> f, Fn<T, T2> g, Prism<X, Y, S, T> p)
    {
        return {after(plus(g, id<X>()), after(std::move(p.match), std::move(f))),
                after(g, std::move(p.build))};
    }

    /// left (Prism m b) = Prism (either (plus Left id . m) (Left . Right)) (Left . b)
    template <class C, class S, class T>
    static Prism<X, Y, Sum<S, C>, Sum<T, C>> left(Prism<X, Y, S, T> p)
    {
        using Out = Sum<T, C>;
        return {either(after(plus(inl<T, C>(), id<X>()), std::move(p.match)),
                       after(inl<Out, X>(), inr<T, C>())),
                after(inl<T, C>(), std::move(p.build))};
    }

    /// right (Prism m b) = Prism (either (Left . Left) (plus Right id . m)) (Right . b)
    template <class C, class S, class T>
    static Prism<X, Y, Sum<C, S>, Sum<C, T>> right(Prism<X, Y, S, T> p)
    {
        using Out = Sum<C, T>;
        return {either(after(inl<Out, X>(), inl<C, T>()),
                       after(plus(inr<C, T>(), id<X>()), std::move(p.match))),
                after(inr<C, T>(), std::move(p.build))};
    }

    template <class S, class T>
    static Prism<X, Y, S, T> delay(Fn<Unit, Prism<X, Y, S, T>> thunk)
    {
        return {[thunk](S s) { return thunk(unit).match(std::move(s)); },
                [thunk](Y y) { return thunk(unit).build(std::move(y)); }};
    }
};

template <class X, class Y>
struct TraversalOf {
    template <class S, class T>
    using type = Traversal<X, Y, S, T>;

    using Effects = FunListApplicative<X, Y>;

    /// dimap f g (Traversal h) = Traversal (fmap g . h . f)
    template <class S2, class S, class T, class T2>
    static Traversal<X, Y, S2, T2> dimap(Fn<S2, S> f, Fn<T, T2> g, Traversal<X, Y, S, T> t)
    {
        return {[f = std::move(f), g = std::move(g), h = std::move(t.extract)](S2 s) {
            return Effects::fmap(g, h(f(std::move(s))));
        }};
    }

    /// first (Traversal h) = Traversal (\(s, c) -> fmap (,c) (h s))
    template <class C, class S, class T>
    static Traversal<X, Y, Pair<S, C>, Pair<T, C>> first(Traversal<X, Y, S, T> t)
    {
        return {[h = std::move(t.extract)](const Pair<S, C>& p) {
            return Effects::fmap([c = p.second](const T& x) { return Pair<T, C>{x, c}; },
                                 h(p.first));
        }};
    }

    /// second (Traversal h) = Traversal (\(c, s) -> fmap (c,) (h s))
    template <class C, class S, class T>
    static Traversal<X, Y, Pair<C, S>, Pair<C, T>> second(Traversal<X, Y, S, T> t)
    {
        return {[h = std::move(t.extract)](const Pair<C, S>& p) {
            return Effects::fmap([c = p.first](const T& x) { return Pair<C, T>{c, x}; },
                                 h(p.second));
        }};
    }

    /// left (Traversal h) = Traversal (either (fmap Left . h) (Done . Right))
    template <class C, class S, class T>
    static Traversal<X, Y, Sum<S, C>, Sum<T, C>> left(Traversal<X, Y, S, T> t)
    {
        using Out = Sum<T, C>;
        return {[h = std::move(t.extract)](const Sum<S, C>& s) {
            if (s.is_left()) return Effects::fmap(inl<T, C>(), h(s.left_value()));
            return done<X, Y, Out>(Out::right(s.right_value()));
        }};
    }

    /// right (Traversal h) = Traversal (either (Done . Left) (fmap Right . h))
    template <class C, class S, class T>
    static Traversal<X, Y, Sum<C, S>, Sum<C, T>> right(Traversal<X, Y, S, T> t)
    {
        using Out = Sum<C, T>;
        return {[h = std::move(t.extract)](const Sum<C, S>& s) {
            if (s.is_left()) return done<X, Y, Out>(Out::left(s.left_value()));
            return Effects::fmap(inr<C, T>(), h(s.right_value()));
        }};
    }

    /// par (Traversal h) (Traversal k) = Traversal (pair h k)
    template <class S, class T, class U, class V>
    static Traversal<X, Y, Pair<S, U>, Pair<T, V>> par(Traversal<X, Y, S, T> h,
                                                       Traversal<X, Y, U, V> k)
    {
        return {pair<Effects, S, T, U, V>(std::move(h.extract), std::move(k.extract))};
    }

    /// empty = Traversal pure
    static Traversal<X, Y, Unit, Unit> empty()
    {
        return {[](Unit u) { return done<X, Y, Unit>(u); }};
    }

    template <class S, class T>
    static Traversal<X, Y, S, T> delay(Fn<Unit, Traversal<X, Y, S, T>> thunk)
    {
        return {[thunk = std::move(thunk)](S s) { return thunk(unit).extract(std::move(s)); }};
    }
};

// ---------------------------------------------------------------------------
// Example optics

/// Lens onto the first component of a pair.
template <class A, class B, class C>
Lens<A, B, Pair<A, C>, Pair<B, C>> pi1()
{
    return {fst<A, C>(), [](const Pair<B, Pair<A, C>>& p) {
                return Pair<B, C>{p.first, p.second.second};
            }};
}

/// Lens onto the non-negativity of an integer; update imposes the sign and
/// keeps the magnitude.
inline Lens<bool, bool, Integer, Integer> sign()
{
    return {[](Integer x) { return x >= 0; },
            [](const Pair<bool, Integer>& p) {
                const Integer magnitude = p.second < 0 ? -p.second : p.second;
                return p.first ? magnitude : -magnitude;
            }};
}

/// Prism onto the payload of an optional value.
template <class A, class B>
Prism<A, B, Option<A>, Option<B>> the()
{
    using Match = Sum<Option<B>, A>;
    return {[](const Option<A>& x) {
                return x ? Match::right(*x) : Match::left(Option<B>());
            },
            just<B>()};
}

/// Prism onto doubles with zero fractional part. Non-finite values and whole
/// values outside the Integer range do not match.
inline Prism<Integer, Integer, double, double> whole()
{
    using Match = Sum<double, Integer>;
    return {[](double x) {
                if (!std::isfinite(x)) return Match::left(x);
                double integral = 0.0;
                const double fractional = std::modf(x, &integral);
                constexpr double bound = 9223372036854775808.0;  // 2^63
                if (fractional != 0.0 || integral >= bound || integral < -bound) {
                    return Match::left(x);
                }
                return Match::right(static_cast<Integer>(integral));
            },
            [](Integer n) { return static_cast<double>(n); }};
}

/// Adapter between nested pairs and flat triples.
template <class A, class B, class C, class A2, class B2, class C2>
Adapter<std::tuple<A, B, C>, std::tuple<A2, B2, C2>, Pair<Pair<A, B>, C>, Pair<Pair<A2, B2>, C2>>
flatten()
{
    return {[](const Pair<Pair<A, B>, C>& p) {
                return std::tuple<A, B, C>{p.first.first, p.first.second, p.second};
            },
            [](const std::tuple<A2, B2, C2>& t) {
                return Pair<Pair<A2, B2>, C2>{{std::get<0>(t), std::get<1>(t)}, std::get<2>(t)};
            }};
}

/// inorderC = Traversal (inorder single)
template <class A, class B>
Traversal<A, B, Tree<A>, Tree<B>> inorder_c()
{
    return {[](const Tree<A>& t) {
        return inorder<FunListApplicative<A, B>>(single_fn<A, B>(), t);
    }};
}

}  // namespace optics
