#pragma once

// Transformer families (profunctors) and their refinements.
//
// A profunctor dictionary P is a stateless struct with
//   template <class A, class B> using type = ...;           // P a b
//   dimap(Fn<A2, A>, Fn<B, B2>, P a b) -> P a2 b2
// and optionally
//   first<C>/second<C>                 (Cartesian)
//   left<C>/right<C>                   (Cocartesian)
//   par(P a b, P c d), empty()         (Monoidal)
//   delay(thunk)                       (on-demand construction, used by traverse)
//
// Laws (checked by the law suite, not by the compiler):
//   dimap id id = id
//   dimap (f' . f) (g . g') = dimap f g . dimap f' g'
//   dimap runit runit' h = first h,   dimap assoc assoc' (first (first h)) = first h
//   dimap rzero rzero' h = left h,    dimap coassoc coassoc' (left (left h)) = left h
//   dimap assoc assoc' (par (par h j) k) = par h (par j k)
//   dimap runit runit' h = par h empty,  dimap lunit lunit' h = par empty h

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "optics/applicative.hpp"
#include "optics/prelude.hpp"

namespace optics {

// ---------------------------------------------------------------------------
// Capability lattice

/// A set of profunctor refinements. Every set implicitly includes Profunctor.
class Capabilities {
public:
    static constexpr std::uint8_t cartesian_bit = 1;
    static constexpr std::uint8_t cocartesian_bit = 2;
    static constexpr std::uint8_t monoidal_bit = 4;

    constexpr Capabilities() = default;

    static constexpr Capabilities profunctor() { return Capabilities(0); }
    static constexpr Capabilities cartesian() { return Capabilities(cartesian_bit); }
    static constexpr Capabilities cocartesian() { return Capabilities(cocartesian_bit); }
    static constexpr Capabilities monoidal() { return Capabilities(monoidal_bit); }

    // The named lattice points.
    static constexpr Capabilities adapter() { return profunctor(); }
    static constexpr Capabilities lens() { return cartesian(); }
    static constexpr Capabilities prism() { return cocartesian(); }
    static constexpr Capabilities traversal()
    {
        return Capabilities(cartesian_bit | cocartesian_bit | monoidal_bit);
    }

    /// Least upper bound: the requirement of a composite optic.
    friend constexpr Capabilities operator|(Capabilities a, Capabilities b)
    {
        return Capabilities(a.bits_ | b.bits_);
    }

    constexpr bool includes(Capabilities other) const
    {
        return (bits_ & other.bits_) == other.bits_;
    }

    constexpr bool has_cartesian() const { return (bits_ & cartesian_bit) != 0; }
    constexpr bool has_cocartesian() const { return (bits_ & cocartesian_bit) != 0; }
    constexpr bool has_monoidal() const { return (bits_ & monoidal_bit) != 0; }

    friend constexpr bool operator==(Capabilities, Capabilities) = default;

    /// e.g. "Profunctor+Cartesian+Cocartesian".
    std::string to_string() const
    {
        std::string out = "Profunctor";
        if (has_cartesian()) out += "+Cartesian";
        if (has_cocartesian()) out += "+Cocartesian";
        if (has_monoidal()) out += "+Monoidal";
        return out;
    }

    // Public so the type is usable as a template argument.
    std::uint8_t bits_ = 0;

private:
    explicit constexpr Capabilities(std::uint8_t bits) : bits_(bits) {}
};

/// Names of the capabilities in `required` that `provided` lacks, "+"-joined;
/// empty when nothing is missing.
inline std::string missing_capabilities(Capabilities required, Capabilities provided)
{
    std::string out;
    auto note = [&](bool missing, const char* name) {
        if (!missing) return;
        if (!out.empty()) out += "+";
        out += name;
    };
    note(required.has_cartesian() && !provided.has_cartesian(), "Cartesian");
    note(required.has_cocartesian() && !provided.has_cocartesian(), "Cocartesian");
    note(required.has_monoidal() && !provided.has_monoidal(), "Monoidal");
    return out;
}

// ---------------------------------------------------------------------------
// Concepts, checked on a probe instantiation.

template <class P, class A, class B>
using transformer_t = typename P::template type<A, B>;

template <class P>
concept Profunctor = requires(transformer_t<P, int, int> h, Fn<int, int> f) {
    { P::dimap(f, f, h) } -> std::same_as<transformer_t<P, int, int>>;
};

template <class P>
concept Cartesian = Profunctor<P> && requires(transformer_t<P, int, int> h) {
    { P::template first<char>(h) } -> std::same_as<transformer_t<P, Pair<int, char>, Pair<int, char>>>;
    { P::template second<char>(h) } -> std::same_as<transformer_t<P, Pair<char, int>, Pair<char, int>>>;
};

template <class P>
concept Cocartesian = Profunctor<P> && requires(transformer_t<P, int, int> h) {
    { P::template left<char>(h) } -> std::same_as<transformer_t<P, Sum<int, char>, Sum<int, char>>>;
    { P::template right<char>(h) } -> std::same_as<transformer_t<P, Sum<char, int>, Sum<char, int>>>;
};

template <class P>
concept Monoidal = Profunctor<P> && requires(transformer_t<P, int, int> h) {
    { P::par(h, h) } -> std::same_as<transformer_t<P, Pair<int, int>, Pair<int, int>>>;
    { P::empty() } -> std::same_as<transformer_t<P, Unit, Unit>>;
};

template <class P>
concept Deferrable = Profunctor<P> && requires(Fn<Unit, transformer_t<P, int, int>> thunk) {
    { P::delay(thunk) } -> std::same_as<transformer_t<P, int, int>>;
};

template <Profunctor P>
constexpr Capabilities capabilities_of()
{
    Capabilities caps = Capabilities::profunctor();
    if constexpr (Cartesian<P>) caps = caps | Capabilities::cartesian();
    if constexpr (Cocartesian<P>) caps = caps | Capabilities::cocartesian();
    if constexpr (Monoidal<P>) caps = caps | Capabilities::monoidal();
    return caps;
}

// Free-function spellings, so generic code reads `first<C>(p, h)` rather than
// `P::template first<C>(h)`.

template <class P, class A2, class A, class B, class B2>
transformer_t<P, A2, B2> dimap(P, Fn<A2, A> f, Fn<B, B2> g, transformer_t<P, A, B> h)
{
    return P::dimap(std::move(f), std::move(g), std::move(h));
}

template <class C, class P, class H>
auto first(P, H h)
{
    return P::template first<C>(std::move(h));
}

template <class C, class P, class H>
auto second(P, H h)
{
    return P::template second<C>(std::move(h));
}

template <class C, class P, class H>
auto left(P, H h)
{
    return P::template left<C>(std::move(h));
}

template <class C, class P, class H>
auto right(P, H h)
{
    return P::template right<C>(std::move(h));
}

template <class P, class H, class K>
auto par(P, H h, K k)
{
    return P::par(std::move(h), std::move(k));
}

// ---------------------------------------------------------------------------
// The function arrow

struct FunctionArrow {
    template <class A, class B>
    using type = Fn<A, B>;

    /// dimap f g h = g . h . f
    template <class A2, class A, class B, class B2>
    static Fn<A2, B2> dimap(Fn<A2, A> f, Fn<B, B2> g, Fn<A, B> h)
    {
        return [f = std::move(f), g = std::move(g), h = std::move(h)](A2 x) {
            return g(h(f(std::move(x))));
        };
    }

    template <class C, class A, class B>
    static Fn<Pair<A, C>, Pair<B, C>> first(Fn<A, B> h)
    {
        return cross(std::move(h), id<C>());
    }

    template <class C, class A, class B>
    static Fn<Pair<C, A>, Pair<C, B>> second(Fn<A, B> h)
    {
        return cross(id<C>(), std::move(h));
    }

    template <class C, class A, class B>
    static Fn<Sum<A, C>, Sum<B, C>> left(Fn<A, B> h)
    {
        return plus(std::move(h), id<C>());
    }

    template <class C, class A, class B>
    static Fn<Sum<C, A>, Sum<C, B>> right(Fn<A, B> h)
    {
        return plus(id<C>(), std::move(h));
    }

    template <class A, class B, class C, class D>
    static Fn<Pair<A, C>, Pair<B, D>> par(Fn<A, B> h, Fn<C, D> k)
    {
        return cross(std::move(h), std::move(k));
    }

    static Fn<Unit, Unit> empty() { return id<Unit>(); }

    template <class A, class B>
    static Fn<A, B> delay(Fn<Unit, Fn<A, B>> thunk)
    {
        return [thunk = std::move(thunk)](A x) { return thunk(unit)(std::move(x)); };
    }
};

inline constexpr FunctionArrow function_arrow{};

// ---------------------------------------------------------------------------
// Effectful functions a -> F b

template <class F, class A, class B>
struct UpStar {
    using functor = F;
    Fn<A, typename F::template type<B>> run;
};

/// rstrength (fx, y) = fmap (,y) fx
template <class F, class A, class B>
typename F::template type<Pair<A, B>> rstrength(const Pair<typename F::template type<A>, B>& p)
{
    return F::fmap([y = p.second](const A& x) { return Pair<A, B>{x, y}; }, p.first);
}

/// lstrength (x, fy) = fmap (x,) fy
template <class F, class A, class B>
typename F::template type<Pair<A, B>> lstrength(const Pair<A, typename F::template type<B>>& p)
{
    return F::fmap([x = p.first](const B& y) { return Pair<A, B>{x, y}; }, p.second);
}

/// pair h k (x, y) = pure (,) <*> h x <*> k y
template <class F, class A, class B, class C, class D>
Fn<Pair<A, C>, typename F::template type<Pair<B, D>>> pair(Fn<A, typename F::template type<B>> h,
                                                            Fn<C, typename F::template type<D>> k)
{
    return [h = std::move(h), k = std::move(k)](const Pair<A, C>& p) {
        return F::ap(F::ap(F::pure(pairing<B, D>()), h(p.first)), k(p.second));
    };
}

/// Profunctor (and, given an applicative F, cocartesian and monoidal)
/// dictionary for UpStar F.
template <Functor F>
struct UpStarOf {
    template <class A, class B>
    using type = UpStar<F, A, B>;

    template <class B>
    using effect = typename F::template type<B>;

    /// dimap f g (UpStar h) = UpStar (fmap g . h . f)
    template <class A2, class A, class B, class B2>
    static UpStar<F, A2, B2> dimap(Fn<A2, A> f, Fn<B, B2> g, UpStar<F, A, B> h)
    {
        return {[f = std::move(f), g = std::move(g), h = std::move(h.run)](A2 x) {
            return F::fmap(g, h(f(std::move(x))));
        }};
    }

    /// first (UpStar h) = UpStar (rstrength . cross h id)
    template <class C, class A, class B>
    static UpStar<F, Pair<A, C>, Pair<B, C>> first(UpStar<F, A, B> h)
    {
        return {[h = std::move(h.run)](const Pair<A, C>& p) {
            return rstrength<F, B, C>(Pair<effect<B>, C>{h(p.first), p.second});
        }};
    }

    /// second (UpStar h) = UpStar (lstrength . cross id h)
    template <class C, class A, class B>
    static UpStar<F, Pair<C, A>, Pair<C, B>> second(UpStar<F, A, B> h)
    {
        return {[h = std::move(h.run)](const Pair<C, A>& p) {
            return lstrength<F, C, B>(Pair<C, effect<B>>{p.first, h(p.second)});
        }};
    }

    /// left (UpStar h) = UpStar (either (fmap Left . h) (pure . Right))
    template <class C, class A, class B>
        requires Applicative<F>
    static UpStar<F, Sum<A, C>, Sum<B, C>> left(UpStar<F, A, B> h)
    {
        using Out = Sum<B, C>;
        return {[h = std::move(h.run)](const Sum<A, C>& s) -> effect<Out> {
            if (s.is_left()) return F::fmap(inl<B, C>(), h(s.left_value()));
            return F::pure(Out::right(s.right_value()));
        }};
    }

    /// right (UpStar h) = UpStar (either (pure . Left) (fmap Right . h))
    template <class C, class A, class B>
        requires Applicative<F>
    static UpStar<F, Sum<C, A>, Sum<C, B>> right(UpStar<F, A, B> h)
    {
        using Out = Sum<C, B>;
        return {[h = std::move(h.run)](const Sum<C, A>& s) -> effect<Out> {
            if (s.is_left()) return F::pure(Out::left(s.left_value()));
            return F::fmap(inr<C, B>(), h(s.right_value()));
        }};
    }

    /// par h k = UpStar (pair h k)
    template <class A, class B, class C, class D>
        requires Applicative<F>
    static UpStar<F, Pair<A, C>, Pair<B, D>> par(UpStar<F, A, B> h, UpStar<F, C, D> k)
    {
        return {pair<F, A, B, C, D>(std::move(h.run), std::move(k.run))};
    }

    /// empty = UpStar pure
    static UpStar<F, Unit, Unit> empty()
        requires Applicative<F>
    {
        return {[](Unit u) { return F::pure(u); }};
    }

    template <class A, class B>
    static UpStar<F, A, B> delay(Fn<Unit, UpStar<F, A, B>> thunk)
    {
        return {[thunk = std::move(thunk)](A x) { return thunk(unit).run(std::move(x)); }};
    }
};

}  // namespace optics
