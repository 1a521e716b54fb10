#pragma once

// Structural helpers shared by every other header: typed function values,
// products, sums, options, and the unit/void types, together with the
// combinators (fork, cross, plus, either, maybe, flip) and isomorphism
// witnesses the profunctor laws are stated in terms of.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>

namespace optics {

using Integer = std::int64_t;

/// A pure function value from A to B. Immutable; copies share the
/// underlying callable, so closures nested inside closures are never
/// deep-copied.
template <class A, class B>
class Fn {
public:
    using argument_type = A;
    using result_type = B;

    Fn() = default;

    template <class F>
        requires(!std::is_same_v<std::decay_t<F>, Fn> &&
                 std::is_invocable_r_v<B, const std::decay_t<F>&, A>)
    Fn(F&& f) : impl_(std::make_shared<const Impl<std::decay_t<F>>>(std::forward<F>(f)))
    {
    }

    B operator()(A x) const { return impl_->call(std::move(x)); }

    explicit operator bool() const noexcept { return impl_ != nullptr; }

private:
    struct Base {
        virtual ~Base() = default;
        virtual B call(A x) const = 0;
    };

    template <class F>
    struct Impl final : Base {
        template <class G>
        explicit Impl(G&& g) : f(std::forward<G>(g))
        {
        }
        B call(A x) const override { return std::invoke(f, std::move(x)); }
        F f;
    };

    std::shared_ptr<const Base> impl_;
};

template <class A, class B>
using Pair = std::pair<A, B>;

template <class A>
using Option = std::optional<A>;

/// The type with exactly one value.
struct Unit {
    friend constexpr bool operator==(Unit, Unit) noexcept { return true; }
};

inline constexpr Unit unit{};

/// The uninhabited type. Only the implicit copy/move constructors exist, so no
/// value can ever be created; containers may still mention it as a type.
struct Void {
    Void() = delete;
    friend constexpr bool operator==(const Void&, const Void&) noexcept { return true; }
};

/// Tagged sum. Unlike a bare std::variant the two sides may have the same type.
template <class L, class R>
class Sum {
public:
    using left_type = L;
    using right_type = R;

    static Sum left(L x) { return Sum(std::in_place_index<0>, std::move(x)); }
    static Sum right(R x) { return Sum(std::in_place_index<1>, std::move(x)); }

    bool is_left() const noexcept { return value_.index() == 0; }
    bool is_right() const noexcept { return value_.index() == 1; }

    const L& left_value() const { return std::get<0>(value_); }
    const R& right_value() const { return std::get<1>(value_); }

    friend bool operator==(const Sum&, const Sum&) = default;

private:
    template <std::size_t I, class X>
    Sum(std::in_place_index_t<I> tag, X&& x) : value_(tag, std::forward<X>(x))
    {
    }

    std::variant<L, R> value_;
};

// ---------------------------------------------------------------------------
// Function construction and composition

/// Wraps a callable as a typed function value, fixing the argument type.
template <class A, class F>
auto fn(F f) -> Fn<A, std::invoke_result_t<F&, const A&>>
{
    return f;
}

template <class A>
Fn<A, A> id()
{
    return [](A x) { return x; };
}

/// g . f
template <class A, class B, class C>
Fn<A, C> after(Fn<B, C> g, Fn<A, B> f)
{
    return [g = std::move(g), f = std::move(f)](A x) { return g(f(std::move(x))); };
}

template <class A, class B>
Fn<A, B> constant(B value)
{
    return [value = std::move(value)](const A&) { return value; };
}

// ---------------------------------------------------------------------------
// Products

template <class A, class B>
Fn<Pair<A, B>, A> fst()
{
    return [](const Pair<A, B>& p) { return p.first; };
}

template <class A, class B>
Fn<Pair<A, B>, B> snd()
{
    return [](const Pair<A, B>& p) { return p.second; };
}

/// fork f g x = (f x, g x)
template <class A, class B, class C>
Fn<A, Pair<B, C>> fork(Fn<A, B> f, Fn<A, C> g)
{
    return [f = std::move(f), g = std::move(g)](const A& x) { return Pair<B, C>{f(x), g(x)}; };
}

/// cross f g (x, y) = (f x, g y)
template <class A, class A2, class B, class B2>
Fn<Pair<A, B>, Pair<A2, B2>> cross(Fn<A, A2> f, Fn<B, B2> g)
{
    return [f = std::move(f), g = std::move(g)](const Pair<A, B>& p) {
        return Pair<A2, B2>{f(p.first), g(p.second)};
    };
}

/// Curried pairing, the function written (,) in the laws.
template <class A, class B>
Fn<A, Fn<B, Pair<A, B>>> pairing()
{
    return [](A x) -> Fn<B, Pair<A, B>> {
        return [x = std::move(x)](B y) { return Pair<A, B>{x, std::move(y)}; };
    };
}

// ---------------------------------------------------------------------------
// Sums

template <class A, class B>
Fn<A, Sum<A, B>> inl()
{
    return [](A x) { return Sum<A, B>::left(std::move(x)); };
}

template <class A, class B>
Fn<B, Sum<A, B>> inr()
{
    return [](B x) { return Sum<A, B>::right(std::move(x)); };
}

/// Case analysis: either f g (Left x) = f x, either f g (Right y) = g y.
template <class A, class B, class C>
Fn<Sum<A, B>, C> either(Fn<A, C> f, Fn<B, C> g)
{
    return [f = std::move(f), g = std::move(g)](const Sum<A, B>& s) -> C {
        return s.is_left() ? f(s.left_value()) : g(s.right_value());
    };
}

/// plus f g = either (Left . f) (Right . g)
template <class A, class A2, class B, class B2>
Fn<Sum<A, B>, Sum<A2, B2>> plus(Fn<A, A2> f, Fn<B, B2> g)
{
    return [f = std::move(f), g = std::move(g)](const Sum<A, B>& s) {
        return s.is_left() ? Sum<A2, B2>::left(f(s.left_value()))
                           : Sum<A2, B2>::right(g(s.right_value()));
    };
}

// ---------------------------------------------------------------------------
// Options

template <class A>
Fn<A, Option<A>> just()
{
    return [](A x) { return Option<A>(std::move(x)); };
}

/// maybe d f Nothing = d; maybe d f (Just x) = f x
template <class A, class B>
Fn<Option<A>, B> maybe(B fallback, Fn<A, B> f)
{
    return [fallback = std::move(fallback), f = std::move(f)](const Option<A>& x) {
        return x ? f(*x) : fallback;
    };
}

// ---------------------------------------------------------------------------
// Curried functions

/// flip f x y = f y x
template <class A, class B, class C>
Fn<B, Fn<A, C>> flip(Fn<A, Fn<B, C>> f)
{
    return [f = std::move(f)](B y) -> Fn<A, C> {
        return [f, y = std::move(y)](A x) { return f(std::move(x))(y); };
    };
}

// ---------------------------------------------------------------------------
// Isomorphism witnesses. Each `_inv` is the inverse of its unsuffixed partner.

template <class A>
Fn<Pair<A, Unit>, A> runit()
{
    return [](const Pair<A, Unit>& p) { return p.first; };
}

template <class A>
Fn<A, Pair<A, Unit>> runit_inv()
{
    return [](A x) { return Pair<A, Unit>{std::move(x), unit}; };
}

template <class A>
Fn<Pair<Unit, A>, A> lunit()
{
    return [](const Pair<Unit, A>& p) { return p.second; };
}

template <class A>
Fn<A, Pair<Unit, A>> lunit_inv()
{
    return [](A x) { return Pair<Unit, A>{unit, std::move(x)}; };
}

template <class A, class B, class C>
Fn<Pair<A, Pair<B, C>>, Pair<Pair<A, B>, C>> assoc()
{
    return [](const Pair<A, Pair<B, C>>& p) {
        return Pair<Pair<A, B>, C>{{p.first, p.second.first}, p.second.second};
    };
}

template <class A, class B, class C>
Fn<Pair<Pair<A, B>, C>, Pair<A, Pair<B, C>>> assoc_inv()
{
    return [](const Pair<Pair<A, B>, C>& p) {
        return Pair<A, Pair<B, C>>{p.first.first, {p.first.second, p.second}};
    };
}

template <class A, class B>
Fn<Pair<A, B>, Pair<B, A>> swap()
{
    return [](const Pair<A, B>& p) { return Pair<B, A>{p.second, p.first}; };
}

/// absurd :: 0 -> a. Unreachable, since Void has no values.
template <class A>
A absurd(const Void&)
{
    throw std::logic_error("absurd: a value of the empty type was observed");
}

template <class A>
Fn<Void, A> absurd_fn()
{
    return [](const Void& v) -> A { return absurd<A>(v); };
}

template <class A>
Fn<Sum<A, Void>, A> rzero()
{
    return either(id<A>(), absurd_fn<A>());
}

template <class A>
Fn<A, Sum<A, Void>> rzero_inv()
{
    return inl<A, Void>();
}

template <class A>
Fn<Sum<Void, A>, A> lzero()
{
    return either(absurd_fn<A>(), id<A>());
}

template <class A>
Fn<A, Sum<Void, A>> lzero_inv()
{
    return inr<Void, A>();
}

/// coassoc :: a + (b + c) -> (a + b) + c
template <class A, class B, class C>
Fn<Sum<A, Sum<B, C>>, Sum<Sum<A, B>, C>> coassoc()
{
    using Out = Sum<Sum<A, B>, C>;
    return [](const Sum<A, Sum<B, C>>& s) {
        if (s.is_left()) return Out::left(Sum<A, B>::left(s.left_value()));
        const auto& inner = s.right_value();
        if (inner.is_left()) return Out::left(Sum<A, B>::right(inner.left_value()));
        return Out::right(inner.right_value());
    };
}

/// coassoc_inv :: (a + b) + c -> a + (b + c)
template <class A, class B, class C>
Fn<Sum<Sum<A, B>, C>, Sum<A, Sum<B, C>>> coassoc_inv()
{
    using Out = Sum<A, Sum<B, C>>;
    return [](const Sum<Sum<A, B>, C>& s) {
        if (s.is_right()) return Out::right(Sum<B, C>::right(s.right_value()));
        const auto& inner = s.left_value();
        if (inner.is_left()) return Out::left(inner.left_value());
        return Out::right(Sum<B, C>::left(inner.right_value()));
    };
}

template <class A, class B>
Fn<Sum<A, B>, Sum<B, A>> sum_swap()
{
    return either(inr<B, A>(), inl<B, A>());
}

}  // namespace optics
