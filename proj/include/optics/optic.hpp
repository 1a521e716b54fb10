#pragma once

// Profunctor optics: mappings from transformers P a b to transformers P s t
// that work uniformly across every profunctor dictionary P meeting the
// optic's capability requirement. Optics compose by composing the mappings,
// and the requirement of a composite is the union of its parts'.

#include <any>
#include <utility>

#include "optics/concrete.hpp"
#include "optics/funlist.hpp"
#include "optics/prelude.hpp"
#include "optics/profunctor.hpp"

namespace optics {

template <Capabilities Required, class A, class B, class S, class T, class Body>
class Optic {
public:
    using focus_type = A;
    using replacement_type = B;
    using source_type = S;
    using target_type = T;

    static constexpr Capabilities requirement = Required;

    template <class P>
    static constexpr bool applicable_at = capabilities_of<P>().includes(Required);

    explicit Optic(Body body) : body_(std::move(body)) {}

    template <class P>
    transformer_t<P, S, T> operator()(P p, transformer_t<P, A, B> h) const
    {
        static_assert(!Required.has_cartesian() || Cartesian<P>,
                      "optic requires a Cartesian profunctor instance");
        static_assert(!Required.has_cocartesian() || Cocartesian<P>,
                      "optic requires a Cocartesian profunctor instance");
        static_assert(!Required.has_monoidal() || Monoidal<P>,
                      "optic requires a Monoidal profunctor instance");
        return body_(p, std::move(h));
    }

private:
    Body body_;
};

/// Builds an optic from a generic body `(P p, P a b h) -> P s t`.
template <Capabilities Required, class A, class B, class S, class T, class Body>
auto make_optic(Body body)
{
    return Optic<Required, A, B, S, T, Body>(std::move(body));
}

template <class O>
struct optic_traits;

template <Capabilities R, class A, class B, class S, class T, class Body>
struct optic_traits<Optic<R, A, B, S, T, Body>> {
    using focus_type = A;
    using replacement_type = B;
    using source_type = S;
    using target_type = T;
    static constexpr Capabilities requirement = R;
};

/// compose(inner, outer) applies `inner` first: the result focuses on what
/// `inner` focuses on, inside what `outer` focuses on.
template <Capabilities R1, class A, class B, class S, class T, class Body1,
          Capabilities R2, class U, class V, class Body2>
auto compose(Optic<R1, A, B, S, T, Body1> inner, Optic<R2, S, T, U, V, Body2> outer)
{
    return make_optic<R1 | R2, A, B, U, V>(
        [inner = std::move(inner), outer = std::move(outer)](auto p, auto h) {
            return outer(p, inner(p, std::move(h)));
        });
}

/// The do-nothing optic.
template <class A, class B>
auto identity_optic()
{
    return make_optic<Capabilities::adapter(), A, B, A, B>([](auto, auto h) { return h; });
}

/// Modifies the focus with a plain function.
template <class O, class F>
auto over(const O& optic, F f)
{
    using A = typename optic_traits<O>::focus_type;
    return optic(function_arrow, fn<A>(std::move(f)));
}

// ---------------------------------------------------------------------------
// Adapters

template <class A, class B, class S, class T>
auto adapter_c2p(Adapter<A, B, S, T> a)
{
    return make_optic<Capabilities::adapter(), A, B, S, T>(
        [a = std::move(a)]<class P>(P p, transformer_t<P, A, B> h) {
            return dimap(p, a.from, a.to, std::move(h));
        });
}

template <class O>
auto adapter_p2c(const O& optic)
{
    using Tr = optic_traits<O>;
    using A = typename Tr::focus_type;
    using B = typename Tr::replacement_type;
    return optic(AdapterOf<A, B>{}, Adapter<A, B, A, B>{id<A>(), id<B>()});
}

// ---------------------------------------------------------------------------
// Lenses

/// lensC2P (Lens v u) = dimap (fork v id) u . first
template <class A, class B, class S, class T>
auto lens_c2p(Lens<A, B, S, T> l)
{
    return make_optic<Capabilities::lens(), A, B, S, T>(
        [l = std::move(l)]<class P>(P p, transformer_t<P, A, B> h) {
            return dimap(p, fork(l.view, id<S>()), l.update, first<S>(p, std::move(h)));
        });
}

/// lensP2C l = l (Lens id fst)
template <class O>
auto lens_p2c(const O& optic)
{
    using Tr = optic_traits<O>;
    using A = typename Tr::focus_type;
    using B = typename Tr::replacement_type;
    return optic(LensOf<A, B>{}, Lens<A, B, A, B>{id<A>(), fst<B, A>()});
}

// ---------------------------------------------------------------------------
// Prisms

/// prismC2P (Prism m b) = dimap m (either id b) . right
template <class A, class B, class S, class T>
auto prism_c2p(Prism<A, B, S, T> pr)
{
    return make_optic<Capabilities::prism(), A, B, S, T>(
        [pr = std::move(pr)]<class P>(P p, transformer_t<P, A, B> h) {
            return dimap(p, pr.match, either(id<T>(), pr.build), right<T>(p, std::move(h)));
        });
}

/// prismP2C l = l (Prism Right id)
template <class O>
auto prism_p2c(const O& optic)
{
    using Tr = optic_traits<O>;
    using A = typename Tr::focus_type;
    using B = typename Tr::replacement_type;
    return optic(PrismOf<A, B>{}, Prism<A, B, A, B>{inr<B, A>(), id<B>()});
}

// ---------------------------------------------------------------------------
// Traversals

namespace detail {

using Erased = std::any;

/// The constructor view with the tail's continuation erased as well.
template <class A, class C>
using ErasedView = Sum<Erased, Pair<A, FunList<A, C, Erased>>>;

template <class A, class C>
Fn<FunList<A, C, Erased>, ErasedView<A, C>> out_erased()
{
    using Tail = FunList<A, C, Fn<C, Erased>>;
    Fn<Tail, FunList<A, C, Erased>> erase = [](const Tail& l) {
        return FunListApplicative<A, C>::fmap([](const Fn<C, Erased>& k) { return Erased(k); }, l);
    };
    return after(plus(id<Erased>(), cross(id<A>(), erase)), out_fn<A, C, Erased>());
}

template <class B, class C>
Fn<ErasedView<B, C>, FunList<B, C, Erased>> inn_erased()
{
    using Tail = FunList<B, C, Erased>;
    Fn<Tail, FunList<B, C, Fn<C, Erased>>> restore = [](const Tail& l) {
        return FunListApplicative<B, C>::fmap(
            [](const Erased& k) { return std::any_cast<Fn<C, Erased>>(k); }, l);
    };
    return after(inn_fn<B, C, Erased>(), plus(id<Erased>(), cross(id<B>(), restore)));
}

/// traverse k = dimap out inn (right (par k (traverse k))), at an erased
/// result type so the recursive occurrence has the same type as the whole.
template <class C, class P, class A, class B>
transformer_t<P, FunList<A, C, Erased>, FunList<B, C, Erased>> traverse_erased(
    P p, const transformer_t<P, A, B>& k)
{
    using In = FunList<A, C, Erased>;
    using Out = FunList<B, C, Erased>;
    Fn<Unit, transformer_t<P, In, Out>> rest = [p, k](Unit) {
        return traverse_erased<C, P, A, B>(p, k);
    };
    auto tail = P::delay(std::move(rest));
    return dimap(p, out_erased<A, C>(), inn_erased<B, C>(), right<Erased>(p, par(p, k, tail)));
}

}  // namespace detail

/// Lifts k : P a b to act on every element of a FunList, in order, keeping
/// the refill continuation.
template <class A, class B, class C, class T, class P>
transformer_t<P, FunList<A, C, T>, FunList<B, C, T>> traverse(P p, transformer_t<P, A, B> k)
{
    static_assert(Cocartesian<P> && Monoidal<P> && Deferrable<P>,
                  "traverse needs a Cocartesian, Monoidal profunctor with delay");
    using detail::Erased;
    Fn<FunList<A, C, T>, FunList<A, C, Erased>> erase = [](const FunList<A, C, T>& l) {
        return FunListApplicative<A, C>::fmap([](const T& t) { return Erased(t); }, l);
    };
    Fn<FunList<B, C, Erased>, FunList<B, C, T>> restore = [](const FunList<B, C, Erased>& l) {
        return FunListApplicative<B, C>::fmap([](const Erased& t) { return std::any_cast<T>(t); },
                                              l);
    };
    return dimap(p, erase, restore, detail::traverse_erased<C, P, A, B>(p, k));
}

/// traversalC2P (Traversal h) k = dimap h fuse (traverse k)
template <class A, class B, class S, class T>
auto traversal_c2p(Traversal<A, B, S, T> tr)
{
    return make_optic<Capabilities::traversal(), A, B, S, T>(
        [tr = std::move(tr)]<class P>(P p, transformer_t<P, A, B> k) {
            return dimap(p, tr.extract, fuse_fn<B, T>(), traverse<A, B, B, T>(p, std::move(k)));
        });
}

/// traversalP2C l = l (Traversal single)
template <class O>
auto traversal_p2c(const O& optic)
{
    using Tr = optic_traits<O>;
    using A = typename Tr::focus_type;
    using B = typename Tr::replacement_type;
    return optic(TraversalOf<A, B>{}, Traversal<A, B, A, B>{single_fn<A, B>()});
}

/// traverseOf p f = unUpStar (p (UpStar f)): the effectful traversal
/// function for applicative F.
template <class F, class O, class G>
auto traverse_of(const O& optic, G f)
{
    using A = typename optic_traits<O>::focus_type;
    using FB = std::invoke_result_t<G&, const A&>;
    using B = value_of<FB>;
    static_assert(std::is_same_v<B, typename optic_traits<O>::replacement_type>,
                  "effectful body must produce the optic's replacement type");
    return optic(UpStarOf<F>{}, UpStar<F, A, B>{Fn<A, FB>(std::move(f))}).run;
}

/// identity = dimap lunit' lunit (first empty)
template <class A, class P>
transformer_t<P, A, A> identity_transformer(P p)
{
    return dimap(p, lunit_inv<A>(), lunit<A>(), first<A>(p, P::empty()));
}

// ---------------------------------------------------------------------------
// Derived optics

/// dimap (fork fst id) (cross id snd) . first
template <class A, class B, class C>
auto pi1_p()
{
    using S = Pair<A, C>;
    return make_optic<Capabilities::lens(), A, B, S, Pair<B, C>>(
        []<class P>(P p, transformer_t<P, A, B> h) {
            return dimap(p, fork(fst<A, C>(), id<S>()), cross(id<B>(), snd<A, C>()),
                         first<S>(p, std::move(h)));
        });
}

/// pi1_p . pi1_p: the leftmost component of a nested pair.
template <class A, class B, class C, class D>
auto pi11_p()
{
    return compose(pi1_p<A, B, C>(), pi1_p<Pair<A, C>, Pair<B, C>, D>());
}

/// dimap (maybe (Left Nothing) Right) (either id Just) . right
template <class A, class B>
auto the_p()
{
    using Match = Sum<Option<B>, A>;
    return make_optic<Capabilities::prism(), A, B, Option<A>, Option<B>>(
        []<class P>(P p, transformer_t<P, A, B> h) {
            return dimap(p, maybe(Match::left(Option<B>()), inr<Option<B>, A>()),
                         either(id<Option<B>>(), just<B>()), right<Option<B>>(p, std::move(h)));
        });
}

template <class A, class B>
auto inorder_p()
{
    return traversal_c2p(inorder_c<A, B>());
}

}  // namespace optics
