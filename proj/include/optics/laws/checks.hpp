#pragma once

// Law checks as deferred tasks. Each check samples its free variables
// (transformers, functions, inputs), evaluates both sides and compares them
// observationally.

#include <string>
#include <utility>
#include <vector>

#include "optics/laws/generators.hpp"
#include "optics/laws/registry.hpp"
#include "optics/laws/report.hpp"
#include "optics/optic.hpp"

namespace optics::laws {

template <class Trialer>
LawTask law_task(std::string group, std::string law, std::string instance, Config cfg,
                 Trialer trial, bool expected_to_hold = true)
{
    return {group, [=] {
                LawReport r = run_law(law, instance, cfg, TrialFn(trial));
                r.expected_to_hold = expected_to_hold;
                return r;
            }};
}

// ---------------------------------------------------------------------------
// Profunctor laws

/// dimap id id = id
/// dimap (f' . f) (g . g') = dimap f g . dimap f' g'
///
/// The type parameters are the focus types A -> B and the outer types of the
/// two dimaps; a mutation test instantiates them all at one type.
template <class P, class A = Integer, class B = bool, class A1 = std::string,
          class A2 = Option<Integer>, class B1 = Integer, class B2 = std::string>
std::vector<LawTask> profunctor_law_tasks(const Config& cfg, std::string instance,
                                          bool composition_holds = true)
{
    using H = transformer_t<P, A, B>;
    std::vector<LawTask> tasks;
    tasks.push_back(law_task("profunctor", "dimap id id = id", instance, cfg, [](Rng& rng) {
        auto h = arbitrary<H>(rng);
        auto input = describe(h, rng);
        return compare(rng, input, dimap(P{}, id<A>(), id<B>(), h), h);
    }));
    tasks.push_back(law_task(
        "profunctor", "dimap (f' . f) (g . g') = dimap f g . dimap f' g'", instance, cfg,
        [](Rng& rng) {
            auto h = arbitrary<H>(rng);
            auto f = arbitrary<Fn<A2, A1>>(rng);
            auto f1 = arbitrary<Fn<A1, A>>(rng);
            auto g = arbitrary<Fn<B1, B2>>(rng);
            auto g1 = arbitrary<Fn<B, B1>>(rng);
            auto input = describe(h, rng);
            return compare(rng, input, dimap(P{}, after(f1, f), after(g, g1), h),
                           dimap(P{}, f, g, dimap(P{}, f1, g1, h)));
        },
        composition_holds));
    return tasks;
}

// ---------------------------------------------------------------------------
// Cartesian coherence

template <class P, class A = Integer, class B = bool, class D = std::string,
          class E = Option<Integer>>
std::vector<LawTask> cartesian_law_tasks(const Config& cfg, std::string instance)
{
    using H = transformer_t<P, A, B>;
    const P p{};
    std::vector<LawTask> tasks;
    tasks.push_back(law_task("cartesian", "dimap runit runit' h = first h", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, dimap(p, runit<A>(), runit_inv<B>(), h),
                                                first<Unit>(p, h));
                             }));
    tasks.push_back(law_task(
        "cartesian", "dimap assoc assoc' (first (first h)) = first h", instance, cfg,
        [p](Rng& rng) {
            auto h = arbitrary<H>(rng);
            auto input = describe(h, rng);
            return compare(rng, input,
                           dimap(p, assoc<A, D, E>(), assoc_inv<B, D, E>(),
                                 first<E>(p, first<D>(p, h))),
                           first<Pair<D, E>>(p, h));
        }));
    tasks.push_back(law_task("cartesian", "dimap lunit lunit' h = second h", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, dimap(p, lunit<A>(), lunit_inv<B>(), h),
                                                second<Unit>(p, h));
                             }));
    tasks.push_back(law_task(
        "cartesian", "dimap assoc' assoc (second (second h)) = second h", instance, cfg,
        [p](Rng& rng) {
            auto h = arbitrary<H>(rng);
            auto input = describe(h, rng);
            return compare(rng, input,
                           dimap(p, assoc_inv<E, D, A>(), assoc<E, D, B>(),
                                 second<E>(p, second<D>(p, h))),
                           second<Pair<E, D>>(p, h));
        }));
    tasks.push_back(law_task("cartesian", "second h = dimap swap swap (first h)", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, second<D>(p, h),
                                                dimap(p, swap<D, A>(), swap<B, D>(), first<D>(p, h)));
                             }));
    return tasks;
}

// ---------------------------------------------------------------------------
// Cocartesian coherence

template <class P, class A = Integer, class B = bool, class D = std::string,
          class E = Option<Integer>>
std::vector<LawTask> cocartesian_law_tasks(const Config& cfg, std::string instance)
{
    using H = transformer_t<P, A, B>;
    const P p{};
    std::vector<LawTask> tasks;
    tasks.push_back(law_task("cocartesian", "dimap rzero rzero' h = left h", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, dimap(p, rzero<A>(), rzero_inv<B>(), h),
                                                left<Void>(p, h));
                             }));
    tasks.push_back(law_task(
        "cocartesian", "dimap coassoc coassoc' (left (left h)) = left h", instance, cfg,
        [p](Rng& rng) {
            auto h = arbitrary<H>(rng);
            auto input = describe(h, rng);
            return compare(rng, input,
                           dimap(p, coassoc<A, D, E>(), coassoc_inv<B, D, E>(),
                                 left<E>(p, left<D>(p, h))),
                           left<Sum<D, E>>(p, h));
        }));
    tasks.push_back(law_task("cocartesian", "dimap lzero lzero' h = right h", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, dimap(p, lzero<A>(), lzero_inv<B>(), h),
                                                right<Void>(p, h));
                             }));
    tasks.push_back(law_task(
        "cocartesian", "dimap coassoc' coassoc (right (right h)) = right h", instance, cfg,
        [p](Rng& rng) {
            auto h = arbitrary<H>(rng);
            auto input = describe(h, rng);
            return compare(rng, input,
                           dimap(p, coassoc_inv<E, D, A>(), coassoc<E, D, B>(),
                                 right<E>(p, right<D>(p, h))),
                           right<Sum<E, D>>(p, h));
        }));
    tasks.push_back(law_task("cocartesian", "right h = dimap swap swap (left h)", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, right<D>(p, h),
                                                dimap(p, sum_swap<D, A>(), sum_swap<B, D>(),
                                                      left<D>(p, h)));
                             }));
    return tasks;
}

// ---------------------------------------------------------------------------
// Monoidal coherence

template <class P, class A = Integer, class B = bool, class C = std::string,
          class D = Integer, class E = bool, class F = Option<Integer>>
std::vector<LawTask> monoidal_law_tasks(const Config& cfg, std::string instance)
{
    using H = transformer_t<P, A, B>;
    const P p{};
    std::vector<LawTask> tasks;
    tasks.push_back(law_task(
        "monoidal", "dimap assoc assoc' (par (par h j) k) = par h (par j k)", instance, cfg,
        [p](Rng& rng) {
            auto h = arbitrary<H>(rng);
            auto j = arbitrary<transformer_t<P, C, D>>(rng);
            auto k = arbitrary<transformer_t<P, E, F>>(rng);
            auto input = describe(h, rng);
            return compare(rng, input,
                           dimap(p, assoc<A, C, E>(), assoc_inv<B, D, F>(), par(p, par(p, h, j), k)),
                           par(p, h, par(p, j, k)));
        }));
    tasks.push_back(law_task("monoidal", "dimap runit runit' h = par h empty", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, dimap(p, runit<A>(), runit_inv<B>(), h),
                                                par(p, h, P::empty()));
                             }));
    tasks.push_back(law_task("monoidal", "dimap lunit lunit' h = par empty h", instance, cfg,
                             [p](Rng& rng) {
                                 auto h = arbitrary<H>(rng);
                                 auto input = describe(h, rng);
                                 return compare(rng, input, dimap(p, lunit<A>(), lunit_inv<B>(), h),
                                                par(p, P::empty(), h));
                             }));
    return tasks;
}

/// Every structure law the entry's capabilities call for.
template <class P>
std::vector<LawTask> structure_law_tasks_at(const Config& cfg)
{
    const std::string name = instance_name<P>();
    auto tasks = profunctor_law_tasks<P>(cfg, name);
    auto append = [&tasks](std::vector<LawTask> more) {
        for (auto& t : more) tasks.push_back(std::move(t));
    };
    if constexpr (Cartesian<P>) append(cartesian_law_tasks<P>(cfg, name));
    if constexpr (Cocartesian<P>) append(cocartesian_law_tasks<P>(cfg, name));
    if constexpr (Monoidal<P>) append(monoidal_law_tasks<P>(cfg, name));
    return tasks;
}

// ---------------------------------------------------------------------------
// Round trips between concrete and profunctor representations

/// p2c (c2p x) = x, for concrete optics drawn by `sample`.
template <class Sampler, class RoundTrip>
LawTask concrete_roundtrip_task(std::string law, std::string subject, const Config& cfg,
                                Sampler sample, RoundTrip roundtrip, bool expected = true)
{
    return law_task(
        "roundtrip", std::move(law), std::move(subject), cfg,
        [sample, roundtrip](Rng& rng) {
            auto x = sample(rng);
            auto input = describe(x, rng);
            return compare(rng, input, roundtrip(x), x);
        },
        expected);
}

/// c2p (p2c l) = l, observed at entry P on sampled transformers.
template <class P, class Sampler, class RoundTrip>
LawTask profunctor_roundtrip_task(std::string law, std::string subject, const Config& cfg,
                                  Sampler sample, RoundTrip roundtrip)
{
    return law_task("roundtrip", std::move(law), subject + " at " + instance_name<P>(), cfg,
                    [sample, roundtrip](Rng& rng) {
                        const auto l = sample(rng);
                        using Tr = optic_traits<std::decay_t<decltype(l)>>;
                        using A = typename Tr::focus_type;
                        using B = typename Tr::replacement_type;
                        auto h = arbitrary<transformer_t<P, A, B>>(rng);
                        auto input = describe(h, rng);
                        return compare(rng, input, roundtrip(l)(P{}, h), l(P{}, h));
                    });
}

// ---------------------------------------------------------------------------
// Profunctor morphisms

/// dimap f g . phi = phi . dimap f g, for phi = flip c2p k from the concrete
/// entry K to the function arrow.
template <class K, class A, class B, class S, class T, class S2, class T2, class C2P>
LawTask morphism_task(std::string law, const Config& cfg, C2P c2p)
{
    return law_task("morphism", std::move(law), instance_name<K>() + " -> function-arrow", cfg,
                    [c2p](Rng& rng) {
                        auto k = arbitrary<Fn<A, B>>(rng);
                        auto x = arbitrary<transformer_t<K, S, T>>(rng);
                        auto f = arbitrary<Fn<S2, S>>(rng);
                        auto g = arbitrary<Fn<T, T2>>(rng);
                        auto phi = [&](const auto& y) { return c2p(y)(function_arrow, k); };
                        auto input = describe(x, rng);
                        return compare(rng, input, dimap(function_arrow, f, g, phi(x)),
                                       phi(K::dimap(f, g, x)));
                    });
}

// ---------------------------------------------------------------------------
// Lemmas

/// dimap (fork id id) fst . first = id
template <class P, class A = Integer, class B = bool>
LawTask lemma_fork_first_task(const Config& cfg)
{
    return law_task("lemma", "dimap (fork id id) fst . first = id", instance_name<P>(), cfg,
                    [](Rng& rng) {
                        const P p{};
                        auto h = arbitrary<transformer_t<P, A, B>>(rng);
                        auto input = describe(h, rng);
                        return compare(rng, input,
                                       dimap(p, fork(id<A>(), id<A>()), fst<B, A>(), first<A>(p, h)),
                                       h);
                    });
}

/// dimap Right (either id id) . right = id
template <class P, class A = Integer, class B = bool>
LawTask lemma_right_either_task(const Config& cfg)
{
    return law_task("lemma", "dimap Right (either id id) . right = id", instance_name<P>(), cfg,
                    [](Rng& rng) {
                        const P p{};
                        auto h = arbitrary<transformer_t<P, A, B>>(rng);
                        auto input = describe(h, rng);
                        return compare(rng, input,
                                       dimap(p, inr<B, A>(), either(id<B>(), id<B>()),
                                             right<B>(p, h)),
                                       h);
                    });
}

/// traverse (Traversal h) = Traversal (travFunList h), at the traversal entry.
template <class X = Integer, class Y = bool, class A = std::string, class D = Option<Integer>,
          class C = bool, class T = Integer>
LawTask lemma_traverse_concrete_task(const Config& cfg)
{
    using K = TraversalOf<X, Y>;
    return law_task("lemma", "traverse (Traversal h) = Traversal (travFunList h)",
                    instance_name<K>(), cfg, [](Rng& rng) {
                        auto h = arbitrary<Fn<A, FunList<X, Y, D>>>(rng);
                        auto lhs = traverse<A, D, C, T>(K{}, Traversal<X, Y, A, D>{h});
                        Traversal<X, Y, FunList<A, C, T>, FunList<D, C, T>> rhs{
                            [h](const FunList<A, C, T>& l) {
                                return trav_funlist<FunListApplicative<X, Y>>(h, l);
                            }};
                        auto input = describe(h, rng);
                        return compare(rng, input, lhs, rhs);
                    });
}

/// dimap (const (Done t)) id (traverse k) = dimap id (const (Done t)) identity
template <class P, class A = Integer, class B = bool, class C = std::string,
          class T = Option<Integer>, class X = Integer>
LawTask lemma_traverse_done_task(const Config& cfg)
{
    return law_task("lemma", "dimap (const (Done t)) id (traverse k) = dimap id (const (Done t)) identity",
                    instance_name<P>(), cfg, [](Rng& rng) {
                        const P p{};
                        auto k = arbitrary<transformer_t<P, A, B>>(rng);
                        auto t = arbitrary<T>(rng);
                        auto lhs = dimap(p, constant<X>(done<A, C, T>(t)), id<FunList<B, C, T>>(),
                                         traverse<A, B, C, T>(p, k));
                        auto rhs = dimap(p, id<X>(), constant<X>(done<B, C, T>(t)),
                                         identity_transformer<X>(p));
                        auto input = describe(k, rng);
                        return compare(rng, input, lhs, rhs);
                    });
}

/// dimap Left id (right f) = dimap id Left identity, at the function arrow.
template <class A = Integer, class B = bool, class C = std::string>
LawTask lemma_right_left_identity_task(const Config& cfg)
{
    return law_task("lemma", "dimap Left id (right f) = dimap id Left identity",
                    instance_name<FunctionArrow>(), cfg, [](Rng& rng) {
                        auto f = arbitrary<Fn<A, B>>(rng);
                        auto lhs = dimap(function_arrow, inl<C, A>(), id<Sum<C, B>>(),
                                         right<C>(function_arrow, f));
                        auto rhs = dimap(function_arrow, id<C>(), inl<C, B>(),
                                         identity_transformer<C>(function_arrow));
                        auto input = describe(f, rng);
                        return compare(rng, input, lhs, rhs);
                    });
}

/// dimap single id (traverse k) = dimap id single k
template <class P, class A = Integer, class B = bool>
LawTask lemma_traverse_single_task(const Config& cfg)
{
    return law_task("lemma", "dimap single id (traverse k) = dimap id single k",
                    instance_name<P>(), cfg, [](Rng& rng) {
                        const P p{};
                        auto k = arbitrary<transformer_t<P, A, B>>(rng);
                        auto lhs = dimap(p, single_fn<A, B>(), id<FunList<B, B, B>>(),
                                         traverse<A, B, B, B>(p, k));
                        auto rhs = dimap(p, id<A>(), single_fn<B, B>(), k);
                        auto input = describe(k, rng);
                        return compare(rng, input, lhs, rhs);
                    });
}

/// fmap fuse . travFunList single = id, on FunLists of one length.
template <class A = Integer, class B = bool, class T = std::string>
LawTask lemma_fuse_single_task(const Config& cfg, std::size_t length)
{
    return law_task("lemma", "fmap fuse . travFunList single = id",
                    "funlist length " + std::to_string(length), cfg, [length](Rng& rng) {
                        using F = FunListApplicative<A, B>;
                        auto l = sample_funlist<A, B, T>(rng, length);
                        auto lhs = F::fmap(fuse_fn<B, T>(), trav_funlist<F>(single_fn<A, B>(), l));
                        auto input = describe(l, rng);
                        return compare(rng, input, lhs, l);
                    });
}

// ---------------------------------------------------------------------------
// Well-behaved lenses (optional)

/// view (update (a, s)) = a
template <class A, class S>
LawTask put_get_task(std::string subject, const Config& cfg, Lens<A, A, S, S> l,
                     bool expected = true)
{
    return law_task(
        "well-behaved", "view (update (a, s)) = a", std::move(subject), cfg,
        [l](Rng& rng) {
            auto a = arbitrary<A>(rng);
            auto s = arbitrary<S>(rng);
            std::string input = "a=" + describe(a, rng) + " s=" + describe(s, rng);
            return compare(rng, input, l.view(l.update({a, s})), a);
        },
        expected);
}

/// update (view s, s) = s
template <class A, class S>
LawTask get_put_task(std::string subject, const Config& cfg, Lens<A, A, S, S> l,
                     bool expected = true)
{
    return law_task(
        "well-behaved", "update (view s, s) = s", std::move(subject), cfg,
        [l](Rng& rng) {
            auto s = arbitrary<S>(rng);
            auto input = "s=" + describe(s, rng);
            return compare(rng, input, l.update({l.view(s), s}), s);
        },
        expected);
}

}  // namespace optics::laws
