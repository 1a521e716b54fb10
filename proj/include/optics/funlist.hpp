#pragma once

// FunList a b t: a finite sequence of a-elements together with a way to
// rebuild a t from the same number of b-elements.
//
// Stored in its exists-n form, contents : a^n and refill : b^n -> t. The
// constructor-level view (Done t | More x l, with l : FunList a b (b -> t))
// is recovered through done/more and out/inn.

#include <cassert>
#include <memory>
#include <utility>
#include <vector>

#include "optics/applicative.hpp"
#include "optics/prelude.hpp"

namespace optics {

/// A read-only window onto a shared sequence. Taking and dropping prefixes
/// share the storage instead of copying it.
template <class B>
class Slice {
public:
    Slice() : data_(empty_storage()) {}
    explicit Slice(std::vector<B> values)
        : data_(std::make_shared<const std::vector<B>>(std::move(values))), size_(data_->size())
    {
    }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    B operator[](std::size_t i) const
    {
        assert(i < size_);
        return (*data_)[offset_ + i];
    }

    B front() const { return (*this)[0]; }

    Slice take(std::size_t n) const
    {
        assert(n <= size_);
        return Slice(data_, offset_, n);
    }

    Slice drop(std::size_t n) const
    {
        assert(n <= size_);
        return Slice(data_, offset_ + n, size_ - n);
    }

    /// x followed by this slice; copies.
    Slice cons(B x) const
    {
        std::vector<B> out;
        out.reserve(size_ + 1);
        out.push_back(std::move(x));
        for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i]);
        return Slice(std::move(out));
    }

    std::vector<B> to_vector() const
    {
        return std::vector<B>(data_->begin() + static_cast<std::ptrdiff_t>(offset_),
                              data_->begin() + static_cast<std::ptrdiff_t>(offset_ + size_));
    }

private:
    static const std::shared_ptr<const std::vector<B>>& empty_storage()
    {
        static const auto storage = std::make_shared<const std::vector<B>>();
        return storage;
    }

    Slice(std::shared_ptr<const std::vector<B>> data, std::size_t offset, std::size_t size)
        : data_(std::move(data)), offset_(offset), size_(size)
    {
    }

    std::shared_ptr<const std::vector<B>> data_;
    std::size_t offset_ = 0;
    std::size_t size_ = 0;
};

template <class A, class B, class T>
struct FunList {
    using value_type = T;
    using element_type = A;
    using refill_type = B;

    std::vector<A> contents;
    /// Defined on sequences of length contents.size().
    Fn<Slice<B>, T> refill;

    std::size_t size() const noexcept { return contents.size(); }
    bool is_done() const noexcept { return contents.empty(); }

    /// Rebuilds a T from exactly size() replacement values.
    T fill(std::vector<B> bs) const
    {
        assert(bs.size() == contents.size());
        return refill(Slice<B>(std::move(bs)));
    }
};

/// Done t
template <class A, class B, class T>
FunList<A, B, T> done(T value)
{
    return {{}, [value = std::move(value)](const Slice<B>&) { return value; }};
}

/// More x l. The head is refilled from the first b, the tail from the rest.
template <class A, class B, class T>
FunList<A, B, T> more(A head, FunList<A, B, Fn<B, T>> tail)
{
    std::vector<A> contents;
    contents.reserve(tail.contents.size() + 1);
    contents.push_back(std::move(head));
    contents.insert(contents.end(), tail.contents.begin(), tail.contents.end());
    return {std::move(contents), [k = std::move(tail.refill)](const Slice<B>& bs) {
                assert(!bs.empty());
                return k(bs.drop(1))(bs.front());
            }};
}

template <class A, class B, class T>
using FunListView = Sum<T, Pair<A, FunList<A, B, Fn<B, T>>>>;

/// out (Done t) = Left t; out (More x l) = Right (x, l)
template <class A, class B, class T>
FunListView<A, B, T> out(const FunList<A, B, T>& l)
{
    using View = FunListView<A, B, T>;
    if (l.is_done()) return View::left(l.refill(Slice<B>()));
    FunList<A, B, Fn<B, T>> tail{std::vector<A>(l.contents.begin() + 1, l.contents.end()),
                                 [k = l.refill](const Slice<B>& bs) -> Fn<B, T> {
                                     return [k, bs](B b) { return k(bs.cons(std::move(b))); };
                                 }};
    return View::right({l.contents.front(), std::move(tail)});
}

/// inn (Left t) = Done t; inn (Right (x, l)) = More x l
template <class A, class B, class T>
FunList<A, B, T> inn(const FunListView<A, B, T>& view)
{
    if (view.is_left()) return done<A, B, T>(view.left_value());
    const auto& [head, tail] = view.right_value();
    return more<A, B, T>(head, tail);
}

template <class A, class B, class T>
Fn<FunList<A, B, T>, FunListView<A, B, T>> out_fn()
{
    return [](const FunList<A, B, T>& l) { return out(l); };
}

template <class A, class B, class T>
Fn<FunListView<A, B, T>, FunList<A, B, T>> inn_fn()
{
    return [](const FunListView<A, B, T>& v) { return inn<A, B, T>(v); };
}

/// FunList a b is an applicative functor: mapping acts on the result,
/// pure is Done, and <*> concatenates the element sequences.
template <class A, class B>
struct FunListApplicative {
    template <class T>
    using type = FunList<A, B, T>;

    template <class F, class T>
    static auto fmap(F f, const FunList<A, B, T>& l)
        -> FunList<A, B, std::invoke_result_t<F&, const T&>>
    {
        return {l.contents, [f = std::move(f), k = l.refill](const Slice<B>& bs) {
                    return f(k(bs));
                }};
    }

    template <class T>
    static FunList<A, B, T> pure(T value)
    {
        return done<A, B, T>(std::move(value));
    }

    template <class T, class U>
    static FunList<A, B, U> ap(const FunList<A, B, Fn<T, U>>& fs, const FunList<A, B, T>& xs)
    {
        std::vector<A> contents = fs.contents;
        contents.insert(contents.end(), xs.contents.begin(), xs.contents.end());
        const std::size_t split = fs.contents.size();
        return {std::move(contents),
                [split, kf = fs.refill, kx = xs.refill](const Slice<B>& bs) {
                    return kf(bs.take(split))(kx(bs.drop(split)));
                }};
    }
};

/// single x = More x (Done id)
template <class A, class B>
FunList<A, B, B> single(A x)
{
    return more<A, B, B>(std::move(x), done<A, B, Fn<B, B>>(id<B>()));
}

template <class A, class B>
Fn<A, FunList<A, B, B>> single_fn()
{
    return [](A x) { return single<A, B>(std::move(x)); };
}

/// fuse (Done t) = t; fuse (More x l) = fuse l x
template <class B, class T>
T fuse(const FunList<B, B, T>& l)
{
    return l.refill(Slice<B>(l.contents));
}

template <class B, class T>
Fn<FunList<B, B, T>, T> fuse_fn()
{
    return [](const FunList<B, B, T>& l) { return fuse(l); };
}

/// Applies f to each element left to right, sequencing its effects, and keeps
/// the refill continuation.
///   travFunList f (Done t)   = pure (Done t)
///   travFunList f (More x l) = pure More <*> f x <*> travFunList f l
template <class F, class A, class C, class T, class G>
auto trav_funlist(G f, const FunList<A, C, T>& l)
{
    using FB = std::invoke_result_t<G&, const A&>;
    using B = value_of<FB>;
    using Elems = std::vector<B>;

    auto acc = F::pure(Elems{});
    Fn<Elems, Fn<B, Elems>> snoc = [](Elems bs) -> Fn<B, Elems> {
        return [bs = std::move(bs)](B b) {
            Elems next = bs;
            next.push_back(std::move(b));
            return next;
        };
    };
    for (const auto& x : l.contents) {
        acc = F::ap(F::fmap(snoc, acc), f(x));
    }
    return F::fmap([k = l.refill](Elems bs) { return FunList<B, C, T>{std::move(bs), k}; }, acc);
}

}  // namespace optics
