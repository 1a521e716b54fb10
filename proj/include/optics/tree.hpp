#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "optics/applicative.hpp"
#include "optics/prelude.hpp"

namespace optics {

template <class A>
struct TreeNode;

/// Internally labelled binary tree: Empty | Node left label right.
/// Immutable; subtrees are shared between copies.
template <class A>
class Tree {
public:
    using label_type = A;

    Tree() = default;

    static Tree node(Tree left, A label, Tree right)
    {
        return Tree(std::make_shared<const TreeNode<A>>(
            TreeNode<A>{std::move(left), std::move(label), std::move(right)}));
    }

    static Tree leaf(A label) { return node(Tree(), std::move(label), Tree()); }

    bool empty() const noexcept { return node_ == nullptr; }

    const Tree& left() const { return node_->left; }
    const A& label() const { return node_->label; }
    const Tree& right() const { return node_->right; }

    std::size_t size() const { return empty() ? 0 : left().size() + 1 + right().size(); }

    friend bool operator==(const Tree& a, const Tree& b)
    {
        if (a.empty() || b.empty()) return a.empty() == b.empty();
        return a.label() == b.label() && a.left() == b.left() && a.right() == b.right();
    }

private:
    explicit Tree(std::shared_ptr<const TreeNode<A>> node) : node_(std::move(node)) {}

    std::shared_ptr<const TreeNode<A>> node_;
};

template <class A>
struct TreeNode {
    Tree<A> left;
    A label;
    Tree<A> right;
};

/// Labels in left-root-right order.
template <class A>
std::vector<A> inorder_labels(const Tree<A>& t)
{
    std::vector<A> out;
    auto walk = [&out](const auto& self, const Tree<A>& u) -> void {
        if (u.empty()) return;
        self(self, u.left());
        out.push_back(u.label());
        self(self, u.right());
    };
    walk(walk, t);
    return out;
}

template <class A, class F>
auto map_tree(const Tree<A>& t, F f) -> Tree<std::invoke_result_t<F&, const A&>>
{
    using B = std::invoke_result_t<F&, const A&>;
    if (t.empty()) return Tree<B>();
    auto l = map_tree(t.left(), f);
    auto x = f(t.label());
    return Tree<B>::node(std::move(l), std::move(x), map_tree(t.right(), f));
}

/// In-order effectful traversal:
///   inorder m Empty        = pure Empty
///   inorder m (Node t x u) = pure Node <*> inorder m t <*> m x <*> inorder m u
template <class F, class A, class M>
auto inorder(const M& m, const Tree<A>& t)
    -> typename F::template type<Tree<value_of<std::invoke_result_t<const M&, const A&>>>>
{
    using B = value_of<std::invoke_result_t<const M&, const A&>>;
    using TB = Tree<B>;
    if (t.empty()) return F::pure(TB());

    Fn<TB, Fn<B, Fn<TB, TB>>> node = [](TB l) -> Fn<B, Fn<TB, TB>> {
        return [l = std::move(l)](B x) -> Fn<TB, TB> {
            return [l, x = std::move(x)](TB r) { return TB::node(l, x, std::move(r)); };
        };
    };
    auto with_left = F::ap(F::pure(node), inorder<F>(m, t.left()));
    auto with_label = F::ap(with_left, m(t.label()));
    return F::ap(with_label, inorder<F>(m, t.right()));
}

}  // namespace optics
