#pragma once

#include "ncch/rational.hpp"

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ncch {

// A ring is a descriptor object: it owns the context (generator table,
// Grassmann rank, matrix dimension) and performs all arithmetic on its
// element type. Elements are plain immutable values.
template <typename R>
concept Ring = requires(const R& ring, const typename R::Elem& a, const typename R::Elem& b,
                        const Rational& q) {
    typename R::Elem;
    { ring.zero() } -> std::convertible_to<typename R::Elem>;
    { ring.one() } -> std::convertible_to<typename R::Elem>;
    { ring.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { ring.neg(a) } -> std::convertible_to<typename R::Elem>;
    { ring.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { ring.scale(q, a) } -> std::convertible_to<typename R::Elem>;
    { ring.eq(a, b) } -> std::convertible_to<bool>;
};

// Grassmann-like Z2-grading: element = even + odd, even elements central,
// odd squares zero. Rings expose it as an optional capability.
template <typename R>
concept GradedRing = Ring<R> && requires(const R& ring, const typename R::Elem& a) {
    { ring.even_part(a) } -> std::convertible_to<typename R::Elem>;
    { ring.odd_part(a) } -> std::convertible_to<typename R::Elem>;
};

template <Ring R>
typename R::Elem sub(const R& ring, const typename R::Elem& a, const typename R::Elem& b)
{
    return ring.add(a, ring.neg(b));
}

template <Ring R>
bool is_zero(const R& ring, const typename R::Elem& a)
{
    return ring.eq(a, ring.zero());
}

template <Ring R>
typename R::Elem commutator(const R& ring, const typename R::Elem& x, const typename R::Elem& y)
{
    return sub(ring, ring.mul(x, y), ring.mul(y, x));
}

// [x1,...,xm] bracketed from the left: [[..[[x1,x2],x3],..],xm].
template <Ring R>
typename R::Elem left_normed(const R& ring, std::span<const typename R::Elem> xs)
{
    if (xs.empty())
        throw std::invalid_argument("left_normed: empty argument list");
    typename R::Elem acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i)
        acc = commutator(ring, acc, xs[i]);
    return acc;
}

template <Ring R>
typename R::Elem left_normed(const R& ring, std::initializer_list<typename R::Elem> xs)
{
    return left_normed(ring, std::span<const typename R::Elem>(xs.begin(), xs.size()));
}

// [x, y,...,y] with y repeated k times.
template <Ring R>
typename R::Elem engel(const R& ring, const typename R::Elem& x, const typename R::Elem& y, int k)
{
    if (k < 1)
        throw std::invalid_argument("engel: index must be >= 1");
    typename R::Elem acc = x;
    for (int i = 0; i < k; ++i)
        acc = commutator(ring, acc, y);
    return acc;
}

// Expansion of [r1 r2 ... rs, x1,...,xm] as the sum of [r1,H1]*...*[rs,Hs]
// over all ordered s-tuples of pairwise disjoint subsets with union
// {1,...,m}. Each [r,H] takes the indices of H in increasing order;
// [r,{}] = r. Enumeration assigns each index to one of the s blocks.
template <Ring R>
typename R::Elem leibniz_expand(const R& ring, std::span<const typename R::Elem> rs,
                                std::span<const typename R::Elem> xs)
{
    if (rs.empty())
        throw std::invalid_argument("leibniz_expand: need at least one factor");
    const std::size_t s = rs.size();
    const std::size_t m = xs.size();

    std::size_t assignments = 1;
    for (std::size_t i = 0; i < m; ++i)
        assignments *= s;

    typename R::Elem total = ring.zero();
    std::vector<std::vector<typename R::Elem>> blocks(s);
    for (std::size_t code = 0; code < assignments; ++code) {
        for (auto& blk : blocks)
            blk.clear();
        std::size_t c = code;
        for (std::size_t i = 0; i < m; ++i) {
            blocks[c % s].push_back(xs[i]);
            c /= s;
        }
        typename R::Elem term = ring.one();
        bool first = true;
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<typename R::Elem> chain;
            chain.reserve(blocks[j].size() + 1);
            chain.push_back(rs[j]);
            for (const auto& x : blocks[j])
                chain.push_back(x);
            const typename R::Elem factor =
                left_normed(ring, std::span<const typename R::Elem>(chain));
            term = first ? factor : ring.mul(term, factor);
            first = false;
        }
        total = ring.add(total, term);
    }
    return total;
}

// The rationals as a ring, with the trivial grading (everything even).
struct RationalRing {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scale(const Rational& q, const Elem& a) const { return q * a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem even_part(const Elem& a) const { return a; }
    Elem odd_part(const Elem&) const { return Rational(0); }
};

} // namespace ncch
