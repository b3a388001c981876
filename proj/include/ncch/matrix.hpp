#pragma once

#include "ncch/perm.hpp"
#include "ncch/rational.hpp"
#include "ncch/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncch {

// Square matrix over an arbitrary ring; entries indexed 0-based, row major.
template <typename E>
class RingMatrix {
public:
    RingMatrix(int n, const E& fill) : n_(n), entries_(static_cast<std::size_t>(n) * n, fill)
    {
        if (n < 1)
            throw std::invalid_argument("RingMatrix: dimension must be >= 1");
    }

    int n() const { return n_; }
    const E& at(int r, int c) const { return entries_[idx(r, c)]; }
    E& at(int r, int c) { return entries_[idx(r, c)]; }

    bool operator==(const RingMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

private:
    std::size_t idx(int r, int c) const
    {
        if (r < 0 || r >= n_ || c < 0 || c >= n_)
            throw std::out_of_range("RingMatrix: index out of range");
        return static_cast<std::size_t>(r) * n_ + c;
    }

    int n_;
    std::vector<E> entries_;
};

template <Ring R>
RingMatrix<typename R::Elem> zero_matrix(const R& ring, int n)
{
    return RingMatrix<typename R::Elem>(n, ring.zero());
}

template <Ring R>
RingMatrix<typename R::Elem> identity_matrix(const R& ring, int n)
{
    RingMatrix<typename R::Elem> m(n, ring.zero());
    for (int i = 0; i < n; ++i)
        m.at(i, i) = ring.one();
    return m;
}

// E_{r,c}: single unit entry.
template <Ring R>
RingMatrix<typename R::Elem> unit_matrix(const R& ring, int n, int r, int c)
{
    RingMatrix<typename R::Elem> m(n, ring.zero());
    m.at(r, c) = ring.one();
    return m;
}

// lambda * I_n with a ring-element scalar on the diagonal.
template <Ring R>
RingMatrix<typename R::Elem> scalar_matrix(const R& ring, int n, const typename R::Elem& lambda)
{
    RingMatrix<typename R::Elem> m(n, ring.zero());
    for (int i = 0; i < n; ++i)
        m.at(i, i) = lambda;
    return m;
}

namespace detail {
inline void check_same_dim(int a, int b, const char* op)
{
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}
} // namespace detail

template <Ring R>
RingMatrix<typename R::Elem> mat_add(const R& ring, const RingMatrix<typename R::Elem>& a,
                                     const RingMatrix<typename R::Elem>& b)
{
    detail::check_same_dim(a.n(), b.n(), "mat_add");
    RingMatrix<typename R::Elem> m(a.n(), ring.zero());
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            m.at(r, c) = ring.add(a.at(r, c), b.at(r, c));
    return m;
}

template <Ring R>
RingMatrix<typename R::Elem> mat_neg(const R& ring, const RingMatrix<typename R::Elem>& a)
{
    RingMatrix<typename R::Elem> m(a.n(), ring.zero());
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            m.at(r, c) = ring.neg(a.at(r, c));
    return m;
}

template <Ring R>
RingMatrix<typename R::Elem> mat_sub(const R& ring, const RingMatrix<typename R::Elem>& a,
                                     const RingMatrix<typename R::Elem>& b)
{
    return mat_add(ring, a, mat_neg(ring, b));
}

template <Ring R>
RingMatrix<typename R::Elem> mat_mul(const R& ring, const RingMatrix<typename R::Elem>& a,
                                     const RingMatrix<typename R::Elem>& b)
{
    detail::check_same_dim(a.n(), b.n(), "mat_mul");
    RingMatrix<typename R::Elem> m(a.n(), ring.zero());
    for (int r = 0; r < a.n(); ++r) {
        for (int c = 0; c < a.n(); ++c) {
            typename R::Elem acc = ring.zero();
            for (int k = 0; k < a.n(); ++k)
                acc = ring.add(acc, ring.mul(a.at(r, k), b.at(k, c)));
            m.at(r, c) = acc;
        }
    }
    return m;
}

template <Ring R>
RingMatrix<typename R::Elem> mat_scale(const R& ring, const Rational& q,
                                       const RingMatrix<typename R::Elem>& a)
{
    RingMatrix<typename R::Elem> m(a.n(), ring.zero());
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            m.at(r, c) = ring.scale(q, a.at(r, c));
    return m;
}

// Left multiplication by a ring-element scalar: (lambda * A)_{r,c} = lambda * a_{r,c}.
template <Ring R>
RingMatrix<typename R::Elem> mat_scale_elem(const R& ring, const typename R::Elem& lambda,
                                            const RingMatrix<typename R::Elem>& a)
{
    RingMatrix<typename R::Elem> m(a.n(), ring.zero());
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            m.at(r, c) = ring.mul(lambda, a.at(r, c));
    return m;
}

template <Ring R>
typename R::Elem trace(const R& ring, const RingMatrix<typename R::Elem>& a)
{
    typename R::Elem acc = ring.zero();
    for (int i = 0; i < a.n(); ++i)
        acc = ring.add(acc, a.at(i, i));
    return acc;
}

template <Ring R>
bool mat_is_zero(const R& ring, const RingMatrix<typename R::Elem>& a)
{
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            if (!ring.eq(a.at(r, c), ring.zero()))
                return false;
    return true;
}

enum class SdetFormula { alpha_beta, tau_rho };

// Symmetric determinant: the double permutation sum of the defining
// formulas; the factors of each term are multiplied in strictly increasing
// position order, which matters over a noncommutative ring. Both formulas
// expand the same element; alpha_beta is the default, tau_rho is kept for
// the equivalence check.
template <Ring R>
typename R::Elem sdet(const R& ring, const RingMatrix<typename R::Elem>& A,
                      SdetFormula formula = SdetFormula::alpha_beta)
{
    const int n = A.n();
    check_cap(n, "sdet");
    const auto& perms = enumerate(n);
    std::vector<int> signs(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        signs[i] = sign(perms[i]);

    typename R::Elem total = ring.zero();
    if (formula == SdetFormula::alpha_beta) {
        for (std::size_t ia = 0; ia < perms.size(); ++ia) {
            const auto& alpha = perms[ia];
            for (std::size_t ib = 0; ib < perms.size(); ++ib) {
                const auto& beta = perms[ib];
                typename R::Elem prod = A.at(alpha(0), beta(0));
                for (int t = 1; t < n; ++t)
                    prod = ring.mul(prod, A.at(alpha(t), beta(t)));
                total = (signs[ia] * signs[ib] > 0) ? ring.add(total, prod)
                                                    : ring.add(total, ring.neg(prod));
            }
        }
    } else {
        for (std::size_t it = 0; it < perms.size(); ++it) {
            const auto& tau = perms[it];
            for (std::size_t ir = 0; ir < perms.size(); ++ir) {
                const auto& rho = perms[ir];
                typename R::Elem prod = A.at(tau(0), rho(tau(0)));
                for (int t = 1; t < n; ++t)
                    prod = ring.mul(prod, A.at(tau(t), rho(tau(t))));
                total = (signs[ir] > 0) ? ring.add(total, prod)
                                        : ring.add(total, ring.neg(prod));
            }
        }
    }
    return total;
}

namespace detail {

// Images of a permutation constrained on one position: p(fixed_dom) =
// fixed_img, and the remaining positions (ascending) map through pi onto
// the remaining values (ascending).
inline std::vector<int> spliced_images(const Permutation& pi, int n, int fixed_dom, int fixed_img)
{
    std::vector<int> dom, rng;
    dom.reserve(static_cast<std::size_t>(n) - 1);
    rng.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i) {
        if (i != fixed_dom)
            dom.push_back(i);
        if (i != fixed_img)
            rng.push_back(i);
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    images[static_cast<std::size_t>(fixed_dom)] = fixed_img;
    for (int i = 0; i < n - 1; ++i)
        images[static_cast<std::size_t>(dom[static_cast<std::size_t>(i)])] =
            rng[static_cast<std::size_t>(pi(i))];
    return images;
}

} // namespace detail

// Symmetric adjoint: entry (r,s) is the sdet double sum restricted to
// alpha(s) = s and beta(s) = r, the factor at position s omitted. For
// n = 1 the empty product leaves the unit.
template <Ring R>
RingMatrix<typename R::Elem> sadj(const R& ring, const RingMatrix<typename R::Elem>& A)
{
    const int n = A.n();
    check_cap(n, "sadj");
    RingMatrix<typename R::Elem> out(n, ring.zero());
    if (n == 1) {
        out.at(0, 0) = ring.one();
        return out;
    }

    const auto& sub_perms = enumerate(n - 1);
    for (int s = 0; s < n; ++s) {
        // alpha depends only on s; precompute images and signs.
        std::vector<std::pair<std::vector<int>, int>> alphas;
        alphas.reserve(sub_perms.size());
        for (const auto& pi : sub_perms) {
            auto im = detail::spliced_images(pi, n, s, s);
            const int sg = sign(Permutation(im));
            alphas.emplace_back(std::move(im), sg);
        }
        for (int r = 0; r < n; ++r) {
            std::vector<std::pair<std::vector<int>, int>> betas;
            betas.reserve(sub_perms.size());
            for (const auto& pi : sub_perms) {
                auto im = detail::spliced_images(pi, n, s, r);
                const int sg = sign(Permutation(im));
                betas.emplace_back(std::move(im), sg);
            }
            typename R::Elem acc = ring.zero();
            for (const auto& [ai, asg] : alphas) {
                for (const auto& [bi, bsg] : betas) {
                    typename R::Elem prod = ring.one();
                    bool first = true;
                    for (int t = 0; t < n; ++t) {
                        if (t == s)
                            continue;
                        const auto& entry = A.at(ai[static_cast<std::size_t>(t)],
                                                 bi[static_cast<std::size_t>(t)]);
                        prod = first ? entry : ring.mul(prod, entry);
                        first = false;
                    }
                    acc = (asg * bsg > 0) ? ring.add(acc, prod) : ring.add(acc, ring.neg(prod));
                }
            }
            out.at(r, s) = acc;
        }
    }
    return out;
}

// Independent route to the sadj entry (r,s): the signed symmetric
// determinant (-1)^{r+s} sdet(A_{s,r}) of the minor obtained by deleting
// row s and column r. Indices are 1-based to match the usual statement.
template <Ring R>
typename R::Elem sadj_minor(const R& ring, const RingMatrix<typename R::Elem>& A, int r, int s)
{
    const int n = A.n();
    if (r < 1 || r > n || s < 1 || s > n)
        throw std::invalid_argument("sadj_minor: indices out of range");
    if (n == 1)
        return ring.one();

    RingMatrix<typename R::Elem> minor(n - 1, ring.zero());
    int mr = 0;
    for (int i = 0; i < n; ++i) {
        if (i == s - 1)
            continue; // delete row s
        int mc = 0;
        for (int j = 0; j < n; ++j) {
            if (j == r - 1)
                continue; // delete column r
            minor.at(mr, mc) = A.at(i, j);
            ++mc;
        }
        ++mr;
    }
    const typename R::Elem d = sdet(ring, minor);
    return ((r + s) % 2 == 0) ? d : ring.neg(d);
}

// C = n A*A - sdet(A) I and D = n A A* - sdet(A) I; their entries are
// commutator sums and their traces vanish.
template <typename E>
struct CommutatorParts {
    RingMatrix<E> C;
    RingMatrix<E> D;
    E lambda;
};

template <Ring R>
CommutatorParts<typename R::Elem> commutator_parts(const R& ring,
                                                   const RingMatrix<typename R::Elem>& A)
{
    const int n = A.n();
    const auto adj = sadj(ring, A);
    const auto lambda = sdet(ring, A);
    const auto lambdaI = scalar_matrix(ring, n, lambda);
    auto C = mat_sub(ring, mat_scale(ring, Rational(n), mat_mul(ring, adj, A)), lambdaI);
    auto D = mat_sub(ring, mat_scale(ring, Rational(n), mat_mul(ring, A, adj)), lambdaI);
    return {std::move(C), std::move(D), lambda};
}

// Exact inverse over the rationals by Gauss-Jordan elimination.
// Throws std::invalid_argument on a singular matrix.
RingMatrix<Rational> rat_inverse(const RingMatrix<Rational>& P);

bool rat_invertible(const RingMatrix<Rational>& P);

// P A P^{-1} for rational P and A over any Q-algebra.
template <Ring R>
RingMatrix<typename R::Elem> conjugate(const R& ring, const RingMatrix<Rational>& P,
                                       const RingMatrix<typename R::Elem>& A)
{
    detail::check_same_dim(P.n(), A.n(), "conjugate");
    const auto Pinv = rat_inverse(P);
    const int n = A.n();
    auto mixed_mul = [&](const RingMatrix<Rational>& Q, const RingMatrix<typename R::Elem>& M) {
        RingMatrix<typename R::Elem> out(n, ring.zero());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                typename R::Elem acc = ring.zero();
                for (int k = 0; k < n; ++k)
                    acc = ring.add(acc, ring.scale(Q.at(r, k), M.at(k, c)));
                out.at(r, c) = acc;
            }
        return out;
    };
    auto mixed_mul_right = [&](const RingMatrix<typename R::Elem>& M,
                               const RingMatrix<Rational>& Q) {
        RingMatrix<typename R::Elem> out(n, ring.zero());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                typename R::Elem acc = ring.zero();
                for (int k = 0; k < n; ++k)
                    acc = ring.add(acc, ring.scale(Q.at(k, c), M.at(r, k)));
                out.at(r, c) = acc;
            }
        return out;
    };
    return mixed_mul_right(mixed_mul(P, A), Pinv);
}

// M_n(base) as a scalar ring, so matrices can nest (matrix rings over
// matrix rings).
template <Ring R>
struct MatrixRing {
    using Elem = RingMatrix<typename R::Elem>;

    MatrixRing(int n, R base_ring) : dim(n), base(std::move(base_ring)) {}

    int dim;
    R base;

    Elem zero() const { return zero_matrix(base, dim); }
    Elem one() const { return identity_matrix(base, dim); }
    Elem unit(int r, int c) const { return unit_matrix(base, dim, r, c); }
    Elem add(const Elem& a, const Elem& b) const { return mat_add(base, a, b); }
    Elem neg(const Elem& a) const { return mat_neg(base, a); }
    Elem mul(const Elem& a, const Elem& b) const { return mat_mul(base, a, b); }
    Elem scale(const Rational& q, const Elem& a) const { return mat_scale(base, q, a); }
    bool eq(const Elem& a, const Elem& b) const
    {
        if (a.n() != b.n())
            return false;
        for (int r = 0; r < a.n(); ++r)
            for (int c = 0; c < a.n(); ++c)
                if (!base.eq(a.at(r, c), b.at(r, c)))
                    return false;
        return true;
    }
};

template <Ring R>
MatrixRing<R> matrix_ring_embed(int n, R base)
{
    if (n < 1)
        throw std::invalid_argument("matrix_ring_embed: dimension must be >= 1");
    return MatrixRing<R>(n, std::move(base));
}

} // namespace ncch
