#pragma once

#include "ncch/matrix.hpp"
#include "ncch/rational.hpp"
#include "ncch/ring.hpp"

#include <utility>
#include <vector>

namespace ncch {

// Polynomial in one central indeterminate t with coefficients in a ring;
// dense ascending coefficient list, no trailing zeros.
template <typename E>
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<E> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<E>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero

    E coeff_or(int i, const E& zero) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return zero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

private:
    std::vector<E> coeffs_;
};

// R[t] as a ring. t is central: coefficients multiply in the order of the
// polynomial factors, t-powers just add. Inherits the GL-grading of R
// coefficient-wise ((R0[t], R1[t])).
template <Ring R>
struct PolyRing {
    using Base = R;
    using E = typename R::Elem;
    using Elem = TPoly<E>;

    R base;

    explicit PolyRing(R base_ring) : base(std::move(base_ring)) {}

    Elem canon(std::vector<E> cs) const
    {
        while (!cs.empty() && base.eq(cs.back(), base.zero()))
            cs.pop_back();
        return Elem(std::move(cs));
    }

    Elem zero() const { return Elem(); }
    Elem one() const { return constant(base.one()); }
    Elem constant(const E& c) const { return canon({c}); }
    Elem t() const { return canon({base.zero(), base.one()}); }

    Elem add(const Elem& p, const Elem& q) const
    {
        const std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
        std::vector<E> cs;
        cs.reserve(len);
        const E z = base.zero();
        for (std::size_t i = 0; i < len; ++i)
            cs.push_back(base.add(p.coeff_or(static_cast<int>(i), z),
                                  q.coeff_or(static_cast<int>(i), z)));
        return canon(std::move(cs));
    }

    Elem neg(const Elem& p) const
    {
        std::vector<E> cs;
        cs.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs())
            cs.push_back(base.neg(c));
        return Elem(std::move(cs));
    }

    Elem mul(const Elem& p, const Elem& q) const
    {
        if (p.is_zero() || q.is_zero())
            return Elem();
        std::vector<E> cs(p.coeffs().size() + q.coeffs().size() - 1, base.zero());
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            for (std::size_t j = 0; j < q.coeffs().size(); ++j)
                cs[i + j] = base.add(cs[i + j], base.mul(p.coeffs()[i], q.coeffs()[j]));
        return canon(std::move(cs));
    }

    Elem scale(const Rational& c, const Elem& p) const
    {
        std::vector<E> cs;
        cs.reserve(p.coeffs().size());
        for (const auto& k : p.coeffs())
            cs.push_back(base.scale(c, k));
        return canon(std::move(cs));
    }

    bool eq(const Elem& p, const Elem& q) const
    {
        if (p.coeffs().size() != q.coeffs().size())
            return false;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (!base.eq(p.coeffs()[i], q.coeffs()[i]))
                return false;
        return true;
    }

    Elem even_part(const Elem& p) const
        requires GradedRing<R>
    {
        std::vector<E> cs;
        cs.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs())
            cs.push_back(base.even_part(c));
        return canon(std::move(cs));
    }

    Elem odd_part(const Elem& p) const
        requires GradedRing<R>
    {
        std::vector<E> cs;
        cs.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs())
            cs.push_back(base.odd_part(c));
        return canon(std::move(cs));
    }

    // Evaluation at a central rational point (t is central, so this is a
    // homomorphism R[t] -> R).
    E eval(const Elem& p, const Rational& at) const
    {
        E acc = base.zero();
        Rational power(1);
        for (const auto& c : p.coeffs()) {
            acc = base.add(acc, base.scale(power, c));
            power *= at;
        }
        return acc;
    }
};

// The characteristic matrix tI_n - A in M_n(R[t]).
template <Ring R>
RingMatrix<TPoly<typename R::Elem>> char_matrix(const R& ring,
                                                const RingMatrix<typename R::Elem>& A)
{
    const PolyRing<R> pr(ring);
    const int n = A.n();
    RingMatrix<TPoly<typename R::Elem>> M(n, pr.zero());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto neg_entry = pr.constant(ring.neg(A.at(r, c)));
            M.at(r, c) = (r == c) ? pr.add(pr.t(), neg_entry) : neg_entry;
        }
    return M;
}

// Coefficient data of the symmetric characteristic polynomial and of the
// polynomial commutator parts of tI_n - A, under the natural isomorphism
// M_n(R[t]) ~ M_n(R)[t]. Out-of-range accessors return zero
// (C(-1) = C(n+1) = D(-1) = D(n+1) = 0).
template <typename E>
struct CharPolyData {
    CharPolyData(int dim, E zero, RingMatrix<E> zmat)
        : n(dim), zero_mat(std::move(zmat)), zero_elem(std::move(zero))
    {
    }

    int n;
    std::vector<E> mu;                 // mu_0 ... mu_n, with mu_n = n! * 1
    std::vector<RingMatrix<E>> Cmats;  // C(0) ... C(n)
    std::vector<RingMatrix<E>> Dmats;  // D(0) ... D(n)
    RingMatrix<E> zero_mat;
    E zero_elem;

    const E& mu_at(int i) const
    {
        if (i < 0 || i > n)
            return zero_elem;
        return mu[static_cast<std::size_t>(i)];
    }
    const RingMatrix<E>& Cmat(int i) const
    {
        if (i < 0 || i > n)
            return zero_mat;
        return Cmats[static_cast<std::size_t>(i)];
    }
    const RingMatrix<E>& Dmat(int i) const
    {
        if (i < 0 || i > n)
            return zero_mat;
        return Dmats[static_cast<std::size_t>(i)];
    }
};

namespace detail {

// mu_0..mu_n from p(t) = sdet(tI - A), padded with zeros.
template <Ring R>
std::vector<typename R::Elem> mu_from_poly(const R& ring, const TPoly<typename R::Elem>& p, int n)
{
    std::vector<typename R::Elem> mu;
    mu.reserve(static_cast<std::size_t>(n) + 1);
    const auto z = ring.zero();
    for (int i = 0; i <= n; ++i)
        mu.push_back(p.coeff_or(i, z));
    return mu;
}

} // namespace detail

// The symmetric characteristic polynomial p(t) = sdet(tI_n - A) as its
// coefficient list mu_0,...,mu_n. Reuses the sdet kernel over R[t].
template <Ring R>
std::vector<typename R::Elem> sym_char_poly(const R& ring, const RingMatrix<typename R::Elem>& A)
{
    const PolyRing<R> pr(ring);
    const auto p = sdet(pr, char_matrix(ring, A));
    return detail::mu_from_poly(ring, p, A.n());
}

// Full coefficient data: mu_i plus the matrix coefficients C(i), D(i) of
// the left and right commutator parts of tI_n - A. Single-sourced on the
// sdet/sadj kernels instantiated over R[t].
template <Ring R>
CharPolyData<typename R::Elem> poly_commutator_parts(const R& ring,
                                                     const RingMatrix<typename R::Elem>& A)
{
    using E = typename R::Elem;
    const PolyRing<R> pr(ring);
    const int n = A.n();
    const auto cm = char_matrix(ring, A);
    const auto parts = commutator_parts(pr, cm);

    CharPolyData<E> data(n, ring.zero(), zero_matrix(ring, n));
    data.mu = detail::mu_from_poly(ring, parts.lambda, n);
    const auto z = ring.zero();
    for (int i = 0; i <= n; ++i) {
        RingMatrix<E> Ci(n, z), Di(n, z);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                Ci.at(r, c) = parts.C.at(r, c).coeff_or(i, z);
                Di.at(r, c) = parts.D.at(r, c).coeff_or(i, z);
            }
        data.Cmats.push_back(std::move(Ci));
        data.Dmats.push_back(std::move(Di));
    }
    return data;
}

// Coefficient-wise even/odd split of p under the GL-grading of R[t].
template <Ring R>
    requires GradedRing<R>
std::pair<TPoly<typename R::Elem>, TPoly<typename R::Elem>>
graded_split_poly(const PolyRing<R>& pr, const TPoly<typename R::Elem>& p)
{
    return {pr.even_part(p), pr.odd_part(p)};
}

// Left Cayley-Hamilton evaluation: sum_i (mu_i I + C(i)) A^i. The theorem
// says this is the zero matrix.
template <Ring R>
RingMatrix<typename R::Elem> ch_left_eval(const R& ring, const RingMatrix<typename R::Elem>& A,
                                          const CharPolyData<typename R::Elem>& data)
{
    detail::check_same_dim(A.n(), data.n, "ch_left_eval");
    const int n = A.n();
    auto power = identity_matrix(ring, n);
    auto acc = zero_matrix(ring, n);
    for (int i = 0; i <= n; ++i) {
        if (i > 0)
            power = mat_mul(ring, power, A);
        const auto coeff = mat_add(ring, scalar_matrix(ring, n, data.mu_at(i)), data.Cmat(i));
        acc = mat_add(ring, acc, mat_mul(ring, coeff, power));
    }
    return acc;
}

// Right Cayley-Hamilton evaluation: sum_i A^i (mu_i I + D(i)).
template <Ring R>
RingMatrix<typename R::Elem> ch_right_eval(const R& ring, const RingMatrix<typename R::Elem>& A,
                                           const CharPolyData<typename R::Elem>& data)
{
    detail::check_same_dim(A.n(), data.n, "ch_right_eval");
    const int n = A.n();
    auto power = identity_matrix(ring, n);
    auto acc = zero_matrix(ring, n);
    for (int i = 0; i <= n; ++i) {
        if (i > 0)
            power = mat_mul(ring, power, A);
        const auto coeff = mat_add(ring, scalar_matrix(ring, n, data.mu_at(i)), data.Dmat(i));
        acc = mat_add(ring, acc, mat_mul(ring, power, coeff));
    }
    return acc;
}

} // namespace ncch
