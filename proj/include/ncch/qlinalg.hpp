#pragma once

#include "ncch/matrix.hpp"
#include "ncch/ring.hpp"

#include <stdexcept>

namespace ncch {

// Classical determinant and adjugate for matrices over a commutative ring,
// by Laplace expansion along the first row. These are the commutative
// degeneration oracles; they share no code path with the permutation-sum
// kernels. Meaningless over a noncommutative ring -- callers pick the ring.
template <Ring R>
typename R::Elem commutative_det(const R& ring, const RingMatrix<typename R::Elem>& A)
{
    const int n = A.n();
    if (n == 1)
        return A.at(0, 0);
    typename R::Elem acc = ring.zero();
    for (int j = 0; j < n; ++j) {
        RingMatrix<typename R::Elem> minor(n - 1, ring.zero());
        for (int r = 1; r < n; ++r) {
            int mc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, mc) = A.at(r, c);
                ++mc;
            }
        }
        const auto cof = ring.mul(A.at(0, j), commutative_det(ring, minor));
        acc = (j % 2 == 0) ? ring.add(acc, cof) : ring.add(acc, ring.neg(cof));
    }
    return acc;
}

// adj(A)_{r,c} = (-1)^{r+c} det of A with row c and column r deleted.
template <Ring R>
RingMatrix<typename R::Elem> commutative_adj(const R& ring, const RingMatrix<typename R::Elem>& A)
{
    const int n = A.n();
    RingMatrix<typename R::Elem> out(n, ring.zero());
    if (n == 1) {
        out.at(0, 0) = ring.one();
        return out;
    }
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            RingMatrix<typename R::Elem> minor(n - 1, ring.zero());
            int mr = 0;
            for (int i = 0; i < n; ++i) {
                if (i == c)
                    continue;
                int mc = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == r)
                        continue;
                    minor.at(mr, mc) = A.at(i, j);
                    ++mc;
                }
                ++mr;
            }
            const auto d = commutative_det(ring, minor);
            out.at(r, c) = ((r + c) % 2 == 0) ? d : ring.neg(d);
        }
    }
    return out;
}

} // namespace ncch
