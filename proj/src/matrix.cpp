#include "ncch/matrix.hpp"

namespace ncch {

namespace {

// Gauss-Jordan on [P | I]; returns false when P is singular.
bool gauss_jordan(RingMatrix<Rational> work, RingMatrix<Rational>& inv)
{
    const int n = work.n();
    RationalRing ring;
    inv = identity_matrix(ring, n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        const Rational p = work.at(col, col);
        for (int c = 0; c < n; ++c) {
            work.at(col, c) /= p;
            inv.at(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const Rational f = work.at(r, col);
            if (f == 0)
                continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return true;
}

} // namespace

RingMatrix<Rational> rat_inverse(const RingMatrix<Rational>& P)
{
    RingMatrix<Rational> inv(P.n(), Rational(0));
    if (!gauss_jordan(P, inv))
        throw std::invalid_argument("rat_inverse: matrix is singular");
    return inv;
}

bool rat_invertible(const RingMatrix<Rational>& P)
{
    RingMatrix<Rational> inv(P.n(), Rational(0));
    return gauss_jordan(P, inv);
}

} // namespace ncch
