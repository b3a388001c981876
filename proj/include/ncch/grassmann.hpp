#pragma once

#include "ncch/rational.hpp"
#include "ncch/rng.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace ncch {

// A blade is a square-free sorted monomial v_{i1}...v_{iq}, encoded as a
// bitmask: bit i set means v_{i+1} is a factor. The encoding makes the
// strictly-increasing invariant structural. Rank is capped at 63.
using Blade = std::uint64_t;

inline int blade_len(Blade b) { return __builtin_popcountll(b); }

std::vector<int> blade_indices(Blade b); // 1-based, ascending
Blade blade_from_indices(const std::vector<int>& indices);

// Canonical blade order: length first, then lexicographic on the ascending
// index sequences.
struct BladeOrder {
    bool operator()(Blade a, Blade b) const;
};

// Product of basis blades: 0 on shared indices, otherwise the merged blade
// with the sign of the sorting permutation.
std::pair<int, Blade> blade_mul(Blade a, Blade b);

// Element of the exterior algebra: finite map blade -> nonzero coefficient.
class GrassmannElem {
public:
    using TermMap = std::map<Blade, Rational, BladeOrder>;

    GrassmannElem() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Blade b, const Rational& c);
    Rational coeff(Blade b) const;

    // Highest generator index occurring (1-based), 0 for constants.
    int max_index() const;

    bool operator==(const GrassmannElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const GrassmannElem& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

// The rank-k exterior algebra E(k) = Q<v1,...,vk | vi vj + vj vi = 0>,
// with its natural grading by blade-length parity.
class GrassmannAlgebra {
public:
    using Elem = GrassmannElem;

    explicit GrassmannAlgebra(int rank);

    int rank() const { return rank_; }

    GrassmannElem zero() const { return GrassmannElem(); }
    GrassmannElem one() const;
    GrassmannElem generator(int index) const; // v_index, 1-based
    GrassmannElem constant(const Rational& c) const;

    GrassmannElem add(const GrassmannElem& g, const GrassmannElem& h) const;
    GrassmannElem neg(const GrassmannElem& g) const;
    GrassmannElem mul(const GrassmannElem& g, const GrassmannElem& h) const;
    GrassmannElem scale(const Rational& c, const GrassmannElem& g) const;
    bool eq(const GrassmannElem& g, const GrassmannElem& h) const { return g == h; }

    GrassmannElem even_part(const GrassmannElem& g) const;
    GrassmannElem odd_part(const GrassmannElem& g) const;

    // Deterministic function of the generator state: `terms` draws of
    // (blade, coefficient), blades uniform among those of length at most
    // max_blade_len, coefficients nonzero integers in [-3, 3].
    GrassmannElem random_element(int max_blade_len, int terms, DetRng& rng) const;

private:
    void check_member(const GrassmannElem& g, const char* op) const;

    int rank_;
};

} // namespace ncch
