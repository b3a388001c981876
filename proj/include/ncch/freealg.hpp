#pragma once

#include "ncch/rational.hpp"
#include "ncch/ring.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncch {

// A monomial of the free algebra: a sequence of generator ids. The empty
// word is the unit monomial.
using Word = std::vector<std::uint32_t>;

// Canonical word order: length first, then lexicographic by generator id.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

// Element of Q<x1,...,xg>: finite map word -> nonzero coefficient.
class NcPoly {
public:
    using TermMap = std::map<Word, Rational, WordOrder>;

    NcPoly() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * w, dropping the term if the total cancels.
    void add_term(const Word& w, const Rational& c);

    Rational coeff(const Word& w) const;

    // Highest generator id occurring, or -1 for constants.
    int max_gen() const;

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

// The free associative algebra over Q on a named generator set. Elements
// built in a smaller algebra embed in a larger one; operations reject
// elements referencing generators this algebra does not declare.
class FreeAlgebra {
public:
    using Elem = NcPoly;

    explicit FreeAlgebra(std::vector<std::string> gen_names) : names_(std::move(gen_names)) {}

    static FreeAlgebra with_letters(int count); // "a", "b", ..., up to 26

    std::size_t gen_count() const { return names_.size(); }
    const std::string& gen_name(std::uint32_t id) const { return names_.at(id); }
    const std::vector<std::string>& gen_names() const { return names_; }

    // -1 when the name is not declared.
    int gen_id(const std::string& name) const;

    NcPoly zero() const { return NcPoly(); }
    NcPoly one() const { return constant(Rational(1)); }
    NcPoly constant(const Rational& c) const;
    NcPoly gen(std::uint32_t id) const;
    NcPoly monomial(const Word& w, const Rational& c = Rational(1)) const;

    NcPoly add(const NcPoly& p, const NcPoly& q) const;
    NcPoly neg(const NcPoly& p) const;
    NcPoly mul(const NcPoly& p, const NcPoly& q) const;
    NcPoly scale(const Rational& c, const NcPoly& p) const;
    bool eq(const NcPoly& p, const NcPoly& q) const { return p == q; }

private:
    void check_member(const NcPoly& p, const char* op) const;

    std::vector<std::string> names_;
};

// Lexicographically least cyclic rotation of w.
Word cyclic_class_key(const Word& w);

// Membership in the Q-span of {uv - vu}: the coefficient sum over every
// cyclic-rotation class must vanish.
bool is_commutator_sum(const NcPoly& p);

// Image of p under the unital homomorphism sending generator i to
// images[i]. Every generator occurring in p must have an image.
template <Ring Target>
typename Target::Elem substitute(const NcPoly& p, const Target& target,
                                 std::span<const typename Target::Elem> images)
{
    typename Target::Elem acc = target.zero();
    for (const auto& [word, coef] : p.terms()) {
        typename Target::Elem prod = target.one();
        for (std::uint32_t id : word) {
            if (id >= images.size())
                throw std::invalid_argument("substitute: no image for generator id " +
                                            std::to_string(id));
            prod = target.mul(prod, images[id]);
        }
        acc = target.add(acc, target.scale(coef, prod));
    }
    return acc;
}

} // namespace ncch
