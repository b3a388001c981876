#include "ncch/grassmann.hpp"

#include <stdexcept>
#include <string>

namespace ncch {

std::vector<int> blade_indices(Blade b)
{
    std::vector<int> out;
    while (b != 0) {
        const int bit = __builtin_ctzll(b);
        out.push_back(bit + 1);
        b &= b - 1;
    }
    return out;
}

Blade blade_from_indices(const std::vector<int>& indices)
{
    Blade b = 0;
    for (int i : indices) {
        if (i < 1 || i > 63)
            throw std::invalid_argument("blade_from_indices: index out of range");
        const Blade bit = Blade(1) << (i - 1);
        if (b & bit)
            throw std::invalid_argument("blade_from_indices: repeated index");
        b |= bit;
    }
    return b;
}

bool BladeOrder::operator()(Blade a, Blade b) const
{
    const int la = blade_len(a), lb = blade_len(b);
    if (la != lb)
        return la < lb;
    // Equal length: compare index sequences from the lowest bit up.
    while (a != 0 && b != 0) {
        const int ia = __builtin_ctzll(a), ib = __builtin_ctzll(b);
        if (ia != ib)
            return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::pair<int, Blade> blade_mul(Blade a, Blade b)
{
    if (a & b)
        return {0, 0};
    // Each index of b moves left past the indices of a above it.
    int swaps = 0;
    Blade rest = b;
    while (rest != 0) {
        const int bit = __builtin_ctzll(rest);
        swaps += __builtin_popcountll(a >> (bit + 1));
        rest &= rest - 1;
    }
    return {(swaps % 2 == 0) ? 1 : -1, a | b};
}

void GrassmannElem::add_term(Blade b, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational GrassmannElem::coeff(Blade b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

int GrassmannElem::max_index() const
{
    int top = 0;
    for (const auto& [blade, coef] : terms_)
        if (blade != 0)
            top = std::max(top, 64 - __builtin_clzll(blade));
    return top;
}

GrassmannAlgebra::GrassmannAlgebra(int rank) : rank_(rank)
{
    if (rank < 0 || rank > 63)
        throw std::invalid_argument("GrassmannAlgebra: rank must be in [0, 63]");
}

GrassmannElem GrassmannAlgebra::one() const
{
    return constant(Rational(1));
}

GrassmannElem GrassmannAlgebra::constant(const Rational& c) const
{
    GrassmannElem g;
    g.add_term(0, c);
    return g;
}

GrassmannElem GrassmannAlgebra::generator(int index) const
{
    if (index < 1 || index > rank_)
        throw std::invalid_argument("generator: v" + std::to_string(index) +
                                    " exceeds rank " + std::to_string(rank_));
    GrassmannElem g;
    g.add_term(Blade(1) << (index - 1), Rational(1));
    return g;
}

void GrassmannAlgebra::check_member(const GrassmannElem& g, const char* op) const
{
    if (g.max_index() > rank_)
        throw std::invalid_argument(std::string(op) + ": element uses v" +
                                    std::to_string(g.max_index()) + " beyond rank " +
                                    std::to_string(rank_));
}

GrassmannElem GrassmannAlgebra::add(const GrassmannElem& g, const GrassmannElem& h) const
{
    GrassmannElem r = g;
    for (const auto& [blade, coef] : h.terms())
        r.add_term(blade, coef);
    return r;
}

GrassmannElem GrassmannAlgebra::neg(const GrassmannElem& g) const
{
    GrassmannElem r;
    for (const auto& [blade, coef] : g.terms())
        r.add_term(blade, -coef);
    return r;
}

GrassmannElem GrassmannAlgebra::mul(const GrassmannElem& g, const GrassmannElem& h) const
{
    check_member(g, "mul");
    check_member(h, "mul");
    GrassmannElem r;
    for (const auto& [bg, cg] : g.terms()) {
        for (const auto& [bh, ch] : h.terms()) {
            const auto [sgn, blade] = blade_mul(bg, bh);
            if (sgn != 0)
                r.add_term(blade, Rational(sgn) * cg * ch);
        }
    }
    return r;
}

GrassmannElem GrassmannAlgebra::scale(const Rational& c, const GrassmannElem& g) const
{
    GrassmannElem r;
    if (c == 0)
        return r;
    for (const auto& [blade, coef] : g.terms())
        r.add_term(blade, c * coef);
    return r;
}

GrassmannElem GrassmannAlgebra::even_part(const GrassmannElem& g) const
{
    GrassmannElem r;
    for (const auto& [blade, coef] : g.terms())
        if (blade_len(blade) % 2 == 0)
            r.add_term(blade, coef);
    return r;
}

GrassmannElem GrassmannAlgebra::odd_part(const GrassmannElem& g) const
{
    GrassmannElem r;
    for (const auto& [blade, coef] : g.terms())
        if (blade_len(blade) % 2 == 1)
            r.add_term(blade, coef);
    return r;
}

namespace {

// All subsets of {0,...,k-1} of size exactly l, as masks, in lexicographic
// order of the ascending index sequences.
void append_combinations(int k, int l, std::vector<Blade>& out)
{
    std::vector<int> idx(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Blade b = 0;
        for (int i : idx)
            b |= Blade(1) << i;
        out.push_back(b);
        int pos = l - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - l + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < l; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

} // namespace

GrassmannElem GrassmannAlgebra::random_element(int max_blade_len, int terms, DetRng& rng) const
{
    if (max_blade_len < 0 || max_blade_len > rank_)
        throw std::invalid_argument("random_element: max_blade_len out of range");
    if (terms < 0)
        throw std::invalid_argument("random_element: negative term count");

    std::vector<Blade> admissible;
    admissible.push_back(0);
    for (int l = 1; l <= max_blade_len; ++l) {
        append_combinations(rank_, l, admissible);
        if (admissible.size() > (1u << 20))
            throw std::invalid_argument("random_element: admissible blade set too large; "
                                        "reduce rank or max_blade_len");
    }

    GrassmannElem g;
    for (int i = 0; i < terms; ++i) {
        const auto pick = static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(admissible.size()) - 1));
        g.add_term(admissible[pick], Rational(rng.nonzero(3)));
    }
    return g;
}

} // namespace ncch
