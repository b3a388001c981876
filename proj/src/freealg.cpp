#include "ncch/freealg.hpp"

#include <algorithm>

namespace ncch {

void NcPoly::add_term(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational NcPoly::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int NcPoly::max_gen() const
{
    int top = -1;
    for (const auto& [word, coef] : terms_)
        for (std::uint32_t id : word)
            top = std::max(top, static_cast<int>(id));
    return top;
}

FreeAlgebra FreeAlgebra::with_letters(int count)
{
    if (count < 0 || count > 26)
        throw std::invalid_argument("with_letters: count must be in [0, 26]");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    return FreeAlgebra(std::move(names));
}

int FreeAlgebra::gen_id(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return -1;
}

NcPoly FreeAlgebra::constant(const Rational& c) const
{
    NcPoly p;
    p.add_term(Word{}, c);
    return p;
}

NcPoly FreeAlgebra::gen(std::uint32_t id) const
{
    if (id >= names_.size())
        throw std::invalid_argument("gen: undeclared generator id " + std::to_string(id));
    NcPoly p;
    p.add_term(Word{id}, Rational(1));
    return p;
}

NcPoly FreeAlgebra::monomial(const Word& w, const Rational& c) const
{
    NcPoly p;
    p.add_term(w, c);
    check_member(p, "monomial");
    return p;
}

void FreeAlgebra::check_member(const NcPoly& p, const char* op) const
{
    if (p.max_gen() >= static_cast<int>(names_.size()))
        throw std::invalid_argument(std::string(op) +
                                    ": element references a generator not declared "
                                    "in this algebra");
}

NcPoly FreeAlgebra::add(const NcPoly& p, const NcPoly& q) const
{
    NcPoly r = p;
    for (const auto& [word, coef] : q.terms())
        r.add_term(word, coef);
    return r;
}

NcPoly FreeAlgebra::neg(const NcPoly& p) const
{
    NcPoly r;
    for (const auto& [word, coef] : p.terms())
        r.add_term(word, -coef);
    return r;
}

NcPoly FreeAlgebra::mul(const NcPoly& p, const NcPoly& q) const
{
    check_member(p, "mul");
    check_member(q, "mul");
    NcPoly r;
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) {
            Word w = wp;
            w.insert(w.end(), wq.begin(), wq.end());
            r.add_term(w, cp * cq);
        }
    }
    return r;
}

NcPoly FreeAlgebra::scale(const Rational& c, const NcPoly& p) const
{
    NcPoly r;
    if (c == 0)
        return r;
    for (const auto& [word, coef] : p.terms())
        r.add_term(word, c * coef);
    return r;
}

Word cyclic_class_key(const Word& w)
{
    if (w.empty())
        return w;
    Word best = w;
    Word rot = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best)
            best = rot;
    }
    return best;
}

bool is_commutator_sum(const NcPoly& p)
{
    std::map<Word, Rational, WordOrder> class_sums;
    for (const auto& [word, coef] : p.terms())
        class_sums[cyclic_class_key(word)] += coef;
    for (const auto& [key, total] : class_sums)
        if (total != 0)
            return false;
    return true;
}

} // namespace ncch
