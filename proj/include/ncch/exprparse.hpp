#pragma once

#include "ncch/freealg.hpp"
#include "ncch/grassmann.hpp"
#include "ncch/matrix.hpp"
#include "ncch/rational.hpp"
#include "ncch/ring.hpp"
#include "ncch/tpoly.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ncch {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_), col(col_)
    {
    }
    int line;
    int col;
};

// ---------------------------------------------------------------------------
// Parsing

// Which scalar algebra a source document declares.
struct RingSpec {
    enum class Kind { Rational, Free, Grassmann, U2 };
    Kind kind = Kind::Rational;
    int rank = 0;                   // grassmann only
    std::vector<std::string> gens;  // free only

    std::string to_string() const;
};

Rational parse_rational_element(std::string_view src);
NcPoly parse_free_element(const FreeAlgebra& alg, std::string_view src);
GrassmannElem parse_grassmann_element(const GrassmannAlgebra& alg, std::string_view src);
RingMatrix<Rational> parse_u2_element(std::string_view src);

RingMatrix<Rational> parse_rational_matrix(std::string_view body);
RingMatrix<NcPoly> parse_free_matrix(const FreeAlgebra& alg, std::string_view body);
RingMatrix<GrassmannElem> parse_grassmann_matrix(const GrassmannAlgebra& alg,
                                                 std::string_view body);
RingMatrix<RingMatrix<Rational>> parse_u2_matrix(std::string_view body);

// A full input document: a `ring ...` header line followed by the matrix
// body (rows on lines or separated by ';', entries separated by ',').
struct RationalMatDoc {
    RationalRing ring;
    RingMatrix<Rational> A;
};
struct FreeMatDoc {
    FreeAlgebra ring;
    RingMatrix<NcPoly> A;
};
struct GrassmannMatDoc {
    GrassmannAlgebra ring;
    RingMatrix<GrassmannElem> A;
};
struct U2MatDoc {
    MatrixRing<RationalRing> ring;
    RingMatrix<RingMatrix<Rational>> A;
};
using MatrixDoc = std::variant<RationalMatDoc, FreeMatDoc, GrassmannMatDoc, U2MatDoc>;

MatrixDoc parse_matrix_doc(std::string_view text);

// ---------------------------------------------------------------------------
// Printing. parse(format(e)) == e in every ring kind.

std::string format_element(const Rational& q);
std::string format_element(const FreeAlgebra& alg, const NcPoly& p);
std::string format_element(const GrassmannAlgebra& alg, const GrassmannElem& g);
std::string format_element(const MatrixRing<RationalRing>& ring, const RingMatrix<Rational>& m);

// "e11, e12; e21, e22" -- the source-document body form.
template <typename E>
std::string format_matrix(const RingMatrix<E>& A, const std::function<std::string(const E&)>& fmt)
{
    std::string out;
    for (int r = 0; r < A.n(); ++r) {
        if (r > 0)
            out += "; ";
        for (int c = 0; c < A.n(); ++c) {
            if (c > 0)
                out += ", ";
            out += fmt(A.at(r, c));
        }
    }
    return out;
}

namespace detail {

// True when the rendered element needs parentheses as a t-coefficient:
// it contains a top-level binary + or -.
bool needs_parens(const std::string& s);

std::string tpower(int k);

} // namespace detail

// Display form for polynomials in t, highest power first; compound
// coefficients are parenthesized. Not part of the input grammar.
template <typename E>
std::string format_tpoly(const TPoly<E>& p, const std::function<std::string(const E&)>& fmt)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        std::string c = fmt(p.coeffs()[static_cast<std::size_t>(k)]);
        if (c == "0")
            continue;
        bool negative = false;
        if (detail::needs_parens(c)) {
            c = "(" + c + ")";
        } else if (!c.empty() && c[0] == '-') {
            negative = true;
            c = c.substr(1);
        }
        if (k > 0) {
            if (c == "1")
                c = detail::tpower(k);
            else
                c += "*" + detail::tpower(k);
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += c;
    }
    return out.empty() ? "0" : out;
}

} // namespace ncch
