#ifndef RV_DIAGALG_HPP
#define RV_DIAGALG_HPP

#include "rational.hpp"
#include "su2rep.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rv {

// Perfect matching on the six strand endpoints of a 3-strand diagram.
// Points 0,1,2 are on the top edge, 3,4,5 on the bottom edge (point i+3
// sits below point i).
struct BrauerDiagram {
    std::array<std::uint8_t, 6> partner{};

    static BrauerDiagram from_pairs(
        const std::vector<std::pair<unsigned, unsigned>>& pairs);

    std::vector<std::pair<unsigned, unsigned>> pairs() const; // canonical sorted form
    bool is_planar() const; // non-crossing in the circular order 0,1,2,5,4,3

    friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.partner == b.partner;
    }
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.partner < b.partner;
    }
};

std::string to_string(const BrauerDiagram& d);

BrauerDiagram identity_diagram();
BrauerDiagram diagram_s1(); // crossing of strands 1,2
BrauerDiagram diagram_s2(); // crossing of strands 2,3
BrauerDiagram diagram_e1(); // cup-cap on strands 1,2
BrauerDiagram diagram_e2(); // cup-cap on strands 2,3

// All 15 perfect matchings, or the 5 planar (Temperley-Lieb) ones.
std::vector<BrauerDiagram> enumerate_diagrams(bool planar_only);

// Stacks a on top of b; closed middle loops are counted in *loops.
BrauerDiagram concat(const BrauerDiagram& a, const BrauerDiagram& b, unsigned* loops);

// Linear combination of diagrams with a fixed loop parameter.
struct DiagElement {
    std::map<BrauerDiagram, Rational> terms;
    Rational delta;

    static DiagElement zero(const Rational& delta);
    static DiagElement unit(const Rational& delta);
    static DiagElement single(const BrauerDiagram& d, const Rational& delta,
                              const Rational& coeff = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const BrauerDiagram& d, const Rational& c);

    DiagElement& operator+=(const DiagElement& o);
    DiagElement& operator-=(const DiagElement& o);
    DiagElement& operator*=(const Rational& s);
    friend DiagElement operator+(DiagElement a, const DiagElement& b) { return a += b; }
    friend DiagElement operator-(DiagElement a, const DiagElement& b) { return a -= b; }
    friend DiagElement operator*(DiagElement a, const Rational& s) { return a *= s; }
    friend DiagElement operator*(const Rational& s, DiagElement a) { return a *= s; }
    friend bool operator==(const DiagElement& a, const DiagElement& b) {
        return a.delta == b.delta && a.terms == b.terms;
    }
};

// Bilinear extension of concatenation with loop factor delta^#loops.
DiagElement multiply(const DiagElement& x, const DiagElement& y);

// Coordinates of x in the given diagram basis (throws if a diagram of x
// is missing from the basis).
std::vector<Rational> vectorize(const DiagElement& x, const std::vector<BrauerDiagram>& basis);

// Matrix of left multiplication by x on span(basis); requires the span
// to be closed under that action.
Matrix left_regular_matrix(const DiagElement& x, const std::vector<BrauerDiagram>& basis);

// Explicit isomorphisms between quotient presentations and diagram /
// boundary algebras, verified by exact evaluation.
bool verify_tl_iso();
bool verify_brauer_iso();
bool verify_btl_iso(Spin j); // throws std::invalid_argument for j = 1/2
bool verify_bB_iso();

} // namespace rv

#endif
