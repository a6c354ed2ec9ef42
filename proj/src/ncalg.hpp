#ifndef RV_NCALG_HPP
#define RV_NCALG_HPP

#include "rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rv {

// Monomial in named generators; the empty word is the unit.
// Ordered length-first, then lexicographically by generator index.
struct Word {
    std::vector<std::uint8_t> letters;

    std::size_t degree() const { return letters.size(); }
    bool is_unit() const { return letters.empty(); }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
    friend Word operator*(const Word& a, const Word& b);
};

// Noncommutative polynomial; no zero coefficients stored.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly constant(const Rational& c);
    static NCPoly generator(std::uint8_t g);
    static NCPoly monomial(Word w, const Rational& c = 1);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const; // 0 for the zero polynomial

    void add_term(const Word& w, const Rational& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& s);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rational& s) { return a *= s; }
    friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

private:
    std::map<Word, Rational> terms_;
};

// Finitely presented associative algebra over the rationals.  Central
// generators must precede the others in the generator list; centrality
// is imposed structurally (words are normalized with central letters
// pulled to the front), never via explicit commutator relations.
struct Presentation {
    std::vector<std::string> names;
    std::size_t n_central = 0;
    std::vector<NCPoly> relations;

    std::size_t n_gens() const { return names.size(); }
    // Pulls central letters to the front (sorted); non-central letters
    // keep their relative order.
    Word normalize(Word w) const;
    NCPoly normalize(const NCPoly& p) const;
    NCPoly product(const NCPoly& a, const NCPoly& b) const;
    NCPoly power(const NCPoly& a, unsigned k) const;

    std::string format(const NCPoly& p) const;
};

// Degree-truncated linear model of a presentation: row echelon of all
// relation instances x*r*y of total degree <= L, over the normalized
// words of degree <= L.
class RelationTable {
public:
    RelationTable(const Presentation& p, unsigned L);

    unsigned truncation() const { return L_; }
    const Presentation& presentation() const { return pres_; }

    // Full normal form modulo the tabled relation instances.
    NCPoly reduce(NCPoly p) const;

    // dim(words of degree <= L) - rank(relation instances).
    std::size_t truncated_dim() const;

    // Words of degree <= L irreducible w.r.t. the table, sorted.
    std::vector<Word> irreducible_words() const;

    // True when every irreducible word has degree < L, so that the span
    // of irreducible words is certifiably closed under left
    // multiplication by generators: truncated_dim() is then the exact
    // algebra dimension bound.
    bool closed() const;

private:
    void insert(NCPoly row);

    Presentation pres_;
    unsigned L_;
    std::vector<Word> all_words_; // normalized, degree <= L, sorted
    std::map<Word, NCPoly> rows_; // leading word -> monic row
};

// Upper bound on the algebra dimension: smallest certified truncated
// dimension found for L in [Lmin, Lmax]; nullopt when no truncation
// closes (inconclusive).
struct DimCertificate {
    std::size_t dim;
    unsigned level;
    std::vector<Word> basis;
};
std::optional<DimCertificate> certified_dim(const Presentation& p, unsigned Lmin, unsigned Lmax);

std::size_t truncated_dim(const Presentation& p, unsigned L);

// Certifies dim <= |basis|: every g*w for g a generator and w a basis
// word reduces into span(basis) modulo relation instances of degree <= L.
// False is inconclusive (raise L).
bool certify_closure(const Presentation& p, const std::vector<Word>& basis, unsigned L);

// Coordinates of basis_i * basis_j in the given basis.  Requires the
// closure certificate to hold and the basis to be linearly independent
// in the truncated model; throws otherwise.
std::vector<std::vector<std::vector<Rational>>>
structure_constants(const Presentation& p, const std::vector<Word>& basis, unsigned L);

enum class HomCheck { verified, failed, inconclusive };

// Checks that the substitution gen_i -> images[i] carries every relation
// of src into the ideal of dst (reduction to zero at truncation L).
// `failed` means a nonzero remainder supported on certified-irreducible
// words; `inconclusive` means the truncation could not decide.
HomCheck check_homomorphism(const Presentation& src, const std::vector<NCPoly>& images,
                            const Presentation& dst, unsigned L);

// Product of linear factors (base - c) over cs, expanded left to right.
NCPoly char_poly_relation(const Presentation& p, const NCPoly& base,
                          const std::vector<Rational>& cs);

} // namespace rv

#endif
