#ifndef RV_RACAH_HPP
#define RV_RACAH_HPP

#include "bratteli.hpp"
#include "ncalg.hpp"
#include "su2rep.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rv {

// Generator indices in every Racah quotient presentation (C is central
// and therefore listed first).
inline constexpr std::uint8_t GEN_C = 0;
inline constexpr std::uint8_t GEN_A = 1;
inline constexpr std::uint8_t GEN_B = 2;

struct RacahQuotientSpec {
    std::array<Spin, 3> spins;
    std::array<Rational, 3> alphas;
    CouplingSets coupling;
    Presentation presentation;
};

// Universal Racah relations plus the characteristic-polynomial quotient
// relations determined by the coupling sets.
RacahQuotientSpec build_quotient(Spin j1, Spin j2, Spin j3);

// The two defining double-commutator relations of the universal Racah
// algebra, with A, B, C given as arbitrary polynomials (so C may be a
// generator or a scalar).
std::vector<NCPoly> racah_defining_relations(const Presentation& p, const NCPoly& a,
                                             const NCPoly& b, const NCPoly& c,
                                             const std::array<Rational, 3>& alphas);

// Evaluates a polynomial of the presentation at matrix images of the
// generators (images[i] is the image of generator i).
Matrix eval_on_matrices(const Presentation& p, const NCPoly& poly,
                        const std::vector<Matrix>& images);

struct KernelReport {
    std::array<Spin, 3> spins;
    std::vector<std::pair<std::string, bool>> relation_ok;
    bool casimir_identity_ok = false;
    bool all_ok = false;
};

// Evaluates every quotient relation at A->K12, B->K23, C->K123.
KernelReport verify_kernel_on_matrices(Spin j1, Spin j2, Spin j3);

struct ConjectureReport {
    std::array<Spin, 3> spins;
    std::size_t lower = 0;     // matrix span dimension
    std::optional<std::size_t> upper; // certified abstract bound
    std::size_t target = 0;    // sum of d_j^2
    bool verified = false;
    std::vector<Word> basis;   // certified basis words (direct route only)
    std::string method;        // "direct" or "characters"
};

// Dual-sided verification: matrix span lower bound vs certified abstract
// upper bound.  Falls back to the central-character decomposition when
// the full presentation's relations exceed the truncation budget.
ConjectureReport verify_conjecture(Spin j1, Spin j2, Spin j3, unsigned Lmax = 7);

struct CharacterDim {
    Rational c;      // value of the central generator C
    std::size_t expected; // d_l^2
    std::optional<std::size_t> dim; // certified dimension
};

// Specializes C to each l(l+1), l in J123, merging the now-redundant
// characteristic relations by root-set intersection, and certifies the
// dimension of each summand.
std::vector<CharacterDim> decompose_by_central_character(Spin j1, Spin j2, Spin j3,
                                                         unsigned Lmax = 7);

struct S3Report {
    bool set_laws_ok = false;
    HomCheck phi1 = HomCheck::inconclusive;
    HomCheck phi2 = HomCheck::inconclusive;
    bool ok() const {
        return set_laws_ok && phi1 == HomCheck::verified && phi2 == HomCheck::verified;
    }
};

// Checks the coupling-set transformation laws under the transpositions
// 1<->3 and 1<->2, and that the generator maps phi1/phi2 carry the
// permuted quotient relations into the target quotient's ideal.
S3Report verify_s3_invariance(Spin j1, Spin j2, Spin j3, unsigned Lmax = 7);

// Checks the coupling-set transformation laws only (cheap, any spins).
bool verify_s3_set_laws(Spin j1, Spin j2, Spin j3);

// Closed-form identities for central elements and simplified
// presentations, verified as exact matrix identities.  Case ids:
// tl-simplified, brauer-C, btl-lemma:<j>, bB-G, bB-presentation.
bool verify_derived_identity(const std::string& case_id);
std::vector<std::string> derived_identity_cases();

enum class HjkStatus { verified, failed, inconclusive, excluded };

// The two-parameter family with C specialized to a scalar and quadratic
// characteristic relations for A and B: certifies the spanning set
// {1, A, B, AB} and the rewritten cubic relations.
HjkStatus verify_hjk(Spin j, Spin k, const Rational& c, unsigned Lmax = 7);

// In H_{j,j,c} with c = x^2-1/4-z^2, the shifted generators satisfy a
// quadratic relation, the braid relation, and a cubic identity.
bool verify_braid_remark(Spin j, const Rational& z, unsigned Lmax = 6);

struct RedundancyReport {
    std::optional<std::size_t> full_dim;
    std::optional<std::size_t> reduced_dim;
    bool unchanged = false;
};

// For (j, 1/2, k): drops the C-A-B and A+B characteristic relations and
// one of the two difference relations, and re-certifies the dimension.
// Throws std::invalid_argument for the excluded case (1/2, 1/2).
RedundancyReport test_relation_redundancy(Spin j, Spin k, unsigned Lmax = 7);

} // namespace rv

#endif
