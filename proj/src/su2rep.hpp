#ifndef RV_SU2REP_HPP
#define RV_SU2REP_HPP

#include "matrix.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace rv {

// Half-integer spin stored as twice its value.
struct Spin {
    unsigned twice = 0;

    std::size_t dim() const { return twice + 1; }
    Rational value() const { return rat(twice, 2); }
    // j(j+1)
    Rational casimir() const { return rat(static_cast<long>(twice) * (twice + 2), 4); }

    auto operator<=>(const Spin&) const = default;
};

std::string to_string(Spin j);

// Chevalley-basis generators of the spin-j representation.  All entries
// are integers; [H,E]=2E, [H,F]=-2F, [E,F]=H hold exactly.
struct RepGens {
    Matrix e, f, h;
};

RepGens spin_rep(Spin j);

// Casimir (EF+FE)/2 + H^2/4 of a generator triple; eigenvalue j(j+1).
Matrix casimir_of(const RepGens& g);

// The three-site tensor space with all embedded generators and the seven
// intermediate Casimirs.
struct TensorContext {
    std::array<Spin, 3> spins;
    std::array<RepGens, 3> site;   // embedded in the full space
    RepGens total;
    Matrix k1, k2, k3, k12, k13, k23, k123;

    std::size_t dim() const { return k123.rows(); }
};

TensorContext build_context(Spin j1, Spin j2, Spin j3);

// K1+K2+K3+K123 == K12+K23+K13, exactly.
bool verify_casimir_identity(const TensorContext& ctx);

enum class CasimirPair { k123_minus_k12, k123_minus_k23, k123_minus_k13 };

// Exact spectrum of K123-K12 (resp. -K23, -K13), found by splitting the
// minimal polynomial over the candidate differences l(l+1)-k(k+1) read
// off the Bratteli data.  Throws if the polynomial does not split there.
std::vector<Rational> spectrum_difference(const TensorContext& ctx, CasimirPair which);

} // namespace rv

#endif
