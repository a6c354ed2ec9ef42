#ifndef RV_BRATTELI_HPP
#define RV_BRATTELI_HPP

#include "su2rep.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace rv {

// Clebsch-Gordan decomposition of [2ja] x [2jb]: spins |ja-jb| .. ja+jb.
std::vector<Spin> tensor_decompose(Spin ja, Spin jb);

// Three-row coupling diagram for [2j1] x [2j2] x [2j3].
struct BratteliData {
    Spin top;
    std::vector<Spin> middle;
    std::vector<std::pair<Spin, std::size_t>> bottom; // (spin, multiplicity)
    std::vector<std::pair<std::size_t, std::size_t>> edges; // (middle idx, bottom idx)
};

BratteliData build_bratteli(Spin j1, Spin j2, Spin j3);

// Admissible intermediate/total spins and the eigenvalue sets
// l(l+1)-k(k+1) of the Casimir differences.  All sorted; M sets are
// deduplicated (distinct edges can carry equal values).
struct CouplingSets {
    std::vector<Spin> j12, j13, j23, j123;
    std::vector<Rational> m123, m231, m132;
};

CouplingSets coupling_sets(Spin j1, Spin j2, Spin j3);

// Sum over J123 of the squared multiplicities.
std::size_t centralizer_dim(Spin j1, Spin j2, Spin j3);

} // namespace rv

#endif
