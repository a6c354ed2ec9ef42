#include "bratteli.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace rv {

std::vector<Spin> tensor_decompose(Spin ja, Spin jb) {
    std::vector<Spin> out;
    unsigned lo = static_cast<unsigned>(
        std::abs(static_cast<long>(ja.twice) - static_cast<long>(jb.twice)));
    unsigned hi = ja.twice + jb.twice;
    for (unsigned t = lo; t <= hi; t += 2) out.push_back(Spin{t});
    return out;
}

BratteliData build_bratteli(Spin j1, Spin j2, Spin j3) {
    BratteliData d;
    d.top = j1;
    d.middle = tensor_decompose(j1, j2);
    std::set<Spin> bottoms;
    std::vector<std::pair<std::size_t, Spin>> raw_edges;
    for (std::size_t k = 0; k < d.middle.size(); ++k)
        for (Spin l : tensor_decompose(d.middle[k], j3)) {
            bottoms.insert(l);
            raw_edges.emplace_back(k, l);
        }
    for (Spin l : bottoms) d.bottom.emplace_back(l, 0);
    for (const auto& [k, l] : raw_edges) {
        std::size_t idx = 0;
        while (d.bottom[idx].first != l) ++idx;
        d.bottom[idx].second++;
        d.edges.emplace_back(k, idx);
    }
    return d;
}

static std::vector<Rational> edge_values(Spin ja, Spin jb, Spin jc) {
    const BratteliData d = build_bratteli(ja, jb, jc);
    std::set<Rational> vals;
    for (const auto& [k, l] : d.edges)
        vals.insert(d.bottom[l].first.casimir() - d.middle[k].casimir());
    return {vals.begin(), vals.end()};
}

CouplingSets coupling_sets(Spin j1, Spin j2, Spin j3) {
    CouplingSets cs;
    cs.j12 = tensor_decompose(j1, j2);
    cs.j13 = tensor_decompose(j1, j3);
    cs.j23 = tensor_decompose(j2, j3);
    const BratteliData d = build_bratteli(j1, j2, j3);
    for (const auto& [l, mult] : d.bottom) cs.j123.push_back(l);
    cs.m123 = edge_values(j1, j2, j3);
    cs.m231 = edge_values(j2, j3, j1);
    cs.m132 = edge_values(j1, j3, j2);
    return cs;
}

std::size_t centralizer_dim(Spin j1, Spin j2, Spin j3) {
    const BratteliData d = build_bratteli(j1, j2, j3);
    std::size_t dim = 0;
    for (const auto& [l, mult] : d.bottom) dim += mult * mult;
    return dim;
}

} // namespace rv
