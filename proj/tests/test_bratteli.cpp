#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bratteli.hpp"
#include "racah.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace rv;

namespace {

// Independent multiplicity oracle: counts weight vectors of the triple
// tensor product directly.  The multiplicity of total spin l equals
// (#states of weight 2l) - (#states of weight 2l+2).
std::map<unsigned, std::size_t> weight_count_multiplicities(Spin j1, Spin j2, Spin j3) {
    std::map<long, std::size_t> weights; // twice the weight -> count
    for (long a = -(long)j1.twice; a <= (long)j1.twice; a += 2)
        for (long b = -(long)j2.twice; b <= (long)j2.twice; b += 2)
            for (long c = -(long)j3.twice; c <= (long)j3.twice; c += 2) ++weights[a + b + c];
    std::map<unsigned, std::size_t> mult;
    for (const auto& [w, n] : weights) {
        if (w < 0) continue;
        const auto above = weights.find(w + 2);
        const std::size_t m = n - (above == weights.end() ? 0 : above->second);
        if (m > 0) mult[static_cast<unsigned>(w)] = m;
    }
    return mult;
}

std::size_t oracle_centralizer_dim(Spin j1, Spin j2, Spin j3) {
    std::size_t dim = 0;
    for (const auto& [w, m] : weight_count_multiplicities(j1, j2, j3)) dim += m * m;
    return dim;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("pairwise tensor decomposition") {
    auto dec = tensor_decompose(Spin{1}, Spin{1});
    CHECK(dec == std::vector<Spin>{Spin{0}, Spin{2}});
    dec = tensor_decompose(Spin{4}, Spin{3});
    CHECK(dec == std::vector<Spin>{Spin{1}, Spin{3}, Spin{5}, Spin{7}});
    CHECK(tensor_decompose(Spin{0}, Spin{5}) == std::vector<Spin>{Spin{5}});
    // Dimensions add up.
    std::size_t total = 0;
    for (Spin s : tensor_decompose(Spin{3}, Spin{2})) total += s.dim();
    CHECK(total == Spin{3}.dim() * Spin{2}.dim());
}

TEST_CASE("three-row diagram for three spin-1/2 factors") {
    const BratteliData d = build_bratteli(Spin{1}, Spin{1}, Spin{1});
    CHECK(d.top == Spin{1});
    CHECK(d.middle == std::vector<Spin>{Spin{0}, Spin{2}});
    REQUIRE(d.bottom.size() == 2);
    CHECK(d.bottom[0].first == Spin{1});
    CHECK(d.bottom[0].second == 2);
    CHECK(d.bottom[1].first == Spin{3});
    CHECK(d.bottom[1].second == 1);
    CHECK(d.edges.size() == 3);
    CHECK(centralizer_dim(Spin{1}, Spin{1}, Spin{1}) == 5);
}

TEST_CASE("eigenvalue sets for the worked-out triples") {
    const CouplingSets a = coupling_sets(Spin{1}, Spin{1}, Spin{1});
    const std::vector<Rational> ma = {rat(-5, 4), rat(3, 4), rat(7, 4)};
    CHECK(sorted(a.m123) == ma);
    CHECK(sorted(a.m231) == ma);
    CHECK(sorted(a.m132) == ma);

    const CouplingSets b = coupling_sets(Spin{2}, Spin{2}, Spin{2});
    const std::vector<Rational> mb = {rat(-4), rat(-2), rat(0), rat(2), rat(4), rat(6)};
    CHECK(sorted(b.m123) == mb);
    CHECK(b.j12 == std::vector<Spin>{Spin{0}, Spin{2}, Spin{4}});
    CHECK(b.j123 == std::vector<Spin>{Spin{0}, Spin{2}, Spin{4}, Spin{6}});

    const CouplingSets c = coupling_sets(Spin{1}, Spin{2}, Spin{2});
    CHECK(sorted(c.m231) ==
          std::vector<Rational>{rat(-9, 4), rat(-5, 4), rat(3, 4), rat(7, 4), rat(11, 4)});
}

TEST_CASE("multiplicities agree with the weight-counting oracle") {
    for (unsigned t1 = 0; t1 <= 5; ++t1)
        for (unsigned t2 = t1; t2 <= 5; ++t2)
            for (unsigned t3 = t2; t3 <= 5; ++t3) {
                const Spin a{t1}, b{t2}, c{t3};
                CHECK(centralizer_dim(a, b, c) == oracle_centralizer_dim(a, b, c));
                // Per-spin multiplicities, not just the dimension.
                const auto oracle = weight_count_multiplicities(a, b, c);
                const BratteliData d = build_bratteli(a, b, c);
                REQUIRE(d.bottom.size() == oracle.size());
                for (const auto& [l, mult] : d.bottom) {
                    REQUIRE(oracle.count(l.twice) == 1);
                    CHECK(oracle.at(l.twice) == mult);
                }
            }
}

TEST_CASE("a multiplicity-three example") {
    CHECK(centralizer_dim(Spin{4}, Spin{2}, Spin{2}) == 19);
    CHECK(oracle_centralizer_dim(Spin{4}, Spin{2}, Spin{2}) == 19);
}

TEST_CASE("coupling sets transform correctly under permutations") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<unsigned> pick(0, 4);
    for (int i = 0; i < 20; ++i) {
        const Spin a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
        CAPTURE(a.twice);
        CAPTURE(b.twice);
        CAPTURE(c.twice);
        CHECK(verify_s3_set_laws(a, b, c));
    }
}
