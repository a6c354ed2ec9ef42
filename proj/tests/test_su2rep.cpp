#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bratteli.hpp"
#include "su2rep.hpp"

#include <algorithm>

using namespace rv;

TEST_CASE("defining relations hold in every representation") {
    for (unsigned twice = 0; twice <= 6; ++twice) {
        const RepGens g = spin_rep(Spin{twice});
        CHECK(commutator(g.h, g.e) == 2 * g.e);
        CHECK(commutator(g.h, g.f) == rat(-2) * g.f);
        CHECK(commutator(g.e, g.f) == g.h);
    }
}

TEST_CASE("casimir is scalar with eigenvalue j(j+1)") {
    for (unsigned twice = 0; twice <= 6; ++twice) {
        const Spin j{twice};
        const Matrix k = casimir_of(spin_rep(j));
        CHECK(k == j.casimir() * Matrix::identity(j.dim()));
    }
}

TEST_CASE("tensor context dimensions and commutation") {
    const TensorContext ctx = build_context(Spin{1}, Spin{2}, Spin{1});
    CHECK(ctx.dim() == 2 * 3 * 2);
    // Total generators are sums of the site embeddings.
    CHECK(ctx.total.e == ctx.site[0].e + ctx.site[1].e + ctx.site[2].e);
    // Intermediate Casimirs commute with the diagonal action and K123.
    for (const Matrix* k : {&ctx.k12, &ctx.k23, &ctx.k13, &ctx.k123}) {
        CHECK(commutator(*k, ctx.total.e).is_zero());
        CHECK(commutator(*k, ctx.total.f).is_zero());
        CHECK(commutator(*k, ctx.total.h).is_zero());
        CHECK(commutator(*k, ctx.k123).is_zero());
    }
    // K12 acts only on the first two factors, so it commutes with K3.
    CHECK(commutator(ctx.k12, ctx.k3).is_zero());
}

TEST_CASE("sum identity for the seven casimirs") {
    for (auto [a, b, c] : {std::array<unsigned, 3>{1, 1, 1}, {2, 1, 1}, {1, 2, 3}})
        CHECK(verify_casimir_identity(build_context(Spin{a}, Spin{b}, Spin{c})));
}

TEST_CASE("single-site casimirs are scalars in the tensor space") {
    const TensorContext ctx = build_context(Spin{3}, Spin{1}, Spin{2});
    CHECK(ctx.k1 == Spin{3}.casimir() * Matrix::identity(ctx.dim()));
    CHECK(ctx.k2 == Spin{1}.casimir() * Matrix::identity(ctx.dim()));
    CHECK(ctx.k3 == Spin{2}.casimir() * Matrix::identity(ctx.dim()));
}

TEST_CASE("spectrum of casimir differences matches the coupling data") {
    const TensorContext ctx = build_context(Spin{1}, Spin{1}, Spin{1});
    auto spec = spectrum_difference(ctx, CasimirPair::k123_minus_k12);
    std::sort(spec.begin(), spec.end());
    const std::vector<Rational> expected = {rat(-5, 4), rat(3, 4), rat(7, 4)};
    CHECK(spec == expected);

    // Cross-check against the coupling sets for an asymmetric triple.
    const TensorContext ctx2 = build_context(Spin{2}, Spin{1}, Spin{2});
    auto spec2 = spectrum_difference(ctx2, CasimirPair::k123_minus_k12);
    std::sort(spec2.begin(), spec2.end());
    auto m123 = coupling_sets(Spin{2}, Spin{1}, Spin{2}).m123;
    std::sort(m123.begin(), m123.end());
    CHECK(spec2 == m123);
}
