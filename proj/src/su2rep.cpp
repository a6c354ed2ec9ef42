#include "su2rep.hpp"

#include "bratteli.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rv {

std::string to_string(Spin j) {
    if (j.twice % 2 == 0) return std::to_string(j.twice / 2);
    return std::to_string(j.twice) + "/2";
}

RepGens spin_rep(Spin j) {
    const std::size_t n = j.dim();
    RepGens g{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    // Basis v_m for m=-j..j at index i=(m+j): E v_m=(j-m)v_{m+1},
    // F v_m=(j+m)v_{m-1}, H v_m=2m v_m.
    for (std::size_t i = 0; i < n; ++i) {
        long jm = static_cast<long>(j.twice) - static_cast<long>(i); // j-m
        long jp = static_cast<long>(i);                              // j+m
        if (i + 1 < n) g.e(i + 1, i) = rat(jm);
        if (i > 0) g.f(i - 1, i) = rat(jp);
        g.h(i, i) = rat(2 * static_cast<long>(i) - static_cast<long>(j.twice));
    }
    return g;
}

Matrix casimir_of(const RepGens& g) {
    Matrix k = (g.e * g.f + g.f * g.e) * rat(1, 2);
    k += g.h * g.h * rat(1, 4);
    return k;
}

static RepGens sum(const RepGens& a, const RepGens& b) {
    return RepGens{a.e + b.e, a.f + b.f, a.h + b.h};
}

TensorContext build_context(Spin j1, Spin j2, Spin j3) {
    TensorContext ctx;
    ctx.spins = {j1, j2, j3};
    const RepGens g1 = spin_rep(j1), g2 = spin_rep(j2), g3 = spin_rep(j3);
    const Matrix i1 = Matrix::identity(j1.dim());
    const Matrix i2 = Matrix::identity(j2.dim());
    const Matrix i3 = Matrix::identity(j3.dim());
    auto embed = [&](const Matrix& a, const Matrix& b, const Matrix& c) {
        return kron(kron(a, b), c);
    };
    ctx.site[0] = RepGens{embed(g1.e, i2, i3), embed(g1.f, i2, i3), embed(g1.h, i2, i3)};
    ctx.site[1] = RepGens{embed(i1, g2.e, i3), embed(i1, g2.f, i3), embed(i1, g2.h, i3)};
    ctx.site[2] = RepGens{embed(i1, i2, g3.e), embed(i1, i2, g3.f), embed(i1, i2, g3.h)};
    ctx.total = sum(sum(ctx.site[0], ctx.site[1]), ctx.site[2]);
    ctx.k1 = casimir_of(ctx.site[0]);
    ctx.k2 = casimir_of(ctx.site[1]);
    ctx.k3 = casimir_of(ctx.site[2]);
    ctx.k12 = casimir_of(sum(ctx.site[0], ctx.site[1]));
    ctx.k13 = casimir_of(sum(ctx.site[0], ctx.site[2]));
    ctx.k23 = casimir_of(sum(ctx.site[1], ctx.site[2]));
    ctx.k123 = casimir_of(ctx.total);
    return ctx;
}

bool verify_casimir_identity(const TensorContext& ctx) {
    return ctx.k1 + ctx.k2 + ctx.k3 + ctx.k123 == ctx.k12 + ctx.k23 + ctx.k13;
}

static Rational eval_at(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides poly by (x - r); poly must vanish at r.
static std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& r) {
    std::vector<Rational> q(poly.size() - 1);
    Rational carry = 0;
    for (std::size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

std::vector<Rational> spectrum_difference(const TensorContext& ctx, CasimirPair which) {
    const CouplingSets cs = coupling_sets(ctx.spins[0], ctx.spins[1], ctx.spins[2]);
    const std::vector<Spin>* middle = nullptr;
    const Matrix* diff_with = nullptr;
    switch (which) {
        case CasimirPair::k123_minus_k12: middle = &cs.j12; diff_with = &ctx.k12; break;
        case CasimirPair::k123_minus_k23: middle = &cs.j23; diff_with = &ctx.k23; break;
        case CasimirPair::k123_minus_k13: middle = &cs.j13; diff_with = &ctx.k13; break;
    }
    std::set<Rational> candidates;
    for (Spin l : cs.j123)
        for (Spin k : *middle) candidates.insert(l.casimir() - k.casimir());

    std::vector<Rational> poly = minimal_polynomial(ctx.k123 - *diff_with);
    std::set<Rational> roots;
    for (const Rational& r : candidates)
        while (poly.size() > 1 && eval_at(poly, r) == 0) {
            roots.insert(r);
            poly = deflate(poly, r);
        }
    if (poly.size() != 1)
        throw std::logic_error("spectrum_difference: minimal polynomial does not split "
                               "over the Bratteli candidate set");
    return std::vector<Rational>(roots.begin(), roots.end());
}

} // namespace rv
