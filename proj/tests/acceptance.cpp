// Acceptance gate: one pass/fail line per criterion, exit nonzero if
// any criterion fails.
#include "bratteli.hpp"
#include "diagalg.hpp"
#include "linalg.hpp"
#include "racah.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <vector>

using namespace rv;

namespace {

bool dims_match(Spin a, Spin b, Spin c, std::size_t expected) {
    if (centralizer_dim(a, b, c) != expected) return false;
    const TensorContext ctx = build_context(a, b, c);
    return span_closure({ctx.k12, ctx.k23, ctx.k123}).size() == expected;
}

// 1. Reference centralizer dimensions, via both the multiplicity formula
//    and matrix span closure.
bool criterion_dimensions() {
    return dims_match(Spin{1}, Spin{1}, Spin{1}, 5) &&
           dims_match(Spin{2}, Spin{2}, Spin{2}, 15) &&
           dims_match(Spin{2}, Spin{1}, Spin{1}, 6) &&
           dims_match(Spin{3}, Spin{1}, Spin{1}, 6) &&
           dims_match(Spin{4}, Spin{1}, Spin{1}, 6) &&
           dims_match(Spin{1}, Spin{2}, Spin{2}, 9) &&
           dims_match(Spin{3}, Spin{3}, Spin{3}, 34);
}

bool set_eq(std::vector<Rational> a, std::vector<Rational> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// 2. Eigenvalue coupling sets, verbatim.
bool criterion_coupling_sets() {
    bool ok = true;
    {
        const CouplingSets cs = coupling_sets(Spin{1}, Spin{1}, Spin{1});
        const std::vector<Rational> m = {rat(7, 4), rat(-5, 4), rat(3, 4)};
        ok = ok && set_eq(cs.m123, m) && set_eq(cs.m231, m) && set_eq(cs.m132, m);
    }
    {
        const CouplingSets cs = coupling_sets(Spin{2}, Spin{2}, Spin{2});
        const std::vector<Rational> m = {rat(-4), rat(-2), rat(0), rat(2), rat(4), rat(6)};
        ok = ok && set_eq(cs.m123, m) && set_eq(cs.m231, m) && set_eq(cs.m132, m);
    }
    for (unsigned twice : {2u, 3u, 4u}) {
        const Rational j = Spin{twice}.value();
        const CouplingSets cs = coupling_sets(Spin{twice}, Spin{1}, Spin{1});
        const std::vector<Rational> m123 = {j + rat(5, 4), -j - rat(3, 4), j + rat(1, 4),
                                            -j + rat(1, 4)};
        const std::vector<Rational> m231 = {j * (j + 3), (j + 2) * (j - 1), j * (j + 1),
                                            (j + 1) * (j - 2)};
        ok = ok && set_eq(cs.m123, m123) && set_eq(cs.m132, m123) && set_eq(cs.m231, m231);
    }
    {
        const CouplingSets cs = coupling_sets(Spin{1}, Spin{2}, Spin{2});
        ok = ok && set_eq(cs.m231, {rat(-9, 4), rat(-5, 4), rat(3, 4), rat(7, 4), rat(11, 4)});
        ok = ok && set_eq(cs.m123, {rat(-3), rat(0), rat(3), rat(5)});
    }
    {
        const CouplingSets cs = coupling_sets(Spin{3}, Spin{3}, Spin{3});
        const std::vector<Rational> m = {rat(-33, 4), rat(-21, 4), rat(-13, 4), rat(-9, 4),
                                         rat(-5, 4),  rat(7, 4),   rat(11, 4),  rat(15, 4),
                                         rat(27, 4),  rat(39, 4),  rat(51, 4)};
        ok = ok && set_eq(cs.m123, m) && set_eq(cs.m231, m) && set_eq(cs.m132, m);
    }
    return ok;
}

// 3. All defining and characteristic relations vanish on the Casimir
//    matrices for every unordered triple with spins <= 2.
bool criterion_kernel_sweep() {
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = a; b <= 4; ++b)
            for (unsigned c = b; c <= 4; ++c) {
                const KernelReport kr =
                    verify_kernel_on_matrices(Spin{a}, Spin{b}, Spin{c});
                if (!kr.all_ok) {
                    std::printf("  kernel sweep failed at (%s,%s,%s)\n",
                                to_string(Spin{a}).c_str(), to_string(Spin{b}).c_str(),
                                to_string(Spin{c}).c_str());
                    return false;
                }
            }
    return true;
}

// 4. lower = upper = target for the proven cases.
bool criterion_conjecture() {
    const std::vector<std::array<unsigned, 3>> cases = {
        {1, 1, 1}, {2, 2, 2}, {1, 2, 2}, {3, 3, 3}, {2, 1, 1},
        {3, 1, 1}, {4, 1, 1}, {2, 1, 2}, {3, 1, 2}, {4, 1, 3}};
    for (auto [a, b, c] : cases) {
        const ConjectureReport r = verify_conjecture(Spin{a}, Spin{b}, Spin{c}, 7);
        if (!r.verified) {
            std::printf("  conjecture failed at (%s,%s,%s): lower=%zu target=%zu\n",
                        to_string(Spin{a}).c_str(), to_string(Spin{b}).c_str(),
                        to_string(Spin{c}).c_str(), r.lower, r.target);
            return false;
        }
    }
    return true;
}

// 5. Central-character dimensions.
bool criterion_characters() {
    const std::vector<std::pair<std::array<unsigned, 3>, std::vector<std::size_t>>> cases = {
        {{1, 1, 1}, {1, 4}},
        {{2, 2, 2}, {1, 4, 9, 1}},
        {{3, 3, 3}, {1, 4, 9, 16, 4}},
    };
    for (const auto& [spins, dims] : cases) {
        const auto chars =
            decompose_by_central_character(Spin{spins[0]}, Spin{spins[1]}, Spin{spins[2]});
        std::vector<std::size_t> got;
        std::size_t total = 0;
        for (const auto& cd : chars) {
            if (!cd.dim || *cd.dim != cd.expected) return false;
            got.push_back(*cd.dim);
            total += *cd.dim;
        }
        std::vector<std::size_t> want = dims;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) return false;
        if (total != centralizer_dim(Spin{spins[0]}, Spin{spins[1]}, Spin{spins[2]}))
            return false;
    }
    return true;
}

// 6. Diagram-algebra isomorphisms.
bool criterion_isomorphisms() {
    return verify_tl_iso() && verify_brauer_iso() && verify_btl_iso(Spin{2}) &&
           verify_btl_iso(Spin{3}) && verify_btl_iso(Spin{4}) && verify_bB_iso();
}

// 7. The scalar-central specialization, braid samples, and removable
//    relations.
bool criterion_specializations() {
    const std::vector<std::pair<unsigned, unsigned>> jk = {{2, 1}, {2, 2}, {3, 2}, {4, 1}};
    for (const Rational& c : {rat(0), rat(2), rat(7, 4)})
        for (auto [j, k] : jk)
            if (verify_hjk(Spin{j}, Spin{k}, c) != HjkStatus::verified) return false;
    if (verify_hjk(Spin{1}, Spin{1}, rat(0)) != HjkStatus::excluded) return false;
    if (!verify_braid_remark(Spin{2}, rat(1, 2))) return false;
    if (!verify_braid_remark(Spin{3}, rat(1))) return false;
    if (!verify_braid_remark(Spin{2}, rat(0))) return false;
    for (auto [j, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 2}}) {
        const RedundancyReport r = test_relation_redundancy(Spin{j}, Spin{k});
        if (!r.unchanged) return false;
    }
    try {
        test_relation_redundancy(Spin{1}, Spin{1});
        return false;
    } catch (const std::invalid_argument&) {
    }
    return true;
}

// 8. Standalone property suites.
std::size_t oracle_dim(Spin j1, Spin j2, Spin j3) {
    std::map<long, std::size_t> weights;
    for (long a = -(long)j1.twice; a <= (long)j1.twice; a += 2)
        for (long b = -(long)j2.twice; b <= (long)j2.twice; b += 2)
            for (long c = -(long)j3.twice; c <= (long)j3.twice; c += 2) ++weights[a + b + c];
    std::size_t dim = 0;
    for (const auto& [w, n] : weights) {
        if (w < 0) continue;
        const auto above = weights.find(w + 2);
        const std::size_t m = n - (above == weights.end() ? 0 : above->second);
        dim += m * m;
    }
    return dim;
}

bool criterion_properties() {
    // Diagram multiplication associativity, exhaustive.
    {
        const auto all = enumerate_diagrams(false);
        std::vector<DiagElement> els;
        for (const auto& d : all) els.push_back(DiagElement::single(d, rat(3)));
        for (const auto& x : els)
            for (const auto& y : els)
                for (const auto& z : els)
                    if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                        return false;
    }
    // Minimal polynomials annihilate.
    {
        const TensorContext ctx = build_context(Spin{2}, Spin{1}, Spin{2});
        for (const Matrix* m : {&ctx.k12, &ctx.k23, &ctx.k123})
            if (!eval_poly(minimal_polynomial(*m), *m).is_zero()) return false;
    }
    // Span closure returns an independent, multiplicatively closed basis.
    {
        const TensorContext ctx = build_context(Spin{1}, Spin{2}, Spin{1});
        const auto basis = span_closure({ctx.k12, ctx.k23, ctx.k123});
        RowSpan span(ctx.dim() * ctx.dim());
        for (const Matrix& m : basis)
            if (!span.add(vectorize(m))) return false;
        for (const Matrix& x : basis)
            for (const Matrix& y : basis)
                if (!span.contains(vectorize(x * y))) return false;
    }
    // Coupling-set permutation laws on random triples.
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<unsigned> pick(0, 4);
        for (int i = 0; i < 20; ++i)
            if (!verify_s3_set_laws(Spin{pick(rng)}, Spin{pick(rng)}, Spin{pick(rng)}))
                return false;
    }
    // Multiplicity formula vs weight counting for all spins <= 5/2.
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = a; b <= 5; ++b)
            for (unsigned c = b; c <= 5; ++c)
                if (centralizer_dim(Spin{a}, Spin{b}, Spin{c}) !=
                    oracle_dim(Spin{a}, Spin{b}, Spin{c}))
                    return false;
    return centralizer_dim(Spin{4}, Spin{2}, Spin{2}) == 19;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
        {"1 centralizer dimensions (sum of squares = matrix span)", criterion_dimensions},
        {"2 coupling sets match the reference values", criterion_coupling_sets},
        {"3 relation kernel vanishes for all triples with spins <= 2", criterion_kernel_sweep},
        {"4 conjecture lower = upper = target on the proven cases", criterion_conjecture},
        {"5 central-character dimensions", criterion_characters},
        {"6 diagram-algebra isomorphisms", criterion_isomorphisms},
        {"7 scalar-central family, braid samples, removable relations",
         criterion_specializations},
        {"8 property suites (associativity, annihilation, closure, oracle)",
         criterion_properties},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            std::printf("  exception: %s\n", e.what());
        }
        std::printf("%s criterion %s\n", ok ? "PASS" : "FAIL", name);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
