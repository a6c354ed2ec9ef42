#include "diagalg.hpp"

#include "linalg.hpp"
#include "racah.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rv {

BrauerDiagram BrauerDiagram::from_pairs(
    const std::vector<std::pair<unsigned, unsigned>>& pairs) {
    if (pairs.size() != 3) throw std::invalid_argument("a diagram needs exactly 3 pairs");
    BrauerDiagram d;
    std::array<bool, 6> seen{};
    for (const auto& [a, b] : pairs) {
        if (a > 5 || b > 5 || a == b || seen[a] || seen[b])
            throw std::invalid_argument("not a perfect matching on 6 points");
        seen[a] = seen[b] = true;
        d.partner[a] = static_cast<std::uint8_t>(b);
        d.partner[b] = static_cast<std::uint8_t>(a);
    }
    return d;
}

std::vector<std::pair<unsigned, unsigned>> BrauerDiagram::pairs() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < 6; ++i)
        if (partner[i] > i) out.emplace_back(i, partner[i]);
    return out;
}

bool BrauerDiagram::is_planar() const {
    // Position of each point when the boundary is traversed circularly:
    // top left-to-right, then bottom right-to-left.
    static constexpr unsigned pos[6] = {0, 1, 2, 5, 4, 3};
    const auto ps = pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            unsigned a = pos[ps[i].first], b = pos[ps[i].second];
            unsigned c = pos[ps[j].first], d = pos[ps[j].second];
            if (a > b) std::swap(a, b);
            if (c > d) std::swap(c, d);
            const bool c_inside = a < c && c < b;
            const bool d_inside = a < d && d < b;
            if (c_inside != d_inside) return false;
        }
    return true;
}

std::string to_string(const BrauerDiagram& d) {
    auto name = [](unsigned p) {
        std::string s(1, static_cast<char>('1' + p % 3));
        if (p >= 3) s += '\'';
        return s;
    };
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [a, b] : d.pairs()) {
        if (!first) os << ", ";
        first = false;
        os << '(' << name(a) << ',' << name(b) << ')';
    }
    os << '}';
    return os.str();
}

BrauerDiagram identity_diagram() { return BrauerDiagram::from_pairs({{0, 3}, {1, 4}, {2, 5}}); }
BrauerDiagram diagram_s1() { return BrauerDiagram::from_pairs({{0, 4}, {1, 3}, {2, 5}}); }
BrauerDiagram diagram_s2() { return BrauerDiagram::from_pairs({{0, 3}, {1, 5}, {2, 4}}); }
BrauerDiagram diagram_e1() { return BrauerDiagram::from_pairs({{0, 1}, {3, 4}, {2, 5}}); }
BrauerDiagram diagram_e2() { return BrauerDiagram::from_pairs({{1, 2}, {4, 5}, {0, 3}}); }

static void enumerate_rec(std::array<std::uint8_t, 6>& partner, std::array<bool, 6>& used,
                          std::vector<BrauerDiagram>& out, bool planar_only) {
    unsigned a = 6;
    for (unsigned i = 0; i < 6; ++i)
        if (!used[i]) {
            a = i;
            break;
        }
    if (a == 6) {
        BrauerDiagram d;
        d.partner = partner;
        if (!planar_only || d.is_planar()) out.push_back(d);
        return;
    }
    used[a] = true;
    for (unsigned b = a + 1; b < 6; ++b) {
        if (used[b]) continue;
        used[b] = true;
        partner[a] = static_cast<std::uint8_t>(b);
        partner[b] = static_cast<std::uint8_t>(a);
        enumerate_rec(partner, used, out, planar_only);
        used[b] = false;
    }
    used[a] = false;
}

std::vector<BrauerDiagram> enumerate_diagrams(bool planar_only) {
    std::array<std::uint8_t, 6> partner{};
    std::array<bool, 6> used{};
    std::vector<BrauerDiagram> out;
    enumerate_rec(partner, used, out, planar_only);
    std::sort(out.begin(), out.end());
    return out;
}

BrauerDiagram concat(const BrauerDiagram& a, const BrauerDiagram& b, unsigned* loops) {
    // Composite graph on 12 nodes: 0..5 = a's points, 6..11 = b's points
    // shifted by 6; a's bottom point 3+i is glued to b's top point i.
    // External nodes: a-top 0,1,2 and b-bottom 9,10,11.
    auto step = [&](unsigned node) -> unsigned {
        return node < 6 ? a.partner[node] : 6 + b.partner[node - 6];
    };
    auto glue = [](unsigned node) -> unsigned {
        if (node >= 3 && node <= 5) return node + 3;  // a-bottom -> b-top
        if (node >= 6 && node <= 8) return node - 3;  // b-top -> a-bottom
        return node;
    };
    std::array<bool, 12> visited{};
    BrauerDiagram out;
    auto external = [](unsigned n) { return n <= 2 || n >= 9; };
    auto out_label = [](unsigned n) { return n <= 2 ? n : n - 6; };
    for (unsigned start : {0u, 1u, 2u, 9u, 10u, 11u}) {
        if (visited[start]) continue;
        unsigned node = start;
        visited[node] = true;
        for (;;) {
            node = step(node);
            visited[node] = true;
            if (external(node)) break;
            node = glue(node);
            visited[node] = true;
        }
        out.partner[out_label(start)] = static_cast<std::uint8_t>(out_label(node));
        out.partner[out_label(node)] = static_cast<std::uint8_t>(out_label(start));
    }
    unsigned nloops = 0;
    for (unsigned start = 3; start <= 8; ++start) {
        if (visited[start]) continue;
        ++nloops;
        unsigned node = start;
        while (!visited[node]) {
            visited[node] = true;
            node = step(node);
            visited[node] = true;
            node = glue(node);
        }
    }
    if (loops) *loops = nloops;
    return out;
}

DiagElement DiagElement::zero(const Rational& delta) {
    DiagElement e;
    e.delta = delta;
    return e;
}

DiagElement DiagElement::unit(const Rational& delta) {
    return single(identity_diagram(), delta);
}

DiagElement DiagElement::single(const BrauerDiagram& d, const Rational& delta,
                                const Rational& coeff) {
    DiagElement e;
    e.delta = delta;
    e.add_term(d, coeff);
    return e;
}

void DiagElement::add_term(const BrauerDiagram& d, const Rational& c) {
    auto it = terms.find(d);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

DiagElement& DiagElement::operator+=(const DiagElement& o) {
    for (const auto& [d, c] : o.terms) add_term(d, c);
    return *this;
}

DiagElement& DiagElement::operator-=(const DiagElement& o) {
    for (const auto& [d, c] : o.terms) add_term(d, -c);
    return *this;
}

DiagElement& DiagElement::operator*=(const Rational& s) {
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [d, c] : terms) c *= s;
    return *this;
}

DiagElement multiply(const DiagElement& x, const DiagElement& y) {
    if (x.delta != y.delta)
        throw std::invalid_argument("cannot multiply elements with different loop parameters");
    DiagElement out = DiagElement::zero(x.delta);
    for (const auto& [dx, cx] : x.terms)
        for (const auto& [dy, cy] : y.terms) {
            unsigned loops = 0;
            BrauerDiagram d = concat(dx, dy, &loops);
            Rational factor = cx * cy;
            for (unsigned i = 0; i < loops; ++i) factor *= x.delta;
            out.add_term(d, factor);
        }
    return out;
}

std::vector<Rational> vectorize(const DiagElement& x,
                                const std::vector<BrauerDiagram>& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [d, c] : x.terms) {
        auto it = std::find(basis.begin(), basis.end(), d);
        if (it == basis.end())
            throw std::invalid_argument("element is not supported on the given basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

Matrix left_regular_matrix(const DiagElement& x, const std::vector<BrauerDiagram>& basis) {
    const std::size_t n = basis.size();
    Matrix m = Matrix::zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const DiagElement col = multiply(x, DiagElement::single(basis[j], x.delta));
        const auto v = vectorize(col, basis);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = v[i];
    }
    return m;
}

namespace {

DiagElement eval_diag(const Presentation& p, const NCPoly& poly,
                      const std::vector<DiagElement>& images, const Rational& delta) {
    DiagElement acc = DiagElement::zero(delta);
    for (const auto& [w, c] : poly.terms()) {
        DiagElement m = DiagElement::unit(delta);
        for (auto g : w.letters) m = multiply(m, images[g]);
        acc += c * m;
    }
    return acc;
}

bool all_relations_vanish(const Presentation& p, const std::vector<DiagElement>& images,
                          const Rational& delta) {
    for (const NCPoly& r : p.relations)
        if (!eval_diag(p, r, images, delta).is_zero()) return false;
    return true;
}

bool roots_subset(const std::vector<Rational>& minpoly_roots_candidates, const Matrix& m) {
    // minimal_polynomial needs split spectrum; instead check that the
    // product of (m - r) over the candidate roots annihilates m's space.
    Matrix acc = Matrix::identity(m.rows());
    for (const Rational& r : minpoly_roots_candidates)
        acc = acc * (m - r * Matrix::identity(m.rows()));
    return acc.is_zero();
}

} // namespace

bool verify_tl_iso() {
    const Rational delta = rat(2);
    const DiagElement one = DiagElement::unit(delta);
    const DiagElement s1 = DiagElement::single(diagram_e1(), delta);
    const DiagElement s2 = DiagElement::single(diagram_e2(), delta);
    // Defining relations of TL_3(1) for the cup-cap generators.
    bool ok = multiply(s1, s1) == 2 * s1 && multiply(s2, s2) == 2 * s2;
    ok = ok && multiply(s1, multiply(s2, s1)) == s1;
    ok = ok && multiply(s2, multiply(s1, s2)) == s2;
    if (!ok) return false;

    const DiagElement A = 2 * one - s1;
    const DiagElement B = 2 * one - s2;
    const DiagElement AB = multiply(A, B), BA = multiply(B, A);
    const DiagElement G = AB + BA - 2 * A - 2 * B + 4 * one;
    const DiagElement C = G - rat(1, 4) * one;

    const RacahQuotientSpec q = build_quotient(Spin{1}, Spin{1}, Spin{1});
    const std::vector<DiagElement> images = {C, A, B}; // generator order C, A, B
    if (!all_relations_vanish(q.presentation, images, delta)) return false;

    const std::vector<BrauerDiagram> basis = enumerate_diagrams(true);
    RowSpan span(basis.size());
    for (const DiagElement* e : {&one, &A, &B, &AB, &BA})
        if (!span.add(vectorize(*e, basis))) return false;
    if (span.size() != 5) return false;

    const DiagElement s12 = multiply(s1, s2), s21 = multiply(s2, s1);
    if (!(G == s12 + s21 - 2 * s1 - 2 * s2 + 4 * one)) return false;
    if (!(multiply(G, s1) == multiply(s1, G)) || !(multiply(G, s2) == multiply(s2, G)))
        return false;
    return multiply(G - one, G - 4 * one).is_zero();
}

bool verify_brauer_iso() {
    const Rational delta = rat(3);
    const DiagElement one = DiagElement::unit(delta);
    const DiagElement s1 = DiagElement::single(diagram_s1(), delta);
    const DiagElement s2 = DiagElement::single(diagram_s2(), delta);
    const DiagElement e1 = DiagElement::single(diagram_e1(), delta);
    const DiagElement e2 = DiagElement::single(diagram_e2(), delta);

    const DiagElement A = 2 * (s1 - e1) + 4 * one;
    const DiagElement B = 2 * (s2 - e2) + 4 * one;
    auto mul = [](const DiagElement& x, const DiagElement& y) { return multiply(x, y); };
    const DiagElement A2 = mul(A, A), AB = mul(A, B), BA = mul(B, A);
    const DiagElement C = 6 * one - 7 * A - B + A2 + AB + BA +
                          rat(1, 4) * (mul(AB, A) - mul(A2, B) - mul(B, A2));
    const DiagElement C_stated =
        6 * one + 2 * (s1 - e1) + 2 * (s2 - e2) + 2 * mul(s1, mul(s2 - e2, s1));
    if (!(C == C_stated)) return false;

    const RacahQuotientSpec q = build_quotient(Spin{2}, Spin{2}, Spin{2});
    if (!all_relations_vanish(q.presentation, {C, A, B}, delta)) return false;

    // The 15 monomials that form a basis of the quotient must map to 15
    // independent elements.
    const DiagElement B2 = mul(B, B);
    const std::vector<DiagElement> words = {
        one,        A,          B,          A2,         B2,
        AB,         BA,         mul(A2, B), mul(A, B2), mul(AB, A),
        mul(BA, B), mul(B, A2), mul(mul(BA, B), A), mul(A2, B2), mul(AB, AB)};
    const std::vector<BrauerDiagram> basis = enumerate_diagrams(false);
    RowSpan span(basis.size());
    for (const DiagElement& w : words)
        if (!span.add(vectorize(w, basis))) return false;
    if (span.size() != 15) return false;

    // Round trip through the inverse map.
    const DiagElement inv_e1 = rat(1, 4) * mul(A - 2 * one, A - 6 * one);
    const DiagElement inv_s1 = rat(1, 4) * A2 - rat(3, 2) * A + one;
    if (!(inv_e1 == e1) || !(inv_s1 == s1)) return false;

    for (const DiagElement* g : {&s1, &s2, &e1, &e2})
        if (!(mul(C, *g) == mul(*g, C))) return false;
    const Matrix creg = left_regular_matrix(C, basis);
    return roots_subset({rat(0), rat(2), rat(6), rat(12)}, creg);
}

bool verify_btl_iso(Spin j) {
    if (j.twice < 2)
        throw std::invalid_argument("the one-boundary Temperley-Lieb model needs j >= 1");
    const TensorContext ctx = build_context(j, Spin{1}, Spin{1});
    const std::size_t n = ctx.dim();
    const Matrix I = Matrix::identity(n);
    const Rational twoj = rat(j.twice);
    const Rational z = rat(j.twice + 1) / twoj;
    const Matrix sig0 =
        rat(1) / twoj * ((j.value() + rat(1, 2)) * (j.value() + rat(3, 2)) * I - ctx.k12);
    const Matrix sig1 = 2 * I - ctx.k23;

    bool ok = sig0 * sig0 == z * sig0 && sig1 * sig1 == 2 * sig1;
    ok = ok && sig1 * sig0 * sig1 == sig1;
    if (!ok) return false;

    const Matrix s01 = sig0 * sig1, s10 = sig1 * sig0;
    RowSpan span(n * n);
    const std::vector<Matrix> words = {I, sig0, sig1, s01, s10, sig0 * s10};
    for (const Matrix& m : words)
        if (!span.add(vectorize(m))) return false;
    if (span.size() != 6) return false;

    // Abstract presentation certifies the same dimension.
    Presentation p;
    p.names = {"s0", "s1"};
    p.n_central = 0;
    const NCPoly S0 = NCPoly::generator(0), S1 = NCPoly::generator(1);
    p.relations = {p.product(S0, S0) - z * S0, p.product(S1, S1) - 2 * S1,
                   p.product(S1, p.product(S0, S1)) - S1};
    auto cert = certified_dim(p, 4, 6);
    if (!cert || cert->dim != 6) return false;

    const Matrix G = rat(1) / twoj * ((j.value() + 1) * (j.value() + 2) * I - ctx.k123);
    return G == z * sig1 + 2 * sig0 - s01 - s10;
}

bool verify_bB_iso() {
    const TensorContext ctx = build_context(Spin{1}, Spin{2}, Spin{2});
    const std::size_t n = ctx.dim();
    const Matrix I = Matrix::identity(n);
    const Matrix A = ctx.k12 + rat(1, 4) * I;
    const Matrix& B = ctx.k23;
    const Matrix e0 = 2 * I - rat(1, 2) * A;
    const Matrix e1 = rat(1, 4) * ((B - 2 * I) * (B - 6 * I));
    const Matrix s1 = rat(1, 4) * (B * B) - rat(3, 2) * B + I;

    const Matrix se = s1 - e1;
    bool ok = e0 * e0 == rat(3, 2) * e0 && s1 * s1 == I && e1 * e1 == 3 * e1;
    ok = ok && s1 * e1 == e1 && e1 * s1 == e1;
    ok = ok && e1 * e0 * s1 == e1 - e1 * e0 && s1 * e0 * e1 == e1 - e0 * e1;
    const Matrix anti = e0 * se + se * e0;
    ok = ok && 4 * (e0 * s1 * e0) ==
                   I + 2 * e0 + e1 - s1 + 2 * anti - 2 * (s1 * e0 * s1);
    ok = ok && 4 * (e0 * e1 * e0) ==
                   rat(-1) * I + 2 * e0 + s1 - e1 - 2 * anti + 2 * (s1 * e0 * s1);
    ok = ok && e1 * e0 * e1 == rat(3, 2) * e1;
    if (!ok) return false;

    const std::vector<Matrix> words = {I,       e0,      e1,      s1,          e0 * e1,
                                       e1 * e0, e0 * s1, s1 * e0, s1 * e0 * s1};
    RowSpan span(n * n);
    for (const Matrix& m : words)
        if (!span.add(vectorize(m))) return false;
    if (span.size() != 9) return false;

    // Abstract presentation certifies dimension 9.
    Presentation p;
    p.names = {"e0", "e1", "s1"};
    p.n_central = 0;
    const NCPoly E0 = NCPoly::generator(0), E1 = NCPoly::generator(1),
                 X = NCPoly::generator(2);
    auto mul = [&](const NCPoly& a, const NCPoly& b) { return p.product(a, b); };
    const NCPoly one = NCPoly::constant(rat(1));
    const NCPoly sme = X - E1;
    p.relations = {mul(E0, E0) - rat(3, 2) * E0,
                   mul(X, X) - one,
                   mul(E1, E1) - 3 * E1,
                   mul(X, E1) - E1,
                   mul(E1, X) - E1,
                   mul(E1, mul(E0, X)) - E1 + mul(E1, E0),
                   mul(X, mul(E0, E1)) - E1 + mul(E0, E1),
                   4 * mul(E0, mul(X, E0)) - one - 2 * E0 - E1 + X -
                       2 * (mul(E0, sme) + mul(sme, E0)) + 2 * mul(X, mul(E0, X)),
                   4 * mul(E0, mul(E1, E0)) + one - 2 * E0 - X + E1 +
                       2 * (mul(E0, sme) + mul(sme, E0)) - 2 * mul(X, mul(E0, X))};
    auto cert = certified_dim(p, 4, 6);
    if (!cert || cert->dim != 9) return false;

    const Matrix G = 7 * I - 2 * e0 + 2 * se - 2 * (s1 * e0 * s1);
    for (const Matrix* m : {&e0, &e1, &s1})
        if (!(G * *m == *m * G)) return false;
    if (!(G == ctx.k123 + rat(1, 4) * I)) return false;
    Matrix acc = (G - I) * (G - 4 * I) * (G - 9 * I);
    return acc.is_zero();
}

} // namespace rv
