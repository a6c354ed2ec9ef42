#include "ncalg.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace rv {

Word operator*(const Word& a, const Word& b) {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

NCPoly NCPoly::constant(const Rational& c) {
    NCPoly p;
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::generator(std::uint8_t g) {
    NCPoly p;
    p.add_term(Word{{g}}, 1);
    return p;
}

NCPoly NCPoly::monomial(Word w, const Rational& c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

std::size_t NCPoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly p;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) p.add_term(wa * wb, ca * cb);
    return p;
}

Word Presentation::normalize(Word w) const {
    if (n_central == 0) return w;
    std::vector<std::uint8_t> central, rest;
    for (auto g : w.letters)
        (g < n_central ? central : rest).push_back(g);
    if (central.empty()) return w;
    std::sort(central.begin(), central.end());
    central.insert(central.end(), rest.begin(), rest.end());
    return Word{std::move(central)};
}

NCPoly Presentation::normalize(const NCPoly& p) const {
    if (n_central == 0) return p;
    NCPoly q;
    for (const auto& [w, c] : p.terms()) q.add_term(normalize(w), c);
    return q;
}

NCPoly Presentation::product(const NCPoly& a, const NCPoly& b) const {
    return normalize(a * b);
}

NCPoly Presentation::power(const NCPoly& a, unsigned k) const {
    NCPoly acc = NCPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) acc = product(acc, a);
    return acc;
}

std::string Presentation::format(const NCPoly& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || w.is_unit()) os << to_string(a);
        for (auto g : w.letters) os << names[g];
    }
    return os.str();
}

NCPoly char_poly_relation(const Presentation& p, const NCPoly& base,
                          const std::vector<Rational>& cs) {
    NCPoly acc = NCPoly::constant(1);
    for (const Rational& c : cs) acc = p.product(acc, base - NCPoly::constant(c));
    return acc;
}

namespace {

void enumerate_words(const Presentation& p, unsigned maxlen, std::vector<Word>& out) {
    // Normalized words: a sorted central prefix followed by an arbitrary
    // word over the non-central generators.
    std::vector<std::uint8_t> cur;
    // Generate non-central suffixes by DFS, for every central prefix.
    std::vector<std::vector<std::uint8_t>> prefixes;
    std::vector<std::uint8_t> pre;
    auto gen_prefixes = [&](auto&& self, std::uint8_t next) -> void {
        prefixes.push_back(pre);
        if (pre.size() == maxlen) return;
        for (std::uint8_t g = next; g < p.n_central; ++g) {
            pre.push_back(g);
            self(self, g);
            pre.pop_back();
        }
    };
    gen_prefixes(gen_prefixes, 0);
    for (const auto& pref : prefixes) {
        cur = pref;
        auto gen_suffix = [&](auto&& self) -> void {
            out.push_back(Word{cur});
            if (cur.size() == maxlen) return;
            for (std::uint8_t g = p.n_central; g < p.n_gens(); ++g) {
                cur.push_back(g);
                self(self);
                cur.pop_back();
            }
        };
        gen_suffix(gen_suffix);
    }
    std::sort(out.begin(), out.end());
}

} // namespace

RelationTable::RelationTable(const Presentation& p, unsigned L) : pres_(p), L_(L) {
    enumerate_words(pres_, L_, all_words_);
    // Only words over non-central generators are needed as left/right
    // multipliers: central cofactors are separate (commuting) factors.
    std::vector<Word> frames;
    {
        Presentation q;
        q.names.assign(pres_.names.begin() + pres_.n_central, pres_.names.end());
        q.n_central = 0;
        enumerate_words(q, L_, frames);
        for (Word& w : frames)
            for (auto& g : w.letters) g = static_cast<std::uint8_t>(g + pres_.n_central);
    }
    std::vector<Word> central_monomials;
    {
        Presentation q;
        q.names.assign(pres_.names.begin(), pres_.names.begin() + pres_.n_central);
        q.n_central = static_cast<std::size_t>(pres_.n_central);
        enumerate_words(q, L_, central_monomials);
    }
    // Rows sorted by total degree keep the echelon small early.
    struct Inst {
        unsigned deg;
        std::size_t rel, x, y, c;
    };
    std::vector<Inst> insts;
    for (std::size_t r = 0; r < pres_.relations.size(); ++r) {
        const unsigned dr = static_cast<unsigned>(pres_.relations[r].degree());
        for (std::size_t xi = 0; xi < frames.size(); ++xi) {
            if (frames[xi].degree() + dr > L_) break;
            for (std::size_t yi = 0; yi < frames.size(); ++yi) {
                const unsigned base = static_cast<unsigned>(frames[xi].degree() + frames[yi].degree()) + dr;
                if (base > L_) break;
                for (std::size_t ci = 0; ci < central_monomials.size(); ++ci) {
                    const unsigned deg = base + static_cast<unsigned>(central_monomials[ci].degree());
                    if (deg > L_) break;
                    insts.push_back({deg, r, xi, yi, ci});
                }
            }
        }
    }
    std::stable_sort(insts.begin(), insts.end(),
                     [](const Inst& a, const Inst& b) { return a.deg < b.deg; });
    for (const Inst& in : insts) {
        NCPoly row;
        for (const auto& [w, c] : pres_.relations[in.rel].terms()) {
            Word full = central_monomials[in.c] * frames[in.x] * w * frames[in.y];
            row.add_term(pres_.normalize(full), c);
        }
        insert(std::move(row));
    }
}

void RelationTable::insert(NCPoly row) {
    row = reduce(std::move(row));
    if (row.is_zero()) return;
    const Word lead = row.terms().rbegin()->first;
    const Rational inv = 1 / row.terms().rbegin()->second;
    row *= inv;
    rows_.emplace(lead, std::move(row));
}

NCPoly RelationTable::reduce(NCPoly p) const {
    while (!p.is_zero()) {
        // Largest reducible term.
        const NCPoly* row = nullptr;
        Rational coeff;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            auto rit = rows_.find(it->first);
            if (rit != rows_.end()) {
                row = &rit->second;
                coeff = it->second;
                break;
            }
        }
        if (!row) break;
        p -= coeff * *row;
    }
    return p;
}

std::size_t RelationTable::truncated_dim() const { return all_words_.size() - rows_.size(); }

std::vector<Word> RelationTable::irreducible_words() const {
    std::vector<Word> out;
    for (const Word& w : all_words_)
        if (!rows_.count(w)) out.push_back(w);
    return out;
}

bool RelationTable::closed() const {
    for (const Word& w : all_words_)
        if (w.degree() == L_ && !rows_.count(w)) return false;
    return true;
}

std::size_t truncated_dim(const Presentation& p, unsigned L) {
    return RelationTable(p, L).truncated_dim();
}

std::optional<DimCertificate> certified_dim(const Presentation& p, unsigned Lmin, unsigned Lmax) {
    // Every closed level yields a valid bound; deeper tables can only
    // reduce more words, so keep the tightest one found.
    std::optional<DimCertificate> best;
    for (unsigned L = Lmin; L <= Lmax; ++L) {
        RelationTable table(p, L);
        if (!table.closed()) continue;
        if (!best || table.truncated_dim() < best->dim)
            best = DimCertificate{table.truncated_dim(), L, table.irreducible_words()};
    }
    return best;
}

namespace {

// Coordinates of a reduced polynomial over the irreducible words.
std::vector<Rational> coords_over(const std::vector<Word>& irr, const NCPoly& p) {
    std::vector<Rational> v(irr.size());
    for (const auto& [w, c] : p.terms()) {
        auto it = std::lower_bound(irr.begin(), irr.end(), w);
        assert(it != irr.end() && *it == w);
        v[static_cast<std::size_t>(it - irr.begin())] = c;
    }
    return v;
}

} // namespace

bool certify_closure(const Presentation& p, const std::vector<Word>& basis, unsigned L) {
    RelationTable table(p, L);
    const std::vector<Word> irr = table.irreducible_words();
    RowSpan span(irr.size());
    for (const Word& w : basis) {
        if (w.degree() >= L) return false;
        span.add(coords_over(irr, table.reduce(NCPoly::monomial(p.normalize(w)))));
    }
    for (std::uint8_t g = 0; g < p.n_gens(); ++g)
        for (const Word& w : basis) {
            Word gw = p.normalize(Word{{g}} * w);
            NCPoly nf = table.reduce(NCPoly::monomial(gw));
            if (!nf.is_zero() && nf.degree() >= L) return false;
            if (!span.contains(coords_over(irr, nf))) return false;
        }
    return true;
}

std::vector<std::vector<std::vector<Rational>>>
structure_constants(const Presentation& p, const std::vector<Word>& basis, unsigned L) {
    RelationTable table(p, L);
    const std::vector<Word> irr = table.irreducible_words();
    RowSpan span(irr.size(), /*track_coords=*/true);
    for (const Word& w : basis)
        if (!span.add(coords_over(irr, table.reduce(NCPoly::monomial(p.normalize(w))))))
            throw std::runtime_error("structure_constants: basis not linearly independent");
    const std::size_t n = basis.size();
    std::vector<std::vector<std::vector<Rational>>> table3(
        n, std::vector<std::vector<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Word prod = p.normalize(basis[i] * basis[j]);
            NCPoly nf = prod.degree() <= L ? table.reduce(NCPoly::monomial(prod)) : NCPoly();
            std::vector<Rational> coords;
            if (prod.degree() > L || !span.contains(coords_over(irr, nf), &coords))
                throw std::runtime_error("structure_constants: product does not reduce "
                                         "into the basis span; raise L");
            table3[i][j] = std::move(coords);
        }
    return table3;
}

HomCheck check_homomorphism(const Presentation& src, const std::vector<NCPoly>& images,
                            const Presentation& dst, unsigned L) {
    assert(images.size() == src.n_gens());
    RelationTable table(dst, L);
    auto substitute = [&](const NCPoly& rel) {
        NCPoly out;
        for (const auto& [w, c] : rel.terms()) {
            NCPoly acc = NCPoly::constant(c);
            for (auto g : w.letters) acc = dst.product(acc, images[g]);
            out += acc;
        }
        return out;
    };
    std::vector<NCPoly> to_check;
    for (const NCPoly& rel : src.relations) to_check.push_back(substitute(rel));
    // Central src generators must have central images.
    for (std::uint8_t c = 0; c < src.n_central; ++c)
        for (std::uint8_t g = 0; g < src.n_gens(); ++g) {
            if (g == c) continue;
            to_check.push_back(dst.product(images[c], images[g]) -
                               dst.product(images[g], images[c]));
        }
    bool inconclusive = false;
    for (const NCPoly& q : to_check) {
        if (q.degree() > L) {
            inconclusive = true;
            continue;
        }
        if (!table.reduce(q).is_zero()) return HomCheck::failed;
    }
    return inconclusive ? HomCheck::inconclusive : HomCheck::verified;
}

} // namespace rv
