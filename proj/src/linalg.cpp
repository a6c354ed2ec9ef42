#include "linalg.hpp"

#include <cassert>
#include <deque>

namespace rv {

std::vector<Rational> RowSpan::reduce(std::vector<Rational>& v) const {
    std::vector<Rational> coords;
    if (track_) coords.assign(accepted_, Rational(0));
    for (const Row& r : rows_) {
        const Rational c = v[r.pivot];
        if (c == 0) continue;
        for (std::size_t j = r.pivot; j < width_; ++j)
            if (r.v[j] != 0) v[j] -= c * r.v[j];
        if (track_)
            for (std::size_t k = 0; k < r.coords.size(); ++k)
                if (r.coords[k] != 0) coords[k] += c * r.coords[k];
    }
    return coords;
}

bool RowSpan::add(const std::vector<Rational>& vin) {
    assert(vin.size() == width_);
    std::vector<Rational> v = vin;
    std::vector<Rational> coords = reduce(v);
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    ++accepted_;
    Rational inv = 1 / v[p];
    for (std::size_t j = p; j < width_; ++j)
        if (v[j] != 0) v[j] *= inv;
    if (track_) {
        coords.resize(accepted_, Rational(0));
        // row = (vin - sum coords_k * accepted_k) / v[p]; store as the
        // expansion of the reduced row over accepted vectors.
        for (auto& c : coords) c = -c * inv;
        coords[accepted_ - 1] = inv;
    }
    // Back-reduce existing rows for a canonical reduced echelon form.
    for (Row& r : rows_) {
        const Rational c = r.v[p];
        if (c == 0) continue;
        for (std::size_t j = p; j < width_; ++j)
            if (v[j] != 0) r.v[j] -= c * v[j];
        if (track_) {
            r.coords.resize(accepted_, Rational(0));
            for (std::size_t k = 0; k < accepted_; ++k)
                if (coords[k] != 0) r.coords[k] -= c * coords[k];
        }
    }
    Row row{p, std::move(v), std::move(coords)};
    // Keep rows ordered by pivot so reduce() is a single sweep.
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < p) ++it;
    rows_.insert(it, std::move(row));
    return true;
}

bool RowSpan::contains(const std::vector<Rational>& vin, std::vector<Rational>* coords) const {
    assert(vin.size() == width_);
    std::vector<Rational> v = vin;
    std::vector<Rational> c = reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    if (coords) {
        assert(track_);
        c.resize(accepted_, Rational(0));
        *coords = std::move(c);
    }
    return true;
}

std::size_t mat_rank(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    // Clear denominators row by row.
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j)
            a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<Rational> vectorize(const Matrix& m) { return m.entries(); }

std::vector<Rational> minimal_polynomial(const Matrix& m) {
    assert(m.is_square());
    const std::size_t n = m.rows();
    RowSpan span(n * n, /*track_coords=*/true);
    Matrix power = Matrix::identity(n);
    while (true) {
        std::vector<Rational> coords;
        if (!span.contains(vectorize(power), &coords)) {
            span.add(vectorize(power));
            power = power * m;
            continue;
        }
        // power = sum coords_i * M^i, so x^k - sum coords_i x^i kills M.
        std::vector<Rational> poly(span.size() + 1);
        for (std::size_t i = 0; i < coords.size(); ++i) poly[i] = -coords[i];
        poly[span.size()] = 1;
        return poly;
    }
}

std::vector<Matrix> span_closure(const std::vector<Matrix>& gens) {
    assert(!gens.empty());
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens) assert(g.is_square() && g.rows() == n);
    RowSpan span(n * n);
    std::vector<Matrix> basis;
    // The algebras of interest are unital: seed with the identity.
    basis.push_back(Matrix::identity(n));
    span.add(vectorize(basis.front()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const Matrix& g : gens) {
            Matrix prod = basis[i] * g;
            if (span.add(vectorize(prod))) basis.push_back(std::move(prod));
        }
    }
    return basis;
}

} // namespace rv
