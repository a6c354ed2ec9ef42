#ifndef RV_LINALG_HPP
#define RV_LINALG_HPP

#include "matrix.hpp"

#include <vector>

namespace rv {

// Incrementally maintained row-reduced span of rational vectors.
// Pivot = first nonzero coordinate, rows kept monic and back-reduced,
// so the stored basis is deterministic.
class RowSpan {
public:
    explicit RowSpan(std::size_t width, bool track_coords = false)
        : width_(width), track_(track_coords) {}

    std::size_t width() const { return width_; }
    std::size_t size() const { return rows_.size(); }

    // Adds v to the span.  Returns true if v was independent of the
    // current span (v is then recorded as a new basis vector).
    bool add(const std::vector<Rational>& v);

    // True iff v lies in the current span.  With coordinate tracking
    // enabled, *coords receives the expansion of v over the vectors
    // previously accepted by add(), in acceptance order.
    bool contains(const std::vector<Rational>& v, std::vector<Rational>* coords = nullptr) const;

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rational> v;      // reduced, monic at pivot
        std::vector<Rational> coords; // expansion over accepted vectors
    };

    // Reduces v in place; returns the coordinates over accepted vectors
    // consumed by the reduction (only when tracking).
    std::vector<Rational> reduce(std::vector<Rational>& v) const;

    std::size_t width_;
    bool track_;
    std::size_t accepted_ = 0;
    std::vector<Row> rows_;
};

// Rank over the rationals via fraction-free (Bareiss) elimination on a
// denominator-cleared integer copy.
std::size_t mat_rank(const Matrix& m);

// Monic minimal polynomial of a square matrix, constant term first.
// Found by incremental linear dependence of the powers I, M, M^2, ...
std::vector<Rational> minimal_polynomial(const Matrix& m);

// Basis of the unital matrix algebra generated by gens (all square, same
// size), via closure of a row-reduced span under right multiplication by
// the generators.  The result size is the algebra dimension.
std::vector<Matrix> span_closure(const std::vector<Matrix>& gens);

// Row-major vectorization.
std::vector<Rational> vectorize(const Matrix& m);

} // namespace rv

#endif
