#pragma once

#include <optional>
#include <vector>

#include "frobalg/matrix.hpp"

namespace frobalg {

struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;  // linearly independent, possibly empty

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vec& v) const;
};

/// Quotient of Q^ambient by the span of a set of relation vectors.
///
/// projection : ambient -> quotient, kernel exactly `killed`
/// section    : quotient -> ambient, projection*section = I
///
/// Built from the reduced row echelon form of the relations, so the result
/// is canonical for the relation span: the surviving coordinates are the
/// non-pivot ones.
struct QuotientSpace {
    std::size_t ambient_dim = 0;
    Subspace killed;
    RatMatrix projection;  // quotient_dim x ambient_dim
    RatMatrix section;     // ambient_dim x quotient_dim

    std::size_t dim() const { return projection.rows(); }
};

QuotientSpace quotient_by(std::size_t ambient_dim, const std::vector<Vec>& gens);

/// Factors f : ambient -> W through the quotient: returns fbar with
/// fbar * projection = f, or nullopt when f does not kill the relations.
std::optional<RatMatrix> factor_through_quotient(const RatMatrix& f, const QuotientSpace& q);

}  // namespace frobalg
