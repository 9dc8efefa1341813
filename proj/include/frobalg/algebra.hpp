#pragma once

#include <string>
#include <vector>

#include "frobalg/matrix.hpp"
#include "frobalg/report.hpp"

namespace frobalg {

/// Finite-dimensional associative unital algebra over Q, given by structure
/// constants. `mult` is the multiplication as a matrix A(x)A -> A in the
/// fixed tensor basis ordering: column index (i*dim + j) holds the
/// coordinates of e_i * e_j.
struct Algebra {
    std::size_t dim = 0;
    RatMatrix mult;  // dim x dim^2
    Vec unit;        // coordinates of 1
    std::vector<std::string> labels;  // cosmetic, may be empty
    std::string name;

    Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return mult.at(k, i * dim + j);
    }

    /// Product of two coordinate vectors.
    Vec product(const Vec& a, const Vec& b) const;

    /// Matrix of x |-> a*x.
    RatMatrix left_mult(const Vec& a) const;
    /// Matrix of x |-> x*a.
    RatMatrix right_mult(const Vec& a) const;

    Vec basis_vec(std::size_t i) const {
        Vec v(dim);
        v[i] = Rat(1);
        return v;
    }

    std::string label(std::size_t i) const {
        return i < labels.size() ? labels[i] : "e" + std::to_string(i);
    }
};

struct AlgebraMorphism {
    Algebra source;
    Algebra target;
    RatMatrix matrix;  // target.dim x source.dim
};

/// Bilinear form B(a, b) = a^T * matrix * b on an algebra.
struct BilinearForm {
    Algebra algebra;
    RatMatrix matrix;  // dim x dim

    Rat operator()(const Vec& a, const Vec& b) const;
    /// B(ab, c) = B(a, bc) for all basis triples.
    bool is_associative() const;
    bool is_nondegenerate() const;
};

/// Checks associativity and the two-sided unit law; every violated instance
/// is listed by basis indices.
ValidationReport validate_algebra(const Algebra& a, std::size_t max_violations = 16);

/// Checks multiplicativity and unitality of f.
ValidationReport validate_morphism(const AlgebraMorphism& f, std::size_t max_violations = 16);

// Builtin library. Every builtin passes validate_algebra.
Algebra field_q();
Algebra group_algebra_cyclic(std::size_t n);
Algebra matrix_algebra(std::size_t n);
Algebra truncated_poly(std::size_t n);  // Q[x]/(x^n)
Algebra upper_triangular2();            // 2x2 upper triangular matrices
Algebra builtin(const std::string& name, const std::vector<std::size_t>& params);

/// Componentwise product structure on A(x)B with unit 1(x)1.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// Direct product A x B (componentwise on the direct sum of the spaces).
Algebra direct_product(const Algebra& a, const Algebra& b);
Algebra opposite(const Algebra& a);

AlgebraMorphism identity_morphism(const Algebra& a);
/// Unit embedding Q -> A.
AlgebraMorphism unit_embedding(const Algebra& a);
/// Diagonal embedding A -> A x A.
AlgebraMorphism diagonal_embedding(const Algebra& a);

bool is_commutative(const Algebra& a);

}  // namespace frobalg
