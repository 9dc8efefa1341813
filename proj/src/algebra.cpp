#include "frobalg/algebra.hpp"

#include <stdexcept>

namespace frobalg {

Vec Algebra::product(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim) throw std::invalid_argument("Algebra::product: size mismatch");
    Vec ab(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            if (!b[j].is_zero()) ab[i * dim + j] = a[i] * b[j];
    }
    return mult.apply(ab);
}

RatMatrix Algebra::left_mult(const Vec& a) const {
    RatMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = product(a, basis_vec(j));
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

RatMatrix Algebra::right_mult(const Vec& a) const {
    RatMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = product(basis_vec(j), a);
        for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Rat BilinearForm::operator()(const Vec& a, const Vec& b) const {
    Vec mb = matrix.apply(b);
    Rat acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * mb[i];
    return acc;
}

bool BilinearForm::is_associative() const {
    const std::size_t d = algebra.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec ij = algebra.product(algebra.basis_vec(i), algebra.basis_vec(j));
                Vec jk = algebra.product(algebra.basis_vec(j), algebra.basis_vec(k));
                if ((*this)(ij, algebra.basis_vec(k)) != (*this)(algebra.basis_vec(i), jk)) return false;
            }
    return true;
}

bool BilinearForm::is_nondegenerate() const { return rank(matrix) == algebra.dim; }

ValidationReport validate_algebra(const Algebra& a, std::size_t max_violations) {
    ValidationReport rep;
    const std::size_t d = a.dim;
    if (a.mult.rows() != d || a.mult.cols() != d * d) {
        rep.fail("multiplication tensor has wrong shape");
        return rep;
    }
    if (a.unit.size() != d) {
        rep.fail("unit vector has wrong length");
        return rep;
    }
    // associativity as a matrix identity m(m(x)id) = m(id(x)m), reported per
    // failing (i,j,k,q) instance
    RatMatrix id = RatMatrix::identity(d);
    RatMatrix lhs = a.mult * kron(a.mult, id);
    RatMatrix rhs = a.mult * kron(id, a.mult);
    for (std::size_t q = 0; q < d && rep.violations().size() < max_violations; ++q)
        for (std::size_t c = 0; c < d * d * d && rep.violations().size() < max_violations; ++c)
            if (lhs.at(q, c) != rhs.at(q, c)) {
                std::size_t i = c / (d * d), j = (c / d) % d, k = c % d;
                rep.fail("associativity fails at (i,j,k,q)=(" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(q) + ")");
            }
    if (!a.left_mult(a.unit).is_identity()) rep.fail("unit is not a left identity");
    if (!a.right_mult(a.unit).is_identity()) rep.fail("unit is not a right identity");
    return rep;
}

ValidationReport validate_morphism(const AlgebraMorphism& f, std::size_t max_violations) {
    ValidationReport rep;
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim)
        throw std::invalid_argument("validate_morphism: matrix shape mismatch");
    // f(xy) = f(x)f(y):  f . m_src = m_tgt . (f (x) f)
    RatMatrix lhs = f.matrix * f.source.mult;
    RatMatrix rhs = f.target.mult * kron(f.matrix, f.matrix);
    for (std::size_t k = 0; k < lhs.rows() && rep.violations().size() < max_violations; ++k)
        for (std::size_t c = 0; c < lhs.cols() && rep.violations().size() < max_violations; ++c)
            if (lhs.at(k, c) != rhs.at(k, c)) {
                std::size_t i = c / f.source.dim, j = c % f.source.dim;
                rep.fail("multiplicativity fails on (e" + std::to_string(i) + ", e" + std::to_string(j) + ")");
            }
    if (f.matrix.apply(f.source.unit) != f.target.unit) rep.fail("unit is not preserved");
    return rep;
}

Algebra field_q() {
    Algebra a;
    a.dim = 1;
    a.mult = RatMatrix(1, 1);
    a.mult.at(0, 0) = Rat(1);
    a.unit = {Rat(1)};
    a.labels = {"1"};
    a.name = "Q";
    return a;
}

Algebra group_algebra_cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("group_algebra_cyclic: order must be positive");
    Algebra a;
    a.dim = n;
    a.mult = RatMatrix(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.mult.at((i + j) % n, i * n + j) = Rat(1);
    a.unit = Vec(n);
    a.unit[0] = Rat(1);
    for (std::size_t i = 0; i < n; ++i)
        a.labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    a.name = "Q[C" + std::to_string(n) + "]";
    return a;
}

Algebra matrix_algebra(std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix_algebra: size must be positive");
    Algebra a;
    a.dim = n * n;
    a.mult = RatMatrix(a.dim, a.dim * a.dim);
    auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
    // E_{rc} E_{c'd} = delta_{c c'} E_{rd}
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d)
                a.mult.at(idx(r, d), idx(r, c) * a.dim + idx(c, d)) = Rat(1);
    a.unit = Vec(a.dim);
    for (std::size_t r = 0; r < n; ++r) a.unit[idx(r, r)] = Rat(1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a.labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    a.name = "M" + std::to_string(n) + "(Q)";
    return a;
}

Algebra truncated_poly(std::size_t n) {
    if (n == 0) throw std::invalid_argument("truncated_poly: need n >= 1");
    Algebra a;
    a.dim = n;
    a.mult = RatMatrix(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) a.mult.at(i + j, i * n + j) = Rat(1);
    a.unit = Vec(n);
    a.unit[0] = Rat(1);
    for (std::size_t i = 0; i < n; ++i)
        a.labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    a.name = "Q[x]/(x^" + std::to_string(n) + ")";
    return a;
}

Algebra upper_triangular2() {
    // basis E11, E12, E22 with the matrix-unit table
    Algebra a;
    a.dim = 3;
    a.mult = RatMatrix(3, 9);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { a.mult.at(k, i * 3 + j) = Rat(1); };
    set(0, 0, 0);  // E11 E11 = E11
    set(0, 1, 1);  // E11 E12 = E12
    set(1, 2, 1);  // E12 E22 = E12
    set(2, 2, 2);  // E22 E22 = E22
    a.unit = {Rat(1), Rat(0), Rat(1)};
    a.labels = {"E11", "E12", "E22"};
    a.name = "T2(Q)";
    return a;
}

Algebra builtin(const std::string& name, const std::vector<std::size_t>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("builtin '" + name + "': expected " + std::to_string(k) + " parameter(s)");
    };
    if (name == "field") { want(0); return field_q(); }
    if (name == "group_algebra") { want(1); return group_algebra_cyclic(params[0]); }
    if (name == "matrix_algebra") { want(1); return matrix_algebra(params[0]); }
    if (name == "truncated_poly") { want(1); return truncated_poly(params[0]); }
    if (name == "upper_triangular") {
        want(1);
        if (params[0] != 2) throw std::invalid_argument("builtin upper_triangular: only size 2 is provided");
        return upper_triangular2();
    }
    throw std::invalid_argument("unknown builtin algebra '" + name + "'");
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    Algebra t;
    t.dim = a.dim * b.dim;
    t.mult = RatMatrix(t.dim, t.dim * t.dim);
    for (std::size_t i1 = 0; i1 < a.dim; ++i1)
        for (std::size_t i2 = 0; i2 < b.dim; ++i2)
            for (std::size_t j1 = 0; j1 < a.dim; ++j1)
                for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
                    std::size_t col = (i1 * b.dim + i2) * t.dim + (j1 * b.dim + j2);
                    for (std::size_t k1 = 0; k1 < a.dim; ++k1) {
                        Rat ca = a.structure_constant(i1, j1, k1);
                        if (ca.is_zero()) continue;
                        for (std::size_t k2 = 0; k2 < b.dim; ++k2) {
                            Rat cb = b.structure_constant(i2, j2, k2);
                            if (!cb.is_zero()) t.mult.at(k1 * b.dim + k2, col) = ca * cb;
                        }
                    }
                }
    t.unit = Vec(t.dim);
    for (std::size_t k1 = 0; k1 < a.dim; ++k1)
        for (std::size_t k2 = 0; k2 < b.dim; ++k2) t.unit[k1 * b.dim + k2] = a.unit[k1] * b.unit[k2];
    for (std::size_t k1 = 0; k1 < a.dim; ++k1)
        for (std::size_t k2 = 0; k2 < b.dim; ++k2) t.labels.push_back(a.label(k1) + "(x)" + b.label(k2));
    t.name = a.name + "(x)" + b.name;
    return t;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
    Algebra p;
    p.dim = a.dim + b.dim;
    p.mult = RatMatrix(p.dim, p.dim * p.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                p.mult.at(k, i * p.dim + j) = a.structure_constant(i, j, k);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                p.mult.at(a.dim + k, (a.dim + i) * p.dim + (a.dim + j)) = b.structure_constant(i, j, k);
    p.unit = Vec(p.dim);
    for (std::size_t i = 0; i < a.dim; ++i) p.unit[i] = a.unit[i];
    for (std::size_t i = 0; i < b.dim; ++i) p.unit[a.dim + i] = b.unit[i];
    for (std::size_t i = 0; i < a.dim; ++i) p.labels.push_back("(" + a.label(i) + ",0)");
    for (std::size_t i = 0; i < b.dim; ++i) p.labels.push_back("(0," + b.label(i) + ")");
    p.name = a.name + " x " + b.name;
    return p;
}

Algebra opposite(const Algebra& a) {
    Algebra o = a;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                o.mult.at(k, i * a.dim + j) = a.structure_constant(j, i, k);
    o.name = a.name + "^op";
    return o;
}

AlgebraMorphism identity_morphism(const Algebra& a) {
    return {a, a, RatMatrix::identity(a.dim)};
}

AlgebraMorphism unit_embedding(const Algebra& a) {
    AlgebraMorphism f{field_q(), a, RatMatrix(a.dim, 1)};
    for (std::size_t i = 0; i < a.dim; ++i) f.matrix.at(i, 0) = a.unit[i];
    return f;
}

AlgebraMorphism diagonal_embedding(const Algebra& a) {
    Algebra p = direct_product(a, a);
    AlgebraMorphism f{a, p, RatMatrix(p.dim, a.dim)};
    for (std::size_t i = 0; i < a.dim; ++i) {
        f.matrix.at(i, i) = Rat(1);
        f.matrix.at(a.dim + i, i) = Rat(1);
    }
    return f;
}

bool is_commutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.structure_constant(i, j, k) != a.structure_constant(j, i, k)) return false;
    return true;
}

}  // namespace frobalg
