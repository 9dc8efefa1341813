#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobalg/algebra.hpp"

using namespace frobalg;

namespace {

// Independent associativity oracle: triple products by explicit structure
// constant sums, not through the matrix identity used by the validator.
bool assoc_by_sums(const Algebra& a) {
    const std::size_t d = a.dim;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t q = 0; q < d; ++q) {
                    Rat lhs, rhs;
                    for (std::size_t p = 0; p < d; ++p) {
                        lhs += a.structure_constant(i, j, p) * a.structure_constant(p, k, q);
                        rhs += a.structure_constant(j, k, p) * a.structure_constant(i, p, q);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

std::vector<Algebra> suite() {
    return {field_q(),        group_algebra_cyclic(2), group_algebra_cyclic(3),
            group_algebra_cyclic(4), matrix_algebra(2),  truncated_poly(2),
            truncated_poly(3), upper_triangular2()};
}

}  // namespace

TEST_CASE("every builtin passes validation and the independent oracle") {
    for (const auto& a : suite()) {
        CAPTURE(a.name);
        CHECK(validate_algebra(a).ok());
        CHECK(assoc_by_sums(a));
        CHECK(a.left_mult(a.unit).is_identity());
        CHECK(a.right_mult(a.unit).is_identity());
    }
}

TEST_CASE("specific tables") {
    Algebra q = field_q();
    CHECK(q.dim == 1);
    CHECK(q.product({Rat(1)}, {Rat(1)}) == Vec{Rat(1)});

    Algebra c2 = group_algebra_cyclic(2);
    CHECK(c2.dim == 2);
    CHECK(c2.product(c2.basis_vec(1), c2.basis_vec(1)) == c2.basis_vec(0));  // g^2 = 1

    Algebra t2 = upper_triangular2();
    CHECK(t2.dim == 3);
    CHECK(t2.product(t2.basis_vec(0), t2.basis_vec(1)) == t2.basis_vec(1));  // E11 E12 = E12
    CHECK(t2.product(t2.basis_vec(1), t2.basis_vec(2)) == t2.basis_vec(1));  // E12 E22 = E12
    CHECK(is_zero(t2.product(t2.basis_vec(1), t2.basis_vec(0))));            // E12 E11 = 0
    CHECK(is_zero(t2.product(t2.basis_vec(1), t2.basis_vec(1))));

    CHECK_THROWS(builtin("no_such_algebra", {}));
    CHECK_THROWS(builtin("group_algebra", {}));
    CHECK_THROWS(builtin("upper_triangular", {3}));
}

TEST_CASE("a corrupted table is rejected with the failing instance named") {
    Algebra broken = group_algebra_cyclic(2);
    broken.mult.at(0, 0) = Rat(2);  // 1*1 = 2
    auto rep = validate_algebra(broken);
    CHECK(!rep.ok());
}

TEST_CASE("morphism validation") {
    Algebra c2 = group_algebra_cyclic(2);
    CHECK(validate_morphism(identity_morphism(c2)).ok());

    Algebra m2 = matrix_algebra(2);
    CHECK(validate_morphism(unit_embedding(m2)).ok());

    // g |-> -g extends to the swap automorphism of Q x Q
    AlgebraMorphism swap{c2, c2, RatMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}};
    CHECK(validate_morphism(swap).ok());

    // negation is not a morphism: fails on products of units and on the unit
    AlgebraMorphism neg{c2, c2, RatMatrix{{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}}};
    auto rep = validate_morphism(neg);
    CHECK(!rep.ok());

    CHECK(validate_morphism(diagonal_embedding(c2)).ok());
}

TEST_CASE("tensor products of algebras") {
    Algebra q = field_q(), c2 = group_algebra_cyclic(2), m2 = matrix_algebra(2);

    Algebra qa = tensor_algebra(q, c2);
    CHECK(qa.dim == c2.dim);
    CHECK(qa.mult == c2.mult);  // canonical relabeling is the identity here
    CHECK(qa.unit == c2.unit);

    Algebra c2c2 = tensor_algebra(c2, c2);
    CHECK(c2c2.dim == 4);
    CHECK(validate_algebra(c2c2).ok());
    CHECK(is_commutative(c2c2));

    Algebra big = tensor_algebra(m2, c2);
    CHECK(big.dim == 8);
    CHECK(validate_algebra(big).ok());
    CHECK(!is_commutative(big));
}

TEST_CASE("opposite algebra") {
    Algebra c4 = group_algebra_cyclic(4);
    CHECK(opposite(c4).mult == c4.mult);

    Algebra t2 = upper_triangular2();
    Algebra op = opposite(t2);
    CHECK(validate_algebra(op).ok());
    CHECK(!(op.mult == t2.mult));
    CHECK(opposite(op).mult == t2.mult);
}

TEST_CASE("direct product") {
    Algebra c2 = group_algebra_cyclic(2);
    Algebra p = direct_product(c2, c2);
    CHECK(p.dim == 4);
    CHECK(validate_algebra(p).ok());
    CHECK(is_commutative(p));
}
