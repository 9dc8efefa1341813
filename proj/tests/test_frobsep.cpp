#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobalg/frobsep.hpp"

using namespace frobalg;

namespace {

std::vector<Algebra> suite() {
    return {field_q(),        group_algebra_cyclic(2), group_algebra_cyclic(3),
            group_algebra_cyclic(4), matrix_algebra(2),  truncated_poly(2),
            truncated_poly(3), upper_triangular2()};
}

FrobeniusCertificate manual_certificate(const Algebra& a, Vec theta, Vec casimir) {
    FrobeniusCertificate c;
    c.algebra = a;
    c.theta = std::move(theta);
    c.casimir = std::move(casimir);
    RatMatrix b = c.form();
    auto binv = inverse(b);
    REQUIRE(binv);
    c.nakayama = *binv * b.transpose();
    return c;
}

// Independent Nakayama oracle: solve theta(ab) = theta(b N(a)) as a linear
// system in the d^2 entries of N, ignoring the closed form used in frobsep.
RatMatrix nakayama_by_linear_solve(const Algebra& a, const Vec& theta) {
    const std::size_t d = a.dim;
    RatMatrix sys(d * d, d * d);
    Vec rhs(d * d);
    RatMatrix b = form_of_theta(a, theta);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t row = i * d + j;
            rhs[row] = b.at(i, j);
            // theta(e_j N(e_i)) = sum_k N[k][i] theta(e_j e_k)
            for (std::size_t k = 0; k < d; ++k) sys.at(row, k * d + i) = b.at(j, k);
        }
    auto n = solve(sys, rhs);
    REQUIRE(n);
    RatMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = (*n)[r * d + c];
    return m;
}

}  // namespace

TEST_CASE("separability of the base field") {
    auto cert = is_separable(field_q());
    REQUIRE(cert);
    CHECK(cert->idempotent == Vec{Rat(1)});  // e = 1 (x) 1
}

TEST_CASE("Q[x]/(x^2) is not separable") {
    CHECK(!is_separable(truncated_poly(2)));
    CHECK(!is_separable(truncated_poly(3)));
}

TEST_CASE("M2(Q) is separable; the textbook idempotent passes the verifier") {
    Algebra m2 = matrix_algebra(2);
    auto cert = is_separable(m2);
    REQUIRE(cert);

    // sum_i E_{i1} (x) E_{1i}: indices E11=0, E12=1, E21=2, E22=3
    Vec e(16);
    e[0 * 4 + 0] = Rat(1);  // E11 (x) E11
    e[2 * 4 + 1] = Rat(1);  // E21 (x) E12
    CHECK(verify_separability({m2, e}).ok());
}

TEST_CASE("group algebras are separable in characteristic zero") {
    for (std::size_t n : {2, 3, 4}) CHECK(is_separable(group_algebra_cyclic(n)));
}

TEST_CASE("canonical Frobenius witnesses verify") {
    SUBCASE("Q[C2]: theta reads the coefficient of 1, e = 1(x)1 + g(x)g") {
        Algebra c2 = group_algebra_cyclic(2);
        Vec e(4);
        e[0 * 2 + 0] = Rat(1);
        e[1 * 2 + 1] = Rat(1);
        auto cert = manual_certificate(c2, {Rat(1), Rat(0)}, e);
        CHECK(verify_frobenius(cert).ok());

        Vec e2 = Rat(2) * e;
        FrobeniusCertificate bad = cert;
        bad.casimir = e2;
        CHECK(!verify_frobenius(bad).ok());
    }
    SUBCASE("Q[x]/(x^2): theta reads the x coefficient, e = 1(x)x + x(x)1") {
        Algebra tp = truncated_poly(2);
        Vec e(4);
        e[0 * 2 + 1] = Rat(1);
        e[1 * 2 + 0] = Rat(1);
        auto cert = manual_certificate(tp, {Rat(0), Rat(1)}, e);
        CHECK(verify_frobenius(cert).ok());
    }
    SUBCASE("M2(Q): theta = trace, e = sum E_ij (x) E_ji") {
        Algebra m2 = matrix_algebra(2);
        Vec e(16);
        e[0 * 4 + 0] = Rat(1);   // E11 (x) E11
        e[1 * 4 + 2] = Rat(1);   // E12 (x) E21
        e[2 * 4 + 1] = Rat(1);   // E21 (x) E12
        e[3 * 4 + 3] = Rat(1);   // E22 (x) E22
        auto cert = manual_certificate(m2, {Rat(1), Rat(0), Rat(0), Rat(1)}, e);
        CHECK(verify_frobenius(cert).ok());
        CHECK(cert.nakayama.is_identity());  // trace form is symmetric
    }
}

TEST_CASE("find_frobenius classifies the builtins") {
    FrobSepOptions opt;
    opt.seed = 5;
    for (const auto& a : suite()) {
        CAPTURE(a.name);
        auto dec = find_frobenius(a, opt);
        if (a.name == "T2(Q)") {
            REQUIRE(!is_frobenius(dec));
            auto proof = std::get<NotFrobeniusProof>(dec);
            CHECK(proof.determinant == "0");
        } else {
            REQUIRE(is_frobenius(dec));
            CHECK(verify_frobenius(std::get<FrobeniusCertificate>(dec)).ok());
        }
    }
}

TEST_CASE("Nakayama automorphisms") {
    FrobSepOptions opt;
    opt.seed = 17;
    SUBCASE("commutative algebras have N = id") {
        for (const auto& a : suite()) {
            if (!is_commutative(a)) continue;
            auto dec = find_frobenius(a, opt);
            if (!is_frobenius(dec)) continue;
            auto cert = std::get<FrobeniusCertificate>(dec);
            CHECK(nakayama(cert).is_identity());
        }
    }
    SUBCASE("twisted trace on M2: N is conjugation by u = diag(1,2)") {
        Algebra m2 = matrix_algebra(2);
        // theta(a) = tr(u a), u = diag(1,2): on (E11,E12,E21,E22) this is (1,0,0,2)
        Vec theta = {Rat(1), Rat(0), Rat(0), Rat(2)};
        RatMatrix b = form_of_theta(m2, theta);
        auto binv = inverse(b);
        REQUIRE(binv);
        FrobeniusCertificate cert;
        cert.algebra = m2;
        cert.theta = theta;
        cert.casimir = Vec(16);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) cert.casimir[i * 4 + j] = binv->at(i, j);
        cert.nakayama = *binv * b.transpose();
        REQUIRE(verify_frobenius(cert).ok());

        RatMatrix n = nakayama(cert);
        CHECK(!n.is_identity());
        CHECK(n == nakayama_by_linear_solve(m2, theta));

        // u a u^{-1} on the matrix-unit basis: E12 -> E12/2, E21 -> 2 E21
        RatMatrix conj(4, 4);
        conj.at(0, 0) = Rat(1);
        conj.at(1, 1) = Rat(1, 2);
        conj.at(2, 2) = Rat(2);
        conj.at(3, 3) = Rat(1);
        CHECK(n == conj);
    }
    SUBCASE("plain trace on M2: N = id") {
        Algebra m2 = matrix_algebra(2);
        Vec theta = {Rat(1), Rat(0), Rat(0), Rat(1)};
        CHECK(nakayama_by_linear_solve(m2, theta).is_identity());
    }
}

TEST_CASE("alpha: the bridge between Frobenius and separable") {
    SUBCASE("Q[C2]: alpha = 1/2") {
        Algebra c2 = group_algebra_cyclic(2);
        Vec e(4);
        e[0] = Rat(1);
        e[3] = Rat(1);
        auto cert = manual_certificate(c2, {Rat(1), Rat(0)}, e);
        auto w = frobenius_to_separable_alpha(cert);
        REQUIRE(w);
        CHECK(w->alpha == Vec{Rat(1, 2), Rat(0)});
        Vec expected(4);
        expected[0] = Rat(1, 2);
        expected[3] = Rat(1, 2);
        CHECK(w->induced.idempotent == expected);
    }
    SUBCASE("Q[x]/(x^2): no alpha") {
        Algebra tp = truncated_poly(2);
        Vec e(4);
        e[1] = Rat(1);
        e[2] = Rat(1);
        auto cert = manual_certificate(tp, {Rat(0), Rat(1)}, e);
        CHECK(!frobenius_to_separable_alpha(cert));
    }
    SUBCASE("base field: alpha = 1") {
        auto cert = manual_certificate(field_q(), {Rat(1)}, {Rat(1)});
        auto w = frobenius_to_separable_alpha(cert);
        REQUIRE(w);
        CHECK(w->alpha == Vec{Rat(1)});
    }
    SUBCASE("agreement across the suite: separable and Frobenius iff alpha exists") {
        FrobSepOptions opt;
        opt.seed = 23;
        for (const auto& a : suite()) {
            CAPTURE(a.name);
            auto dec = find_frobenius(a, opt);
            if (!is_frobenius(dec)) continue;
            auto cert = std::get<FrobeniusCertificate>(dec);
            bool sep = is_separable(a).has_value();
            bool alpha = frobenius_to_separable_alpha(cert).has_value();
            CHECK(sep == alpha);
        }
    }
}

TEST_CASE("frobenius_via_form") {
    SUBCASE("Q[C2] with the coefficient-of-1 form") {
        Algebra c2 = group_algebra_cyclic(2);
        BilinearForm b{c2, form_of_theta(c2, {Rat(1), Rat(0)})};
        auto r = frobenius_via_form(c2, b);
        REQUIRE(std::holds_alternative<FrobeniusCertificate>(r));
        CHECK(verify_frobenius(std::get<FrobeniusCertificate>(r)).ok());
    }
    SUBCASE("M2 with B(a,b) = tr(a)tr(b) is not associative") {
        Algebra m2 = matrix_algebra(2);
        // tr as a row: (1,0,0,1); B = tr^T tr
        RatMatrix tr = RatMatrix::row({Rat(1), Rat(0), Rat(0), Rat(1)});
        BilinearForm b{m2, tr.transpose() * tr};
        auto r = frobenius_via_form(m2, b);
        REQUIRE(std::holds_alternative<FormRejection>(r));
        CHECK(std::get<FormRejection>(r).kind == FormRejection::NotAssociative);
    }
    SUBCASE("Q[x]/(x^2) with the constant-coefficient form is degenerate") {
        Algebra tp = truncated_poly(2);
        BilinearForm b{tp, form_of_theta(tp, {Rat(1), Rat(0)})};
        auto r = frobenius_via_form(tp, b);
        REQUIRE(std::holds_alternative<FormRejection>(r));
        CHECK(std::get<FormRejection>(r).kind == FormRejection::Degenerate);
    }
}

TEST_CASE("simultaneously Frobenius and separable witnesses") {
    FrobSepOptions opt;
    opt.seed = 31;
    for (const auto& a : {group_algebra_cyclic(2), group_algebra_cyclic(3), matrix_algebra(2)}) {
        CAPTURE(a.name);
        auto cert = find_separable_frobenius(a, opt);
        REQUIRE(cert);
        CHECK(verify_frobenius(*cert).ok());
        CHECK(a.mult.apply(cert->casimir) == a.unit);
    }
    CHECK(!find_separable_frobenius(truncated_poly(2), opt));
}

TEST_CASE("determinism: same seed, same certificate") {
    FrobSepOptions opt;
    opt.seed = 99;
    Algebra m2 = matrix_algebra(2);
    auto d1 = find_frobenius(m2, opt);
    auto d2 = find_frobenius(m2, opt);
    REQUIRE(is_frobenius(d1));
    REQUIRE(is_frobenius(d2));
    CHECK(std::get<FrobeniusCertificate>(d1).theta == std::get<FrobeniusCertificate>(d2).theta);
}
