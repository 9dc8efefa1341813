#include "frobalg/frobsep.hpp"

namespace frobalg {

RatMatrix form_of_theta(const Algebra& a, const Vec& theta) {
    const std::size_t d = a.dim;
    RatMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat acc;
            for (std::size_t k = 0; k < d; ++k) {
                Rat c = a.structure_constant(i, j, k);
                if (!c.is_zero()) acc += c * theta[k];
            }
            b.at(i, j) = acc;
        }
    return b;
}

RatMatrix FrobeniusCertificate::form() const { return form_of_theta(algebra, theta); }

RatMatrix casimir_constraints(const Algebra& a) {
    const std::size_t d = a.dim;
    RatMatrix id = RatMatrix::identity(d);
    std::vector<RatMatrix> rows;
    rows.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec ei = a.basis_vec(i);
        rows.push_back(kron(a.left_mult(ei), id) - kron(id, a.right_mult(ei)));
    }
    return vstack(rows);
}

std::optional<SeparabilityCertificate> is_separable(const Algebra& a) {
    const std::size_t d = a.dim;
    // Casimir identity (homogeneous) and m e = unit (affine), solved jointly.
    RatMatrix cas = casimir_constraints(a);
    RatMatrix sys = vstack({cas, a.mult});
    Vec rhs(cas.rows() + d);
    for (std::size_t i = 0; i < d; ++i) rhs[cas.rows() + i] = a.unit[i];
    auto e = solve(sys, rhs);
    if (!e) return std::nullopt;
    SeparabilityCertificate cert{a, *e};
    auto rep = verify_separability(cert);
    if (!rep.ok()) throw std::logic_error("is_separable: witness failed verification: " + rep.summary());
    return cert;
}

ValidationReport verify_separability(const SeparabilityCertificate& cert) {
    ValidationReport rep;
    const Algebra& a = cert.algebra;
    if (cert.idempotent.size() != a.dim * a.dim) {
        rep.fail("idempotent has wrong length");
        return rep;
    }
    if (!is_zero(casimir_constraints(a).apply(cert.idempotent)))
        rep.fail("Casimir identity fails");
    if (a.mult.apply(cert.idempotent) != a.unit) rep.fail("m e != unit");
    // splitting map gamma(x) = x . e satisfies m gamma = id
    if (rep.ok()) {
        RatMatrix id = RatMatrix::identity(a.dim);
        RatMatrix gamma(a.dim * a.dim, a.dim);
        for (std::size_t j = 0; j < a.dim; ++j) {
            Vec g = kron(a.left_mult(a.basis_vec(j)), id).apply(cert.idempotent);
            for (std::size_t i = 0; i < g.size(); ++i) gamma.at(i, j) = g[i];
        }
        if (!(a.mult * gamma).is_identity()) rep.fail("splitting map is not a section of m");
    }
    return rep;
}

ParamMatrix generic_form(const Algebra& a) {
    const std::size_t d = a.dim;
    ParamMatrix pm;
    pm.n = d;
    pm.nvars = d;
    pm.constant = RatMatrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        RatMatrix lk(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) lk.at(i, j) = a.structure_constant(i, j, k);
        pm.linear.push_back(lk);
    }
    return pm;
}

namespace {

Vec casimir_from_inverse_form(const RatMatrix& binv) {
    const std::size_t d = binv.rows();
    Vec e(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) e[i * d + j] = binv.at(i, j);
    return e;
}

FrobeniusCertificate certificate_from_form(const Algebra& a, const Vec& theta,
                                           const RatMatrix& b, const RatMatrix& binv) {
    FrobeniusCertificate cert;
    cert.algebra = a;
    cert.theta = theta;
    cert.casimir = casimir_from_inverse_form(binv);
    cert.nakayama = binv * b.transpose();
    auto rep = verify_frobenius(cert);
    if (!rep.ok())
        throw std::logic_error("find_frobenius: constructed certificate failed verification: " +
                               rep.summary());
    return cert;
}

}  // namespace

FrobeniusDecision find_frobenius(const Algebra& a, const FrobSepOptions& opt) {
    const std::size_t d = a.dim;
    RatRng rng(opt.seed);
    std::size_t tried = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Vec theta = rng.vector(d);
        RatMatrix b = form_of_theta(a, theta);
        ++tried;
        if (auto binv = inverse(b)) return certificate_from_form(a, theta, b, *binv);
    }
    // Sampling found nothing; a negative answer must be symbolic.
    if (d > opt.symbolic_cap)
        throw SymbolicCapExceeded(
            "find_frobenius: no witness after " + std::to_string(tried) + " samples and dim " +
            std::to_string(d) + " exceeds the symbolic determinant cap " +
            std::to_string(opt.symbolic_cap));
    Poly det = symbolic_determinant(generic_form(a));
    if (det.is_zero()) {
        // Cross-check the symbolic verdict by more sampling.
        for (std::size_t t = 0; t < 100; ++t) {
            Vec theta = rng.vector(d);
            ++tried;
            if (inverse(form_of_theta(a, theta)))
                throw std::logic_error("find_frobenius: zero determinant but invertible sample");
        }
        NotFrobeniusProof proof;
        proof.samples_tried = tried;
        proof.determinant = "0";
        proof.detail = "det of the generic associative form expands to the zero polynomial in " +
                       std::to_string(d) + " coordinates";
        return proof;
    }
    // The determinant is a nonzero polynomial, so a witness exists; pick one
    // deterministically from the polynomial itself.
    Vec theta = nonzero_point(det);
    RatMatrix b = form_of_theta(a, theta);
    auto binv = inverse(b);
    if (!binv) throw std::logic_error("find_frobenius: nonzero determinant point is singular");
    return certificate_from_form(a, theta, b, *binv);
}

ValidationReport verify_frobenius(const FrobeniusCertificate& cert) {
    ValidationReport rep;
    const Algebra& a = cert.algebra;
    const std::size_t d = a.dim;
    if (cert.theta.size() != d || cert.casimir.size() != d * d) {
        rep.fail("certificate has wrong shape");
        return rep;
    }
    if (!is_zero(casimir_constraints(a).apply(cert.casimir))) rep.fail("Casimir identity fails");
    RatMatrix id = RatMatrix::identity(d);
    RatMatrix theta_row = RatMatrix::row(cert.theta);
    if (kron(theta_row, id).apply(cert.casimir) != a.unit)
        rep.fail("(theta (x) id) e != unit");
    if (kron(id, theta_row).apply(cert.casimir) != a.unit)
        rep.fail("(id (x) theta) e != unit");

    // Nakayama checks: B N = B^T, N unital, N multiplicative, N invertible.
    RatMatrix b = cert.form();
    const RatMatrix& n = cert.nakayama;
    if (n.rows() != d || n.cols() != d) {
        rep.fail("Nakayama matrix has wrong shape");
        return rep;
    }
    if (!(b * n == b.transpose())) rep.fail("theta(ab) = theta(b N(a)) fails");
    if (n.apply(a.unit) != a.unit) rep.fail("N(1) != 1");
    if (!(n * a.mult == a.mult * kron(n, n))) rep.fail("N is not multiplicative");
    if (!inverse(n)) rep.fail("N is not invertible");
    return rep;
}

RatMatrix nakayama(const FrobeniusCertificate& cert) {
    auto rep = verify_frobenius(cert);
    if (!rep.ok()) throw std::invalid_argument("nakayama: certificate not verified: " + rep.summary());
    RatMatrix b = cert.form();
    auto binv = inverse(b);
    if (!binv) throw std::logic_error("nakayama: degenerate form on a verified certificate");
    return *binv * b.transpose();
}

std::optional<AlphaWitness> frobenius_to_separable_alpha(const FrobeniusCertificate& cert) {
    auto rep = verify_frobenius(cert);
    if (!rep.ok())
        throw std::invalid_argument("frobenius_to_separable_alpha: certificate not verified");
    const Algebra& a = cert.algebra;
    const std::size_t d = a.dim;
    // m(m (x) id)(id (x) alpha (x) id) e = sum u_k alpha v_k, linear in alpha.
    RatMatrix sys(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        Vec alpha = a.basis_vec(c);
        Vec acc(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Rat& w = cert.casimir[i * d + j];
                if (w.is_zero()) continue;
                Vec term = a.product(a.product(a.basis_vec(i), alpha), a.basis_vec(j));
                acc = acc + w * term;
            }
        for (std::size_t r = 0; r < d; ++r) sys.at(r, c) = acc[r];
    }
    auto alpha = solve(sys, a.unit);
    if (!alpha) return std::nullopt;
    // induced idempotent: sum (u_k alpha) (x) v_k
    Vec induced(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rat& w = cert.casimir[i * d + j];
            if (w.is_zero()) continue;
            Vec ua = a.product(a.basis_vec(i), *alpha);
            for (std::size_t k = 0; k < d; ++k) induced[k * d + j] += w * ua[k];
        }
    SeparabilityCertificate sep{a, induced};
    auto srep = verify_separability(sep);
    if (!srep.ok())
        throw std::logic_error("frobenius_to_separable_alpha: induced idempotent failed: " +
                               srep.summary());
    return AlphaWitness{*alpha, sep};
}

std::variant<FrobeniusCertificate, FormRejection> frobenius_via_form(const Algebra& a,
                                                                     const BilinearForm& b) {
    if (!b.is_associative()) return FormRejection{FormRejection::NotAssociative, "B(ab,c) != B(a,bc)"};
    auto binv = inverse(b.matrix);
    if (!binv) return FormRejection{FormRejection::Degenerate, "form matrix is singular"};
    // theta(x) = B(x, 1); associativity gives theta(xy) = B(x, y), so the
    // Gram matrix of theta is the given form.
    Vec theta = b.matrix.apply(a.unit);
    RatMatrix gram = form_of_theta(a, theta);
    if (!(gram == b.matrix))
        throw std::logic_error("frobenius_via_form: Gram matrix mismatch on an associative form");
    return certificate_from_form(a, theta, gram, *binv);
}

std::optional<FrobeniusCertificate> find_separable_frobenius(const Algebra& a,
                                                             const FrobSepOptions& opt) {
    const std::size_t d = a.dim;
    RatMatrix cas = casimir_constraints(a);
    RatMatrix sys = vstack({cas, a.mult});
    Vec rhs(cas.rows() + d);
    for (std::size_t i = 0; i < d; ++i) rhs[cas.rows() + i] = a.unit[i];
    auto particular = solve(sys, rhs);
    if (!particular) return std::nullopt;
    auto homog = kernel_basis(sys);

    RatRng rng(opt.seed);
    auto try_e = [&](const Vec& e) -> std::optional<FrobeniusCertificate> {
        // counit laws are linear in theta for a fixed e
        RatMatrix emat(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) emat.at(i, j) = e[i * d + j];
        RatMatrix stacked = vstack({emat.transpose(), emat});
        Vec want(2 * d);
        for (std::size_t i = 0; i < d; ++i) {
            want[i] = a.unit[i];
            want[d + i] = a.unit[i];
        }
        auto theta = solve(stacked, want);
        if (!theta) return std::nullopt;
        FrobeniusCertificate cert;
        cert.algebra = a;
        cert.theta = *theta;
        cert.casimir = e;
        RatMatrix b = form_of_theta(a, *theta);
        auto binv = inverse(b);
        if (!binv) return std::nullopt;
        cert.nakayama = *binv * b.transpose();
        if (!verify_frobenius(cert).ok()) return std::nullopt;
        return cert;
    };

    if (auto c = try_e(*particular)) return c;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        Vec e = *particular;
        for (const auto& h : homog) e = e + rng.rational() * h;
        if (auto c = try_e(e)) return c;
    }
    return std::nullopt;
}

}  // namespace frobalg
