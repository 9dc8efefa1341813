#include "frobalg/bimod.hpp"

#include <stdexcept>

namespace frobalg {

RatMatrix Bimodule::left_action_of(const Vec& r) const {
    return left * kron(RatMatrix::column(r), RatMatrix::identity(dim));
}

RatMatrix Bimodule::right_action_of(const Vec& r) const {
    return right * kron(RatMatrix::identity(dim), RatMatrix::column(r));
}

ValidationReport validate_bimodule(const Bimodule& m) {
    ValidationReport rep;
    const std::size_t dr = m.ring.dim, dx = m.dim;
    if (m.left.rows() != dx || m.left.cols() != dr * dx) rep.fail("left action has wrong shape");
    if (m.right.rows() != dx || m.right.cols() != dx * dr) rep.fail("right action has wrong shape");
    if (!rep.ok()) return rep;
    RatMatrix idr = RatMatrix::identity(dr), idx = RatMatrix::identity(dx);
    // mu(m_R (x) id) = mu(id (x) mu), mu(unit (x) id) = id
    if (!(m.left * kron(m.ring.mult, idx) == m.left * kron(idr, m.left)))
        rep.fail("left action is not associative");
    if (!(m.left * kron(RatMatrix::column(m.ring.unit), idx)).is_identity())
        rep.fail("unit does not act as identity on the left");
    if (!(m.right * kron(m.right, idr) == m.right * kron(idx, m.ring.mult)))
        rep.fail("right action is not associative");
    if (!(m.right * kron(idx, RatMatrix::column(m.ring.unit))).is_identity())
        rep.fail("unit does not act as identity on the right");
    // actions commute: nu(mu (x) id) = mu(id (x) nu)
    if (!(m.right * kron(m.left, idr) == m.left * kron(idr, m.right)))
        rep.fail("left and right actions do not commute");
    return rep;
}

Bimodule regular_bimodule(const Algebra& r) {
    Bimodule m;
    m.ring = r;
    m.dim = r.dim;
    m.left = r.mult;
    m.right = r.mult;
    return m;
}

Bimodule bimodule_along(const AlgebraMorphism& i) {
    const Algebra& r = i.source;
    const Algebra& s = i.target;
    Bimodule m;
    m.ring = r;
    m.dim = s.dim;
    m.left = s.mult * kron(i.matrix, RatMatrix::identity(s.dim));
    m.right = s.mult * kron(RatMatrix::identity(s.dim), i.matrix);
    return m;
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    if (!(a.ring.mult == b.ring.mult))
        throw std::invalid_argument("direct_sum: bimodules over different rings");
    const std::size_t dr = a.ring.dim, da = a.dim, db = b.dim, d = da + db;
    Bimodule m;
    m.ring = a.ring;
    m.dim = d;
    m.left = RatMatrix(d, dr * d);
    m.right = RatMatrix(d, d * dr);
    for (std::size_t r = 0; r < dr; ++r) {
        for (std::size_t x = 0; x < da; ++x)
            for (std::size_t k = 0; k < da; ++k) {
                m.left.at(k, r * d + x) = a.left.at(k, r * da + x);
                m.right.at(k, x * dr + r) = a.right.at(k, x * dr + r);
            }
        for (std::size_t x = 0; x < db; ++x)
            for (std::size_t k = 0; k < db; ++k) {
                m.left.at(da + k, r * d + (da + x)) = b.left.at(k, r * db + x);
                m.right.at(da + k, (da + x) * dr + r) = b.right.at(k, x * dr + r);
            }
    }
    return m;
}

std::optional<RatMatrix> TensorOverR::descend_left_operator(const RatMatrix& op) const {
    return factor_through_quotient(q * kron(op, RatMatrix::identity(right_mod.dim)), quo);
}

std::optional<RatMatrix> TensorOverR::descend_right_operator(const RatMatrix& op) const {
    return factor_through_quotient(q * kron(RatMatrix::identity(left_mod.dim), op), quo);
}

TensorOverR tensor_over_R(const Bimodule& x, const Bimodule& y) {
    if (!(x.ring.mult == y.ring.mult) || x.ring.dim != y.ring.dim)
        throw std::invalid_argument("tensor_over_R: ring mismatch");
    const std::size_t dr = x.ring.dim, dx = x.dim, dy = y.dim;
    std::vector<Vec> rels;
    rels.reserve(dx * dr * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dr; ++j) {
            Vec xr = x.right.col_vec(i * dr + j);  // x_i . r_j
            for (std::size_t k = 0; k < dy; ++k) {
                Vec ry = y.left.col_vec(j * dy + k);  // r_j . y_k
                Vec rel(dx * dy);
                for (std::size_t a = 0; a < dx; ++a)
                    if (!xr[a].is_zero()) rel[a * dy + k] += xr[a];
                for (std::size_t b = 0; b < dy; ++b)
                    if (!ry[b].is_zero()) rel[i * dy + b] -= ry[b];
                if (!is_zero(rel)) rels.push_back(std::move(rel));
            }
        }
    TensorOverR t;
    t.left_mod = x;
    t.right_mod = y;
    t.quo = quotient_by(dx * dy, rels);
    t.q = t.quo.projection;

    const std::size_t dq = t.dim();
    t.induced_left = RatMatrix(dq, dr * dq);
    t.induced_right = RatMatrix(dq, dq * dr);
    for (std::size_t j = 0; j < dr; ++j) {
        Vec rj = x.ring.basis_vec(j);
        auto lj = t.descend_left_operator(x.left_action_of(rj));
        auto rjm = t.descend_right_operator(y.right_action_of(rj));
        if (!lj || !rjm)
            throw std::logic_error("tensor_over_R: induced action does not descend (relation span unstable)");
        for (std::size_t c = 0; c < dq; ++c)
            for (std::size_t k = 0; k < dq; ++k) {
                t.induced_left.at(k, j * dq + c) = lj->at(k, c);
                t.induced_right.at(k, c * dr + j) = rjm->at(k, c);
            }
    }
    return t;
}

Bimodule as_bimodule(const TensorOverR& t) {
    Bimodule m;
    m.ring = t.left_mod.ring;
    m.dim = t.dim();
    m.left = t.induced_left;
    m.right = t.induced_right;
    return m;
}

CanonicalIso upsilon(const TensorOverR& t) {
    const Bimodule& x = t.left_mod;
    if (t.right_mod.dim != x.ring.dim || !(t.right_mod.left == x.ring.mult) ||
        !(t.right_mod.right == x.ring.mult))
        throw std::invalid_argument("upsilon: right factor is not the regular bimodule");
    auto fwd = factor_through_quotient(x.right, t.quo);
    if (!fwd) throw std::logic_error("upsilon: right action does not factor through q");
    CanonicalIso iso;
    iso.forward = *fwd;
    iso.inverse = t.q * kron(RatMatrix::identity(x.dim), RatMatrix::column(x.ring.unit));
    if (!(iso.forward * iso.inverse).is_identity() || !(iso.inverse * iso.forward).is_identity())
        throw std::logic_error("upsilon: not mutually inverse");
    return iso;
}

CanonicalIso upsilon_prime(const TensorOverR& t) {
    const Bimodule& y = t.right_mod;
    if (t.left_mod.dim != y.ring.dim || !(t.left_mod.left == y.ring.mult) ||
        !(t.left_mod.right == y.ring.mult))
        throw std::invalid_argument("upsilon_prime: left factor is not the regular bimodule");
    auto fwd = factor_through_quotient(y.left, t.quo);
    if (!fwd) throw std::logic_error("upsilon_prime: left action does not factor through q");
    CanonicalIso iso;
    iso.forward = *fwd;
    iso.inverse = t.q * kron(RatMatrix::column(y.ring.unit), RatMatrix::identity(y.dim));
    if (!(iso.forward * iso.inverse).is_identity() || !(iso.inverse * iso.forward).is_identity())
        throw std::logic_error("upsilon_prime: not mutually inverse");
    return iso;
}

RatMatrix lift_tilde(const TensorOverR& mx, const TensorOverR& my, const RatMatrix& f) {
    const Bimodule& x = mx.right_mod;
    const Bimodule& y = my.right_mod;
    if (f.rows() != y.dim || f.cols() != x.dim) throw std::invalid_argument("lift_tilde: shape mismatch");
    if (!(f * x.left == y.left * kron(RatMatrix::identity(x.ring.dim), f)))
        throw std::invalid_argument("lift_tilde: map is not left R-linear");
    auto lifted =
        factor_through_quotient(my.q * kron(RatMatrix::identity(mx.left_mod.dim), f), mx.quo);
    if (!lifted) throw std::logic_error("lift_tilde: map does not descend");
    return *lifted;
}

RatMatrix lift_hat(const TensorOverR& my, const TensorOverR& ny, const RatMatrix& g) {
    const Bimodule& m = my.left_mod;
    const Bimodule& n = ny.left_mod;
    if (g.rows() != n.dim || g.cols() != m.dim) throw std::invalid_argument("lift_hat: shape mismatch");
    if (!(g * m.right == n.right * kron(g, RatMatrix::identity(m.ring.dim))))
        throw std::invalid_argument("lift_hat: map is not right R-linear");
    auto lifted =
        factor_through_quotient(ny.q * kron(g, RatMatrix::identity(my.right_mod.dim)), my.quo);
    if (!lifted) throw std::logic_error("lift_hat: map does not descend");
    return *lifted;
}

Associator associator(const Bimodule& x, const Bimodule& y, const Bimodule& z) {
    Associator a{tensor_over_R(x, y), tensor_over_R(y, z), {}, {}, {}, {}};
    a.xy_z = tensor_over_R(as_bimodule(a.xy), z);
    a.x_yz = tensor_over_R(x, as_bimodule(a.yz));
    // D1 = q_{(XY)Z} (q_{XY} (x) id), D2 = q_{X(YZ)} (id (x) q_{YZ}); both are
    // surjective on X (x) Y (x) Z, and sigma is the unique map with
    // sigma D1 = D2.
    RatMatrix d1 = a.xy_z.q * kron(a.xy.q, RatMatrix::identity(z.dim));
    RatMatrix d2 = a.x_yz.q * kron(RatMatrix::identity(x.dim), a.yz.q);
    auto p1 = right_inverse(d1);
    auto p2 = right_inverse(d2);
    if (!p1 || !p2) throw std::logic_error("associator: projection is not surjective");
    a.sigma = d2 * *p1;
    a.gamma = d1 * *p2;
    if (!(a.sigma * d1 == d2) || !(a.gamma * d2 == d1))
        throw std::logic_error("associator: defining equations fail");
    if (!(a.sigma * a.gamma).is_identity() || !(a.gamma * a.sigma).is_identity())
        throw std::logic_error("associator: not mutually inverse");
    return a;
}

ForgetfulFrobStructure forgetful_frob_structure(const Algebra& r, const FrobeniusCertificate& cert) {
    auto rep = verify_frobenius(cert);
    if (!rep.ok())
        throw std::invalid_argument("forgetful_frob_structure: certificate not verified: " + rep.summary());
    return {r, cert};
}

RatMatrix ForgetfulFrobStructure::psi(const TensorOverR& t) const {
    const Bimodule& x = t.left_mod;
    const Bimodule& y = t.right_mod;
    RatMatrix insert_e = kron(RatMatrix::identity(x.dim),
                              kron(RatMatrix::column(cert.casimir), RatMatrix::identity(y.dim)));
    RatMatrix ambient = kron(x.right, y.left) * insert_e;
    auto factored = factor_through_quotient(ambient, t.quo);
    if (!factored)
        throw std::logic_error("psi: (nu (x) mu)(id (x) e (x) id) does not factor through q");
    return *factored;
}

ValidationReport verify_frobenius_monoidal(const ForgetfulFrobStructure& s, const Bimodule& x,
                                           const Bimodule& y, const Bimodule& z) {
    ValidationReport rep;
    const Algebra& r = s.ring;
    Associator a = associator(x, y, z);
    RatMatrix idx = RatMatrix::identity(x.dim), idy = RatMatrix::identity(y.dim),
              idz = RatMatrix::identity(z.dim);

    // monoidal associativity (the defining property of sigma, re-checked)
    if (!(a.sigma * a.xy_z.q * kron(a.xy.q, idz) == a.x_yz.q * kron(idx, a.yz.q)))
        rep.fail("monoidal associativity square fails");

    // monoidal unit triangles
    Bimodule rr = regular_bimodule(r);
    TensorOverR rx = tensor_over_R(rr, x), xr = tensor_over_R(x, rr);
    CanonicalIso upl = upsilon_prime(rx), upr = upsilon(xr);
    if (!(upl.forward * rx.q * kron(RatMatrix::column(r.unit), idx) == idx))
        rep.fail("left unit triangle fails");
    if (!(upr.forward * xr.q * kron(idx, RatMatrix::column(r.unit)) == idx))
        rep.fail("right unit triangle fails");

    // opmonoidal structure
    RatMatrix psi_xy = s.psi(a.xy), psi_yz = s.psi(a.yz);
    RatMatrix psi_xy_z = s.psi(a.xy_z), psi_x_yz = s.psi(a.x_yz);
    RatMatrix theta_row = RatMatrix::row(s.psi0());

    // opmonoidal coassociativity
    if (!(kron(psi_xy, idz) * psi_xy_z == kron(idx, psi_yz) * psi_x_yz * a.sigma))
        rep.fail("opmonoidal coassociativity fails");

    // opmonoidal unit triangles: (psi0 (x) id) psi_{R,X} = Upsilon' and
    // (id (x) psi0) psi_{X,R} = Upsilon
    if (!(kron(theta_row, idx) * s.psi(rx) == upl.forward))
        rep.fail("opmonoidal left unit triangle fails");
    if (!(kron(idx, theta_row) * s.psi(xr) == upr.forward))
        rep.fail("opmonoidal right unit triangle fails");

    // Frobenius compatibility squares
    if (!(psi_x_yz * a.sigma * a.xy_z.q == kron(idx, a.yz.q) * kron(psi_xy, idz)))
        rep.fail("first Frobenius square fails");
    if (!(kron(a.xy.q, idz) * kron(idx, psi_yz) == psi_xy_z * a.gamma * a.x_yz.q))
        rep.fail("second Frobenius square fails");

    // psi is R-bilinear out of the quotient
    for (std::size_t j = 0; j < r.dim; ++j) {
        Vec rj = r.basis_vec(j);
        RatMatrix outer_left = kron(x.left_action_of(rj), idy);
        RatMatrix outer_right = kron(idx, y.right_action_of(rj));
        RatMatrix ind_left = a.xy.induced_left *
                             kron(RatMatrix::column(rj), RatMatrix::identity(a.xy.dim()));
        RatMatrix ind_right = a.xy.induced_right *
                              kron(RatMatrix::identity(a.xy.dim()), RatMatrix::column(rj));
        if (!(psi_xy * ind_left == outer_left * psi_xy)) {
            rep.fail("psi is not left R-linear");
            break;
        }
        if (!(psi_xy * ind_right == outer_right * psi_xy)) {
            rep.fail("psi is not right R-linear");
            break;
        }
    }

    // separable Frobenius structure: q psi = id
    if (r.mult.apply(s.cert.casimir) == r.unit) {
        if (!(a.xy.q * psi_xy).is_identity()) rep.fail("q . psi != id for a separability idempotent");
    }
    return rep;
}

}  // namespace frobalg
