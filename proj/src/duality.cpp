#include "frobalg/duality.hpp"

#include <stdexcept>

namespace frobalg {

namespace {

// rho as a matrix X <- Y* : R[a][c] = rho[(a,c)]
RatMatrix rho_matrix(const Adjunction& adj) {
    RatMatrix m(adj.x_dim, adj.y_dim);
    for (std::size_t a = 0; a < adj.x_dim; ++a)
        for (std::size_t c = 0; c < adj.y_dim; ++c) m.at(a, c) = adj.rho[a * adj.y_dim + c];
    return m;
}

// lambda as a pairing matrix: L[c][b] = lambda(e^Y_c (x) e^X_b)
RatMatrix lambda_matrix(const Adjunction& adj) {
    RatMatrix m(adj.y_dim, adj.x_dim);
    for (std::size_t c = 0; c < adj.y_dim; ++c)
        for (std::size_t b = 0; b < adj.x_dim; ++b) m.at(c, b) = adj.lambda.at(0, c * adj.x_dim + b);
    return m;
}

}  // namespace

ValidationReport verify_adjunction(const Adjunction& adj) {
    ValidationReport rep;
    if (adj.rho.size() != adj.x_dim * adj.y_dim ||
        adj.lambda.cols() != adj.y_dim * adj.x_dim || adj.lambda.rows() != 1) {
        rep.fail("adjunction data has wrong shape");
        return rep;
    }
    RatMatrix idx = RatMatrix::identity(adj.x_dim), idy = RatMatrix::identity(adj.y_dim);
    RatMatrix rho_col = RatMatrix::column(adj.rho);
    // (id_X (x) lambda)(rho (x) id_X)
    RatMatrix snake1 = kron(idx, adj.lambda) * kron(rho_col, idx);
    if (!snake1.is_identity()) rep.fail("first snake identity fails");
    RatMatrix snake2 = kron(adj.lambda, idy) * kron(idy, rho_col);
    if (!snake2.is_identity()) rep.fail("second snake identity fails");
    return rep;
}

Adjunction canonical_dual(std::size_t dim) {
    Adjunction adj;
    adj.x_dim = adj.y_dim = dim;
    adj.rho = Vec(dim * dim);
    adj.lambda = RatMatrix(1, dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        adj.rho[i * dim + i] = Rat(1);
        adj.lambda.at(0, i * dim + i) = Rat(1);
    }
    auto rep = verify_adjunction(adj);
    if (!rep.ok()) throw std::logic_error("canonical_dual: " + rep.summary());
    return adj;
}

ValidationReport verify_bimod_adjunction(const BimodAdjunction& adj) {
    ValidationReport rep;
    const Algebra& r = adj.ring;
    Bimodule rr = regular_bimodule(r);

    // rho0 and lambda0 must be R-bimodule morphisms
    Bimodule xy_bim = as_bimodule(adj.xy);
    RatMatrix rho0_map(adj.xy.dim(), r.dim);  // R -> X (x)_R Y, r |-> r . rho0
    for (std::size_t j = 0; j < r.dim; ++j) {
        Vec col = xy_bim.left_action_of(r.basis_vec(j)).apply(adj.rho0);
        for (std::size_t k = 0; k < col.size(); ++k) rho0_map.at(k, j) = col[k];
    }
    {
        RatMatrix idr = RatMatrix::identity(r.dim);
        if (!(rho0_map * r.mult == xy_bim.left * kron(idr, rho0_map)))
            rep.fail("rho0 does not define a left R-linear map");
        if (!(rho0_map * r.mult == xy_bim.right * kron(rho0_map, idr)))
            rep.fail("rho0 does not define a right R-linear map");
        Bimodule yx_bim = as_bimodule(adj.yx);
        if (!(adj.lambda0 * yx_bim.left == r.mult * kron(idr, adj.lambda0)))
            rep.fail("lambda0 is not left R-linear");
        if (!(adj.lambda0 * yx_bim.right == r.mult * kron(adj.lambda0, idr)))
            rep.fail("lambda0 is not right R-linear");
    }
    if (!rep.ok()) return rep;

    // snake 1: Upsilon_X tilde(lambda0) Sigma' hat(rho0) Upsilon'^{-1}_X = id_X
    {
        Associator a = associator(adj.x, adj.y, adj.x);
        TensorOverR t_rx = tensor_over_R(rr, adj.x);
        TensorOverR t_xr = tensor_over_R(adj.x, rr);
        CanonicalIso upsx = upsilon(t_xr), upsx_p = upsilon_prime(t_rx);
        RatMatrix hat_rho = lift_hat(t_rx, a.xy_z, rho0_map);
        RatMatrix tilde_lambda = lift_tilde(a.x_yz, t_xr, adj.lambda0);
        RatMatrix chain =
            upsx.forward * tilde_lambda * a.sigma * hat_rho * upsx_p.inverse;
        if (!chain.is_identity()) rep.fail("bimodule snake on X fails");
    }
    // snake 2: Upsilon'_Y hat(lambda0) Gamma' tilde(rho0) Upsilon^{-1}_Y = id_Y
    {
        Associator a = associator(adj.y, adj.x, adj.y);
        TensorOverR t_yr = tensor_over_R(adj.y, rr);
        TensorOverR t_ry = tensor_over_R(rr, adj.y);
        CanonicalIso upsy = upsilon(t_yr), upsy_p = upsilon_prime(t_ry);
        RatMatrix tilde_rho = lift_tilde(t_yr, a.x_yz, rho0_map);
        RatMatrix hat_lambda = lift_hat(a.xy_z, t_ry, adj.lambda0);
        RatMatrix chain =
            upsy_p.forward * hat_lambda * a.gamma * tilde_rho * upsy.inverse;
        if (!chain.is_identity()) rep.fail("bimodule snake on Y fails");
    }
    return rep;
}

namespace {

void require_separable_frobenius_data(const FrobeniusCertificate& cert, const Vec& alpha) {
    auto rep = verify_frobenius(cert);
    if (!rep.ok()) throw std::invalid_argument("lift_adjunction: certificate not verified");
    const Algebra& r = cert.algebra;
    // sum e' alpha e'' = 1
    Vec acc(r.dim);
    for (std::size_t k = 0; k < r.dim; ++k)
        for (std::size_t l = 0; l < r.dim; ++l) {
            const Rat& w = cert.casimir[k * r.dim + l];
            if (w.is_zero()) continue;
            acc = acc + w * r.product(r.product(r.basis_vec(k), alpha), r.basis_vec(l));
        }
    if (!(acc == r.unit))
        throw std::invalid_argument("lift_adjunction: alpha does not normalize the Casimir element");
}

Rat pair_lambda(const RatMatrix& lam, const Vec& y, const Vec& x) {
    Rat acc;
    for (std::size_t c = 0; c < lam.rows(); ++c) {
        if (y[c].is_zero()) continue;
        for (std::size_t b = 0; b < lam.cols(); ++b)
            if (!x[b].is_zero()) acc += y[c] * lam.at(c, b) * x[b];
    }
    return acc;
}

}  // namespace

BimodAdjunction lift_adjunction_left(const Adjunction& adj, const Bimodule& y,
                                     const FrobeniusCertificate& cert_r, const Vec& alpha) {
    auto arep = verify_adjunction(adj);
    if (!arep.ok()) throw std::invalid_argument("lift_adjunction_left: invalid adjunction");
    require_separable_frobenius_data(cert_r, alpha);
    if (y.dim != adj.y_dim) throw std::invalid_argument("lift_adjunction_left: Y dimension mismatch");
    const Algebra& r = cert_r.algebra;
    RatMatrix rho_m = rho_matrix(adj), lam = lambda_matrix(adj);
    const std::size_t dx = adj.x_dim, dy = adj.y_dim, dr = r.dim;
    const Vec& e = cert_r.casimir;
    const Vec& theta = cert_r.theta;

    // induced actions on X:
    //   r . x = sum rho_X lambda((rho_Y . r) (x) x)
    //   x . r = sum rho_X lambda((e'' . rho_Y) (x) x) theta(e' r)
    Bimodule xmod;
    xmod.ring = r;
    xmod.dim = dx;
    xmod.left = RatMatrix(dx, dr * dx);
    xmod.right = RatMatrix(dx, dx * dr);
    for (std::size_t j = 0; j < dr; ++j) {
        Vec rj = r.basis_vec(j);
        for (std::size_t b = 0; b < dx; ++b) {
            Vec xb(dx);
            xb[b] = Rat(1);
            Vec left_val(dx), right_val(dx);
            for (std::size_t a = 0; a < dx; ++a)
                for (std::size_t c = 0; c < dy; ++c) {
                    const Rat& w = rho_m.at(a, c);
                    if (w.is_zero()) continue;
                    Vec yc(dy);
                    yc[c] = Rat(1);
                    left_val[a] += w * pair_lambda(lam, y.right_action_of(rj).apply(yc), xb);
                    // right action: loop over the Casimir element
                    for (std::size_t k = 0; k < dr; ++k)
                        for (std::size_t l = 0; l < dr; ++l) {
                            const Rat& wkl = e[k * dr + l];
                            if (wkl.is_zero()) continue;
                            Rat th;  // theta(e_k r_j)
                            Vec kr = r.product(r.basis_vec(k), rj);
                            for (std::size_t m = 0; m < dr; ++m) th += theta[m] * kr[m];
                            if (th.is_zero()) continue;
                            Vec ey = y.left_action_of(r.basis_vec(l)).apply(yc);
                            right_val[a] += w * wkl * th * pair_lambda(lam, ey, xb);
                        }
                }
            for (std::size_t a = 0; a < dx; ++a) {
                xmod.left.at(a, j * dx + b) = left_val[a];
                xmod.right.at(a, b * dr + j) = right_val[a];
            }
        }
    }
    auto brep = validate_bimodule(xmod);
    if (!brep.ok())
        throw std::logic_error("lift_adjunction_left: induced structure invalid: " + brep.summary());

    BimodAdjunction out;
    out.ring = r;
    out.x = xmod;
    out.y = y;
    out.xy = tensor_over_R(xmod, y);
    out.yx = tensor_over_R(y, xmod);

    // rho0 = q (sum rho_X (x) alpha.(rho_Y . 1)) = q (id (x) alpha-action) rho
    Vec amb(dx * dy);
    for (std::size_t a = 0; a < dx; ++a)
        for (std::size_t c = 0; c < dy; ++c) {
            const Rat& w = rho_m.at(a, c);
            if (w.is_zero()) continue;
            Vec yc(dy);
            yc[c] = Rat(1);
            Vec ay = y.left_action_of(alpha).apply(yc);
            for (std::size_t b2 = 0; b2 < dy; ++b2) amb[a * dy + b2] += w * ay[b2];
        }
    out.rho0 = out.xy.q.apply(amb);

    // lambda0 q (y (x) x) = sum e' lambda((e''. y) (x) x)
    RatMatrix gamma(dr, dy * dx);
    for (std::size_t c = 0; c < dy; ++c)
        for (std::size_t b = 0; b < dx; ++b) {
            Vec yc(dy), xb(dx);
            yc[c] = Rat(1);
            xb[b] = Rat(1);
            Vec val(dr);
            for (std::size_t k = 0; k < dr; ++k)
                for (std::size_t l = 0; l < dr; ++l) {
                    const Rat& wkl = e[k * dr + l];
                    if (wkl.is_zero()) continue;
                    Vec ey = y.left_action_of(r.basis_vec(l)).apply(yc);
                    Rat p = pair_lambda(lam, ey, xb);
                    if (!p.is_zero()) val = val + (wkl * p) * r.basis_vec(k);
                }
            for (std::size_t m = 0; m < dr; ++m) gamma.at(m, c * dx + b) = val[m];
        }
    auto lam0 = factor_through_quotient(gamma, out.yx.quo);
    if (!lam0) throw std::logic_error("lift_adjunction_left: lambda0 does not factor through q");
    out.lambda0 = *lam0;

    auto rep = verify_bimod_adjunction(out);
    if (!rep.ok())
        throw std::logic_error("lift_adjunction_left: snake verification failed: " + rep.summary());
    return out;
}

BimodAdjunction lift_adjunction_right(const Adjunction& adj, const Bimodule& x,
                                      const FrobeniusCertificate& cert_r, const Vec& alpha) {
    auto arep = verify_adjunction(adj);
    if (!arep.ok()) throw std::invalid_argument("lift_adjunction_right: invalid adjunction");
    require_separable_frobenius_data(cert_r, alpha);
    if (x.dim != adj.x_dim) throw std::invalid_argument("lift_adjunction_right: X dimension mismatch");
    const Algebra& r = cert_r.algebra;
    RatMatrix rho_m = rho_matrix(adj), lam = lambda_matrix(adj);
    const std::size_t dx = adj.x_dim, dy = adj.y_dim, dr = r.dim;
    const Vec& e = cert_r.casimir;
    const Vec& theta = cert_r.theta;

    // mirror-induced actions on Y:
    //   y . r = sum lambda(y (x) (r . rho_X)) rho_Y
    //   r . y = sum theta(r e'') lambda(y (x) (rho_X . e')) rho_Y
    Bimodule ymod;
    ymod.ring = r;
    ymod.dim = dy;
    ymod.left = RatMatrix(dy, dr * dy);
    ymod.right = RatMatrix(dy, dy * dr);
    for (std::size_t j = 0; j < dr; ++j) {
        Vec rj = r.basis_vec(j);
        for (std::size_t c = 0; c < dy; ++c) {
            Vec yc(dy);
            yc[c] = Rat(1);
            Vec right_val(dy), left_val(dy);
            for (std::size_t a = 0; a < dx; ++a)
                for (std::size_t c2 = 0; c2 < dy; ++c2) {
                    const Rat& w = rho_m.at(a, c2);
                    if (w.is_zero()) continue;
                    Vec xa(dx);
                    xa[a] = Rat(1);
                    Rat p_right = pair_lambda(lam, yc, x.left_action_of(rj).apply(xa));
                    if (!p_right.is_zero())
                        for (std::size_t b2 = 0; b2 < dy; ++b2)
                            right_val[b2] += w * p_right * (b2 == c2 ? Rat(1) : Rat(0));
                    for (std::size_t k = 0; k < dr; ++k)
                        for (std::size_t l = 0; l < dr; ++l) {
                            const Rat& wkl = e[k * dr + l];
                            if (wkl.is_zero()) continue;
                            Rat th;  // theta(r_j e_l)
                            Vec rl = r.product(rj, r.basis_vec(l));
                            for (std::size_t m = 0; m < dr; ++m) th += theta[m] * rl[m];
                            if (th.is_zero()) continue;
                            Rat p = pair_lambda(lam, yc, x.right_action_of(r.basis_vec(k)).apply(xa));
                            if (!p.is_zero()) left_val[c2] += w * wkl * th * p;
                        }
                }
            for (std::size_t b2 = 0; b2 < dy; ++b2) {
                ymod.right.at(b2, c * dr + j) = right_val[b2];
                ymod.left.at(b2, j * dy + c) = left_val[b2];
            }
        }
    }
    auto brep = validate_bimodule(ymod);
    if (!brep.ok())
        throw std::logic_error("lift_adjunction_right: induced structure invalid: " + brep.summary());

    BimodAdjunction out;
    out.ring = r;
    out.x = x;
    out.y = ymod;
    out.xy = tensor_over_R(x, ymod);
    out.yx = tensor_over_R(ymod, x);

    // rho0(1) = q(sum (rho_X . alpha) (x) rho_Y)
    Vec amb(dx * dy);
    for (std::size_t a = 0; a < dx; ++a)
        for (std::size_t c = 0; c < dy; ++c) {
            const Rat& w = rho_m.at(a, c);
            if (w.is_zero()) continue;
            Vec xa(dx);
            xa[a] = Rat(1);
            Vec xal = x.right_action_of(alpha).apply(xa);
            for (std::size_t b2 = 0; b2 < dx; ++b2) amb[b2 * dy + c] += w * xal[b2];
        }
    out.rho0 = out.xy.q.apply(amb);

    // lambda0 q (y (x) x) = sum lambda(y (x) (x . e')) e''
    RatMatrix gamma(dr, dy * dx);
    for (std::size_t c = 0; c < dy; ++c)
        for (std::size_t b = 0; b < dx; ++b) {
            Vec yc(dy), xb(dx);
            yc[c] = Rat(1);
            xb[b] = Rat(1);
            Vec val(dr);
            for (std::size_t k = 0; k < dr; ++k)
                for (std::size_t l = 0; l < dr; ++l) {
                    const Rat& wkl = e[k * dr + l];
                    if (wkl.is_zero()) continue;
                    Rat p = pair_lambda(lam, yc, x.right_action_of(r.basis_vec(k)).apply(xb));
                    if (!p.is_zero()) val = val + (wkl * p) * r.basis_vec(l);
                }
            for (std::size_t m = 0; m < dr; ++m) gamma.at(m, c * dx + b) = val[m];
        }
    auto lam0 = factor_through_quotient(gamma, out.yx.quo);
    if (!lam0) throw std::logic_error("lift_adjunction_right: lambda0 does not factor through q");
    out.lambda0 = *lam0;

    auto rep = verify_bimod_adjunction(out);
    if (!rep.ok())
        throw std::logic_error("lift_adjunction_right: snake verification failed: " + rep.summary());
    return out;
}

Adjunction project_adjunction(const BimodAdjunction& adj, const ForgetfulFrobStructure& s) {
    Adjunction out;
    out.x_dim = adj.x.dim;
    out.y_dim = adj.y.dim;
    RatMatrix psi = s.psi(adj.xy);
    out.rho = psi.apply(adj.rho0);
    out.lambda = RatMatrix::row(s.psi0()) * adj.lambda0 * adj.yx.q;
    return out;
}

RatMatrix phi_iso(const Algebra& s, const FrobeniusCertificate& cert_s) {
    auto rep = verify_frobenius(cert_s);
    if (!rep.ok()) throw std::invalid_argument("phi_iso: certificate not verified");
    RatMatrix phi = form_of_theta(s, cert_s.theta);
    if (!inverse(phi)) throw std::logic_error("phi_iso: degenerate on a verified certificate");
    // left S-linearity for the dual action (s.f)(x) = f(x s):
    // Phi . L_k = R_k^T . Phi for every basis element
    for (std::size_t k = 0; k < s.dim; ++k) {
        Vec ek = s.basis_vec(k);
        if (!(phi * s.left_mult(ek) == s.right_mult(ek).transpose() * phi))
            throw std::logic_error("phi_iso: transport identity fails");
    }
    return phi;
}

}  // namespace frobalg
