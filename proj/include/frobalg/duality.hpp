#pragma once

#include <optional>

#include "frobalg/bimod.hpp"

namespace frobalg {

/// Adjunction (rho, lambda): Y -| X in plain vector spaces:
///   rho: 1 -> X (x) Y,  lambda: Y (x) X -> 1
/// subject to the snake identities
///   (id_X (x) lambda)(rho (x) id_X) = id_X
///   (lambda (x) id_Y)(id_Y (x) rho) = id_Y.
struct Adjunction {
    std::size_t x_dim = 0, y_dim = 0;
    Vec rho;           // x_dim * y_dim
    RatMatrix lambda;  // 1 x (y_dim * x_dim)
};

ValidationReport verify_adjunction(const Adjunction& adj);

/// Coordinate dual: rho = sum e_i (x) e*_i, lambda = evaluation.
Adjunction canonical_dual(std::size_t dim);

/// Adjunction in the category of R-bimodules: rho0 is an element of
/// X (x)_R Y (quotient coordinates), lambda0 a map Y (x)_R X -> R. The snake
/// identities are checked through the lifted morphisms, the associators and
/// the unit isomorphisms.
struct BimodAdjunction {
    Algebra ring;
    Bimodule x, y;
    TensorOverR xy, yx;
    Vec rho0;           // dim xy
    RatMatrix lambda0;  // ring.dim x dim yx
};

ValidationReport verify_bimod_adjunction(const BimodAdjunction& adj);

/// Lifts a plain adjunction along a separable-Frobenius structure on R when
/// the right object Y is an R-bimodule: X inherits an R-bimodule structure
/// (built from the adjunction, theta and e) and
///   rho0 = q (id_X (x) alpha-action) rho,   lambda0 q = (theta-contraction of e) lambda.
/// alpha must satisfy sum e' alpha e'' = 1.
BimodAdjunction lift_adjunction_left(const Adjunction& adj, const Bimodule& y,
                                     const FrobeniusCertificate& cert_r, const Vec& alpha);

/// Mirror construction when the left object X is the given R-bimodule.
BimodAdjunction lift_adjunction_right(const Adjunction& adj, const Bimodule& x,
                                      const FrobeniusCertificate& cert_r, const Vec& alpha);

/// The opposite direction: a bimodule adjunction projects to a plain one,
/// rho' = psi rho0 and lambda' = theta lambda0 q.
Adjunction project_adjunction(const BimodAdjunction& adj, const ForgetfulFrobStructure& s);

/// The structural isomorphism of a Frobenius algebra onto its coordinate
/// dual: Phi(s) = theta(- . s), i.e. the Gram matrix of theta. Verified
/// invertible and left S-linear for the dual action (s.f)(x) = f(x s).
RatMatrix phi_iso(const Algebra& s, const FrobeniusCertificate& cert_s);

}  // namespace frobalg
