#pragma once

#include <optional>

#include "frobalg/algebra.hpp"
#include "frobalg/frobsep.hpp"
#include "frobalg/quotient.hpp"

namespace frobalg {

/// R-bimodule given by action tensors, as matrices in the fixed tensor basis:
///   left  : R (x) X -> X   (dim x (dimR*dim))
///   right : X (x) R -> X   (dim x (dim*dimR))
struct Bimodule {
    Algebra ring;
    std::size_t dim = 0;
    RatMatrix left;
    RatMatrix right;

    /// Matrix of x |-> r . x.
    RatMatrix left_action_of(const Vec& r) const;
    /// Matrix of x |-> x . r.
    RatMatrix right_action_of(const Vec& r) const;
};

/// Left/right module axioms plus commutation of the two actions.
ValidationReport validate_bimodule(const Bimodule& m);

/// R as a bimodule over itself.
Bimodule regular_bimodule(const Algebra& r);

/// The target of an algebra morphism i: R -> S as an R-bimodule,
/// r.s = i(r)s and s.r = s i(r).
Bimodule bimodule_along(const AlgebraMorphism& i);

Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

/// X (x)_R Y realized as the quotient of X (x) Y by the span of
/// (x.r) (x) y - x (x) (r.y), with its projection q and the induced outer
/// R-actions (left action through X, right action through Y).
struct TensorOverR {
    Bimodule left_mod;   // X
    Bimodule right_mod;  // Y
    QuotientSpace quo;
    RatMatrix q;              // quo.projection, kept for readability
    RatMatrix induced_left;   // R (x) Q -> Q
    RatMatrix induced_right;  // Q (x) R -> Q

    std::size_t dim() const { return quo.dim(); }

    /// Factors q . (op (x) id_Y) through the quotient (op acts on X).
    /// nullopt when the operator does not descend.
    std::optional<RatMatrix> descend_left_operator(const RatMatrix& op) const;
    /// Factors q . (id_X (x) op) through the quotient (op acts on Y).
    std::optional<RatMatrix> descend_right_operator(const RatMatrix& op) const;
};

TensorOverR tensor_over_R(const Bimodule& x, const Bimodule& y);

/// Packages X (x)_R Y with its induced actions as a bimodule again.
Bimodule as_bimodule(const TensorOverR& t);

struct CanonicalIso {
    RatMatrix forward;
    RatMatrix inverse;
};

/// Upsilon: X (x)_R R -> X, determined by Upsilon . q = right action;
/// inverse q . (id (x) unit). Requires t = X (x)_R R.
CanonicalIso upsilon(const TensorOverR& t);
/// Upsilon': R (x)_R Y -> Y, determined by Upsilon' . q = left action.
CanonicalIso upsilon_prime(const TensorOverR& t);

/// Lift of a left-R-linear f: X -> Y to M (x)_R X -> M (x)_R Y,
/// the unique map with lift . q_{M,X} = q_{M,Y} . (id (x) f).
/// Throws std::invalid_argument when f is not left R-linear.
RatMatrix lift_tilde(const TensorOverR& mx, const TensorOverR& my, const RatMatrix& f);

/// Lift of a right-R-linear g: M -> N to M (x)_R Y -> N (x)_R Y.
RatMatrix lift_hat(const TensorOverR& my, const TensorOverR& ny, const RatMatrix& g);

/// The canonical associators between (X (x)_R Y) (x)_R Z and
/// X (x)_R (Y (x)_R Z); mutually inverse by construction (verified).
struct Associator {
    TensorOverR xy, yz;          // inner tensors
    TensorOverR xy_z, x_yz;      // the two bracketings
    RatMatrix sigma;             // (XY)Z -> X(YZ)
    RatMatrix gamma;             // X(YZ) -> (XY)Z
};
Associator associator(const Bimodule& x, const Bimodule& y, const Bimodule& z);

/// Frobenius-monoidal structure of the forgetful functor from R-bimodules,
/// determined by a Frobenius certificate of R: psi0 = theta and
/// psi_{X,Y} . q = (nu_X (x) mu_Y)(id (x) e (x) id).
struct ForgetfulFrobStructure {
    Algebra ring;
    FrobeniusCertificate cert;

    Vec psi0() const { return cert.theta; }
    /// psi_{X,Y}: X (x)_R Y -> X (x) Y.
    RatMatrix psi(const TensorOverR& t) const;
};

ForgetfulFrobStructure forgetful_frob_structure(const Algebra& r, const FrobeniusCertificate& cert);

/// Verifies, for the triple (X, Y, Z): the monoidal and opmonoidal unit and
/// associativity diagrams, both Frobenius compatibility squares, and the
/// R-bilinearity of psi. When the certificate is also a separability
/// idempotent (m e = unit), additionally checks q . psi = id.
ValidationReport verify_frobenius_monoidal(const ForgetfulFrobStructure& s, const Bimodule& x,
                                           const Bimodule& y, const Bimodule& z);

}  // namespace frobalg
