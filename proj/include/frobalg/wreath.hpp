#pragma once

#include <optional>
#include <variant>

#include "frobalg/extension.hpp"

namespace frobalg {

/// Wreath data (A, X, psi, zeta, sigma) in the category of rational vector
/// spaces:
///   psi  : X (x) A -> A (x) X
///   zeta : X (x) X -> A (x) X
///   sigma: 1 -> A (x) X
/// subject to the six wreath identities checked by validate_wreath.
struct WreathData {
    Algebra a;
    std::size_t x_dim = 0;
    RatMatrix psi;
    RatMatrix zeta;
    Vec sigma;
    std::string name;
};

/// Checks the six defining identities; violations are listed by number.
ValidationReport validate_wreath(const WreathData& w);

/// psi = flip, zeta = unit (x) multiplication, sigma = unit (x) unit.
/// The wreath product then coincides with the tensor product algebra.
WreathData trivial_wreath(const Algebra& a, const Algebra& x);

/// Smash product of a cyclic group acting on A by algebra automorphisms:
/// X = Q[C_n], psi(g^k (x) a) = phi^k(a) (x) g^k, zeta(g^j (x) g^k) =
/// 1 (x) g^{j+k}, sigma = 1 (x) 1. Requires phi^n = id.
WreathData smash_wreath(std::size_t group_order, const Algebra& a, const RatMatrix& action);

/// The wreath product algebra on A (x) X with
/// mu = (m (x) id)(id (x) zeta)(m (x) id (x) id)(id (x) psi (x) id),
/// unit sigma, and the canonical embedding iota(a) = (a . sigma_A) (x) sigma_X.
struct WreathProduct {
    WreathData data;
    Algebra product;
    AlgebraMorphism iota;
};
WreathProduct wreath_product(const WreathData& w);

/// Separability witness e: 1 -> A (x) X (x) X for the three wreath
/// identities (A-centrality, X-compatibility, zeta-normalization).
struct WreathSepWitness {
    Vec e;  // dimA * dimX * dimX
};

ValidationReport verify_wreath_separability(const WreathData& w, const WreathSepWitness& cert);

struct WreathSepReport {
    bool separable = false;
    std::optional<WreathSepWitness> witness;                 // direct route
    std::optional<ExtSeparabilityCertificate> ext_witness;   // extension route on iota
    bool routes_agree = false;
};

/// Solves the three identities for e exactly, then runs the extension-level
/// separability decision on iota and requires the verdicts to coincide.
WreathSepReport check_separable_wreath(const WreathData& w, const FrobSepOptions& opt = {});
/// Same, reusing a precomputed extension of the embedding iota.
WreathSepReport check_separable_wreath(const WreathData& w, const AlgebraExtension& ext,
                                       const FrobSepOptions& opt);

/// Frobenius witness at the wreath level: varsigma: X -> A with the
/// psi-intertwining law, and rho: 1 -> A (x) X (x) X with the two snake
/// identities for lambda = m(id (x) varsigma) zeta.
struct WreathFrobWitness {
    RatMatrix varsigma;  // dimA x dimX
    Vec rho;             // dimA * dimX * dimX
};

ValidationReport verify_wreath_frobenius(const WreathData& w, const WreathFrobWitness& cert);

struct WreathNotFrobeniusProof {
    std::size_t samples_tried = 0;
    std::size_t varsigma_dim = 0;
    std::string determinant;
    std::string detail;
};

struct WreathFrobReport {
    bool frobenius = false;
    std::optional<WreathFrobWitness> witness;
    std::optional<WreathNotFrobeniusProof> proof;
    ExtFrobeniusDecision ext_decision;  // extension route on iota
    bool routes_agree = false;
};

/// Decides the Frobenius property twice: by the (varsigma, rho) search at
/// the wreath level (sampling positives, symbolic pairing determinant for
/// negatives) and by the extension-level decision on iota. The two verdicts
/// must agree.
WreathFrobReport check_frobenius_wreath(const WreathData& w, const FrobSepOptions& opt = {});
/// Same, reusing a precomputed extension of the embedding iota.
WreathFrobReport check_frobenius_wreath(const WreathData& w, const AlgebraExtension& ext,
                                        const FrobSepOptions& opt);

}  // namespace frobalg
