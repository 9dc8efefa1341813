#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>

#include "frobalg/algebra.hpp"
#include "frobalg/poly.hpp"
#include "frobalg/rng.hpp"

namespace frobalg {

/// Thrown when a negative verdict would require a symbolic determinant
/// larger than the configured cap. Negative answers are never guessed.
struct SymbolicCapExceeded : std::runtime_error {
    explicit SymbolicCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Frobenius witness: a functional theta and a Casimir element e in A(x)A
/// satisfying
///   (m (x) id)(id (x) e) = (id (x) m)(e (x) id)
///   (theta (x) id) e = unit = (id (x) theta) e
/// together with the Nakayama automorphism of the induced form.
/// Convention used throughout: theta(a b) = theta(b N(a)).
struct FrobeniusCertificate {
    Algebra algebra;
    Vec theta;        // dim
    Vec casimir;      // dim^2, coordinates of e
    RatMatrix nakayama;  // dim x dim

    /// Gram matrix B with B[i][j] = theta(e_i e_j).
    RatMatrix form() const;
};

/// Separability witness: e in A(x)A with the Casimir identity and m e = unit.
struct SeparabilityCertificate {
    Algebra algebra;
    Vec idempotent;  // dim^2
};

struct NotFrobeniusProof {
    std::size_t samples_tried = 0;
    std::string determinant;  // symbolic determinant of the generic form, identically zero
    std::string detail;
};

using FrobeniusDecision = std::variant<FrobeniusCertificate, NotFrobeniusProof>;

inline bool is_frobenius(const FrobeniusDecision& d) {
    return std::holds_alternative<FrobeniusCertificate>(d);
}

struct FrobSepOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 32;
    std::size_t symbolic_cap = 6;
};

/// Certified separability decision: the Casimir identity and normalization
/// are one linear system in the dim^2 coordinates of e.
std::optional<SeparabilityCertificate> is_separable(const Algebra& a);

ValidationReport verify_separability(const SeparabilityCertificate& cert);

/// Searches for a functional theta with nondegenerate associated form.
/// Positive answers come with a fully verified certificate; negative answers
/// carry the identically-zero symbolic determinant of the generic form.
FrobeniusDecision find_frobenius(const Algebra& a, const FrobSepOptions& opt = {});

/// Checks the three defining equations of the pair (theta, e), the Nakayama
/// functional identity, and that the Nakayama matrix is a unital algebra
/// automorphism.
ValidationReport verify_frobenius(const FrobeniusCertificate& cert);

/// The unique N with theta(a b) = theta(b N(a)); computed as B^{-1} B^T.
RatMatrix nakayama(const FrobeniusCertificate& cert);

/// Solves m(m (x) id)(id (x) alpha (x) id) e = unit for alpha: 1 -> A.
/// When solvable the induced element (m (x) id)(id (x) alpha (x) id) e is a
/// separability idempotent; it is verified and returned alongside alpha.
struct AlphaWitness {
    Vec alpha;
    SeparabilityCertificate induced;
};
std::optional<AlphaWitness> frobenius_to_separable_alpha(const FrobeniusCertificate& cert);

struct FormRejection {
    enum Kind { NotAssociative, Degenerate } kind;
    std::string detail;
};

/// Builds a certificate from an associative nondegenerate form, with
/// theta(a) = B(a, 1) and e the dual-basis element of B.
std::variant<FrobeniusCertificate, FormRejection> frobenius_via_form(const Algebra& a,
                                                                     const BilinearForm& b);

/// A pair that is simultaneously Frobenius and a separability idempotent
/// (m e = unit). Exists for separable Frobenius algebras such as group
/// algebras in characteristic zero.
std::optional<FrobeniusCertificate> find_separable_frobenius(const Algebra& a,
                                                             const FrobSepOptions& opt = {});

// Shared low-level helpers (used by the extension and wreath deciders too).

/// Gram matrix of theta: B[i][j] = theta(e_i e_j).
RatMatrix form_of_theta(const Algebra& a, const Vec& theta);

/// Rows of the linear system expressing the Casimir identity on e.
RatMatrix casimir_constraints(const Algebra& a);

/// Generic form B(c) with one parameter per theta coordinate.
ParamMatrix generic_form(const Algebra& a);

}  // namespace frobalg
