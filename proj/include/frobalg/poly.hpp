#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frobalg/matrix.hpp"

namespace frobalg {

/// Sparse multivariate polynomial over Rat. Only used for symbolic
/// determinant expansion, so the API is minimal.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly variable(std::size_t idx, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    Rat eval(const Vec& point) const;

    std::size_t term_count() const { return terms_.size(); }
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    using Mono = std::vector<std::uint16_t>;  // exponent vector, length nvars_
    std::size_t nvars_ = 0;
    std::map<Mono, Rat> terms_;

    void add_term(const Mono& m, const Rat& c);
};

/// A matrix whose entries are affine in a parameter vector c:
/// entry(i,j) = const(i,j) + sum_k c_k * lin_k(i,j).
struct ParamMatrix {
    std::size_t n = 0;        // square size
    std::size_t nvars = 0;    // number of parameters
    RatMatrix constant;                // n x n
    std::vector<RatMatrix> linear;     // nvars matrices, each n x n

    RatMatrix eval(const Vec& c) const;
    Poly entry_poly(std::size_t i, std::size_t j) const;
};

/// Symbolic determinant by Laplace expansion with memoized minors.
/// Cost grows with 2^n; callers gate n by the symbolic cap.
Poly symbolic_determinant(const ParamMatrix& m);

/// Deterministically finds an integer point where p is nonzero, by sweeping
/// points of increasing height. Requires p != 0.
Vec nonzero_point(const Poly& p);

}  // namespace frobalg
