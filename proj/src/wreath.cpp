#include "frobalg/wreath.hpp"

#include <stdexcept>

namespace frobalg {

namespace {

struct WreathOps {
    const WreathData& w;
    std::size_t da, dx;
    RatMatrix ida, idx, idxx, idaxx;
    RatMatrix m;       // A (x) A -> A
    RatMatrix ucol;    // 1 -> A

    explicit WreathOps(const WreathData& w_)
        : w(w_),
          da(w_.a.dim),
          dx(w_.x_dim),
          ida(RatMatrix::identity(da)),
          idx(RatMatrix::identity(dx)),
          idxx(RatMatrix::identity(dx * dx)),
          idaxx(RatMatrix::identity(da * dx * dx)),
          m(w_.a.mult),
          ucol(RatMatrix::column(w_.a.unit)) {}

    // twisted right translation A (x) X (x) X (x) A -> A (x) X (x) X
    RatMatrix twist() const {
        return kron(m, idxx) * kron(ida, kron(w.psi, idx)) * kron(ida, kron(idx, w.psi));
    }
    // left multiplication on the A-factor
    RatMatrix left_mult_axx(const Vec& a) const { return kron(w.a.left_mult(a), idxx); }

    // the zeta-contraction A (x) X (x) X -> A (x) X
    RatMatrix zeta_contract() const { return kron(m, idx) * kron(ida, w.zeta); }
};

}  // namespace

ValidationReport validate_wreath(const WreathData& w) {
    ValidationReport rep;
    const std::size_t da = w.a.dim, dx = w.x_dim;
    if (w.psi.rows() != da * dx || w.psi.cols() != dx * da) rep.fail("psi has wrong shape");
    if (w.zeta.rows() != da * dx || w.zeta.cols() != dx * dx) rep.fail("zeta has wrong shape");
    if (w.sigma.size() != da * dx) rep.fail("sigma has wrong length");
    auto arep = validate_algebra(w.a);
    if (!arep.ok()) rep.fail("coefficient algebra invalid: " + arep.summary());
    if (!rep.ok()) return rep;

    RatMatrix ida = RatMatrix::identity(da), idx = RatMatrix::identity(dx);
    RatMatrix idxx = RatMatrix::identity(dx * dx);
    const RatMatrix& m = w.a.mult;
    RatMatrix ucol = RatMatrix::column(w.a.unit);
    RatMatrix scol = RatMatrix::column(w.sigma);

    // (1) psi respects multiplication and unit of A
    if (!(kron(m, idx) * kron(ida, w.psi) * kron(w.psi, ida) == w.psi * kron(idx, m)))
        rep.fail("identity 1 fails: psi against the multiplication of A");
    if (!(w.psi * kron(idx, ucol) == kron(ucol, idx)))
        rep.fail("identity 1 fails: psi against the unit of A");
    // (2) sigma intertwines
    if (!(kron(m, idx) * kron(ida, w.psi) * kron(scol, ida) == kron(m, idx) * kron(ida, scol)))
        rep.fail("identity 2 fails: sigma is not psi-central");
    // (3) zeta intertwines
    if (!(kron(m, idx) * kron(ida, w.psi) * kron(w.zeta, ida) ==
          kron(m, idx) * kron(ida, w.zeta) * kron(w.psi, idx) * kron(idx, w.psi)))
        rep.fail("identity 3 fails: zeta is not a psi-morphism");
    // (4) zeta associativity
    if (!(kron(m, idx) * kron(ida, w.zeta) * kron(w.zeta, idx) ==
          kron(m, idx) * kron(ida, w.zeta) * kron(w.psi, idx) * kron(idx, w.zeta)))
        rep.fail("identity 4 fails: zeta is not associative");
    // (5) sigma is a left unit for zeta
    if (!(kron(m, idx) * kron(ida, w.zeta) * kron(scol, idx) == kron(ucol, idx)))
        rep.fail("identity 5 fails: sigma is not a left unit");
    // (6) sigma is a right unit for zeta
    if (!(kron(m, idx) * kron(ida, w.zeta) * kron(w.psi, idx) * kron(idx, scol) ==
          kron(ucol, idx)))
        rep.fail("identity 6 fails: sigma is not a right unit");
    return rep;
}

WreathData trivial_wreath(const Algebra& a, const Algebra& x) {
    WreathData w;
    w.a = a;
    w.x_dim = x.dim;
    w.psi = RatMatrix(a.dim * x.dim, x.dim * a.dim);
    for (std::size_t xi = 0; xi < x.dim; ++xi)
        for (std::size_t ai = 0; ai < a.dim; ++ai)
            w.psi.at(ai * x.dim + xi, xi * a.dim + ai) = Rat(1);
    w.zeta = kron(RatMatrix::column(a.unit), x.mult);
    w.sigma = Vec(a.dim * x.dim);
    for (std::size_t ai = 0; ai < a.dim; ++ai)
        for (std::size_t xi = 0; xi < x.dim; ++xi) w.sigma[ai * x.dim + xi] = a.unit[ai] * x.unit[xi];
    w.name = "trivial(" + a.name + ", " + x.name + ")";
    auto rep = validate_wreath(w);
    if (!rep.ok()) throw std::logic_error("trivial_wreath: " + rep.summary());
    return w;
}

WreathData smash_wreath(std::size_t group_order, const Algebra& a, const RatMatrix& action) {
    if (group_order == 0) throw std::invalid_argument("smash_wreath: group order must be positive");
    const std::size_t n = group_order, da = a.dim;
    AlgebraMorphism phi{a, a, action};
    auto mrep = validate_morphism(phi);
    if (!mrep.ok())
        throw std::invalid_argument("smash_wreath: action is not an algebra morphism: " + mrep.summary());
    // powers of the action; phi^n must be the identity
    std::vector<RatMatrix> powers{RatMatrix::identity(da)};
    for (std::size_t k = 1; k < n; ++k) powers.push_back(action * powers.back());
    if (!(action * powers.back()).is_identity())
        throw std::invalid_argument("smash_wreath: action does not have the group order");

    WreathData w;
    w.a = a;
    w.x_dim = n;
    w.psi = RatMatrix(da * n, n * da);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t ai = 0; ai < da; ++ai)
            for (std::size_t b = 0; b < da; ++b)
                if (!powers[k].at(b, ai).is_zero())
                    w.psi.at(b * n + k, k * da + ai) = powers[k].at(b, ai);
    w.zeta = RatMatrix(da * n, n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t b = 0; b < da; ++b)
                if (!a.unit[b].is_zero()) w.zeta.at(b * n + (j + k) % n, j * n + k) = a.unit[b];
    w.sigma = Vec(da * n);
    for (std::size_t b = 0; b < da; ++b) w.sigma[b * n + 0] = a.unit[b];
    w.name = "smash(C" + std::to_string(n) + ", " + a.name + ")";
    auto rep = validate_wreath(w);
    if (!rep.ok()) throw std::logic_error("smash_wreath: " + rep.summary());
    return w;
}

WreathProduct wreath_product(const WreathData& w) {
    auto wrep = validate_wreath(w);
    if (!wrep.ok()) throw std::invalid_argument("wreath_product: data not validated: " + wrep.summary());
    const std::size_t da = w.a.dim, dx = w.x_dim, d = da * dx;
    RatMatrix ida = RatMatrix::identity(da), idx = RatMatrix::identity(dx);

    WreathProduct p;
    p.data = w;
    p.product.dim = d;
    p.product.mult = kron(w.a.mult, idx) * kron(ida, w.zeta) *
                     kron(w.a.mult, RatMatrix::identity(dx * dx)) *
                     kron(ida, kron(w.psi, idx));
    p.product.unit = w.sigma;
    for (std::size_t ai = 0; ai < da; ++ai)
        for (std::size_t xi = 0; xi < dx; ++xi)
            p.product.labels.push_back(w.a.label(ai) + "#x" + std::to_string(xi));
    p.product.name = w.a.name + "#X[" + w.name + "]";

    auto arep = validate_algebra(p.product);
    if (!arep.ok()) throw std::logic_error("wreath_product: product not associative/unital: " + arep.summary());

    p.iota = AlgebraMorphism{w.a, p.product,
                             kron(w.a.mult, idx) * kron(ida, RatMatrix::column(w.sigma))};
    auto irep = validate_morphism(p.iota);
    if (!irep.ok()) throw std::logic_error("wreath_product: iota is not a morphism: " + irep.summary());
    return p;
}

namespace {

// Constraint rows for the A-centrality of an element of A (x) X (x) X:
// a . v = (twisted right translation by a) v for every basis element a.
RatMatrix wreath_centrality(const WreathOps& ops) {
    std::vector<RatMatrix> blocks;
    RatMatrix tw = ops.twist();
    for (std::size_t i = 0; i < ops.da; ++i) {
        Vec ai = ops.w.a.basis_vec(i);
        blocks.push_back(ops.left_mult_axx(ai) -
                         tw * kron(ops.idaxx, RatMatrix::column(ai)));
    }
    return vstack(blocks);
}

// X-compatibility constraint rows for the separability identity:
// zeta-multiply on the left by x = psi-shift then zeta-multiply on the right.
RatMatrix wreath_x_compat(const WreathOps& ops) {
    const WreathData& w = ops.w;
    RatMatrix lhs_core = kron(ops.m, ops.idxx) * kron(ops.ida, kron(w.zeta, ops.idx)) *
                         kron(w.psi, ops.idxx);
    RatMatrix rhs_core = kron(ops.m, ops.idxx) * kron(ops.ida, kron(w.psi, ops.idx)) *
                         kron(ops.ida, kron(ops.idx, w.zeta));
    std::vector<RatMatrix> blocks;
    for (std::size_t j = 0; j < ops.dx; ++j) {
        Vec xj(ops.dx);
        xj[j] = Rat(1);
        RatMatrix lhs = lhs_core * kron(RatMatrix::column(xj), ops.idaxx);
        RatMatrix rhs = rhs_core * kron(ops.idaxx, RatMatrix::column(xj));
        blocks.push_back(lhs - rhs);
    }
    return vstack(blocks);
}

}  // namespace

ValidationReport verify_wreath_separability(const WreathData& w, const WreathSepWitness& cert) {
    ValidationReport rep;
    WreathOps ops(w);
    if (cert.e.size() != ops.da * ops.dx * ops.dx) {
        rep.fail("witness has wrong length");
        return rep;
    }
    if (!is_zero(wreath_centrality(ops).apply(cert.e))) rep.fail("e is not A-central");
    if (!is_zero(wreath_x_compat(ops).apply(cert.e))) rep.fail("e fails the X-compatibility identity");
    if (ops.zeta_contract().apply(cert.e) != w.sigma) rep.fail("zeta-contraction of e is not sigma");
    return rep;
}

WreathSepReport check_separable_wreath(const WreathData& w, const FrobSepOptions& opt) {
    auto prod = wreath_product(w);
    return check_separable_wreath(w, make_extension(prod.iota), opt);
}

WreathSepReport check_separable_wreath(const WreathData& w, const AlgebraExtension& ext,
                                       [[maybe_unused]] const FrobSepOptions& opt) {
    auto wrep = validate_wreath(w);
    if (!wrep.ok()) throw std::invalid_argument("check_separable_wreath: invalid data");
    WreathOps ops(w);
    WreathSepReport rep;

    RatMatrix cen = wreath_centrality(ops);
    RatMatrix xcmp = wreath_x_compat(ops);
    RatMatrix norm = ops.zeta_contract();
    RatMatrix sys = vstack({cen, xcmp, norm});
    Vec rhs(sys.rows());
    for (std::size_t k = 0; k < w.sigma.size(); ++k)
        rhs[cen.rows() + xcmp.rows() + k] = w.sigma[k];
    if (auto e = solve(sys, rhs)) {
        WreathSepWitness cert{*e};
        auto v = verify_wreath_separability(w, cert);
        if (!v.ok()) throw std::logic_error("check_separable_wreath: witness failed: " + v.summary());
        rep.separable = true;
        rep.witness = cert;
    }

    // extension route on iota
    rep.ext_witness = check_separable_extension(ext);
    rep.routes_agree = rep.separable == rep.ext_witness.has_value();
    return rep;
}

namespace {

RatMatrix lambda_of_varsigma(const WreathOps& ops, const RatMatrix& varsigma) {
    return ops.m * kron(ops.ida, varsigma) * ops.w.zeta;  // X (x) X -> A
}

std::vector<RatMatrix> varsigma_space(const WreathOps& ops) {
    const WreathData& w = ops.w;
    // m (id (x) varsigma) psi = m (varsigma (x) id) : X (x) A -> A
    const std::size_t rows = ops.da * (ops.dx * ops.da);
    RatMatrix sys(rows, ops.da * ops.dx);
    for (std::size_t r = 0; r < ops.da; ++r)
        for (std::size_t c = 0; c < ops.dx; ++c) {
            RatMatrix cand(ops.da, ops.dx);
            cand.at(r, c) = Rat(1);
            RatMatrix resid =
                ops.m * kron(ops.ida, cand) * w.psi - ops.m * kron(cand, ops.ida);
            for (std::size_t i = 0; i < resid.rows(); ++i)
                for (std::size_t j = 0; j < resid.cols(); ++j)
                    sys.at(i * resid.cols() + j, r * ops.dx + c) = resid.at(i, j);
        }
    std::vector<RatMatrix> out;
    for (const auto& v : kernel_basis(sys)) {
        RatMatrix m(ops.da, ops.dx);
        for (std::size_t r = 0; r < ops.da; ++r)
            for (std::size_t c = 0; c < ops.dx; ++c) m.at(r, c) = v[r * ops.dx + c];
        out.push_back(std::move(m));
    }
    return out;
}

// the two snake systems for rho given lambda
RatMatrix snake_system(const WreathOps& ops, const RatMatrix& lambda, Vec& rhs_out) {
    const WreathData& w = ops.w;
    RatMatrix s1_core = kron(ops.m, ops.idx) * kron(ops.ida, kron(lambda, ops.idx)) *
                        kron(w.psi, ops.idxx);
    RatMatrix s2_core = kron(ops.m, ops.idx) * kron(ops.ida, w.psi) *
                        kron(ops.ida, kron(ops.idx, lambda));
    std::vector<RatMatrix> blocks;
    Vec rhs;
    for (std::size_t j = 0; j < ops.dx; ++j) {
        Vec xj(ops.dx);
        xj[j] = Rat(1);
        blocks.push_back(s1_core * kron(RatMatrix::column(xj), ops.idaxx));
        Vec target = kron(ops.ucol, ops.idx).apply(xj);
        rhs.insert(rhs.end(), target.begin(), target.end());
    }
    for (std::size_t j = 0; j < ops.dx; ++j) {
        Vec xj(ops.dx);
        xj[j] = Rat(1);
        blocks.push_back(s2_core * kron(ops.idaxx, RatMatrix::column(xj)));
        Vec target = kron(ops.ucol, ops.idx).apply(xj);
        rhs.insert(rhs.end(), target.begin(), target.end());
    }
    rhs_out = std::move(rhs);
    return vstack(blocks);
}

bool lambda_laws_hold(const WreathOps& ops, const RatMatrix& lambda) {
    const WreathData& w = ops.w;
    // right translation law
    RatMatrix lhs2 = ops.m * kron(lambda, ops.ida);
    RatMatrix rhs2 = ops.m * kron(ops.ida, lambda) * kron(w.psi, ops.idx) * kron(ops.idx, w.psi);
    if (!(lhs2 == rhs2)) return false;
    // associativity against zeta
    RatMatrix lhs3 = ops.m * kron(ops.ida, lambda) * kron(w.zeta, ops.idx);
    RatMatrix rhs3 = ops.m * kron(ops.ida, lambda) * kron(w.psi, ops.idx) * kron(ops.idx, w.zeta);
    return lhs3 == rhs3;
}

}  // namespace

ValidationReport verify_wreath_frobenius(const WreathData& w, const WreathFrobWitness& cert) {
    ValidationReport rep;
    WreathOps ops(w);
    if (cert.varsigma.rows() != ops.da || cert.varsigma.cols() != ops.dx ||
        cert.rho.size() != ops.da * ops.dx * ops.dx) {
        rep.fail("witness has wrong shape");
        return rep;
    }
    // varsigma intertwines psi
    if (!(ops.m * kron(ops.ida, cert.varsigma) * w.psi == ops.m * kron(cert.varsigma, ops.ida)))
        rep.fail("varsigma does not intertwine psi");
    RatMatrix lambda = lambda_of_varsigma(ops, cert.varsigma);
    if (!lambda_laws_hold(ops, lambda)) rep.fail("lambda fails its translation/associativity laws");
    if (!is_zero(wreath_centrality(ops).apply(cert.rho))) rep.fail("rho is not A-central");
    Vec rhs;
    RatMatrix snakes = snake_system(ops, lambda, rhs);
    if (!(snakes.apply(cert.rho) == rhs)) rep.fail("snake identities fail");
    return rep;
}

WreathFrobReport check_frobenius_wreath(const WreathData& w, const FrobSepOptions& opt) {
    auto prod = wreath_product(w);
    return check_frobenius_wreath(w, make_extension(prod.iota), opt);
}

WreathFrobReport check_frobenius_wreath(const WreathData& w, const AlgebraExtension& ext,
                                        const FrobSepOptions& opt) {
    auto wrep = validate_wreath(w);
    if (!wrep.ok()) throw std::invalid_argument("check_frobenius_wreath: invalid data");
    WreathOps ops(w);
    WreathFrobReport rep;

    auto space = varsigma_space(ops);
    WreathNotFrobeniusProof proof;
    proof.varsigma_dim = space.size();

    RatMatrix cen = wreath_centrality(ops);
    RatRng rng(opt.seed);
    auto try_varsigma = [&](const RatMatrix& vs) -> bool {
        RatMatrix lambda = lambda_of_varsigma(ops, vs);
        if (!lambda_laws_hold(ops, lambda))
            throw std::logic_error("check_frobenius_wreath: lambda laws fail on the varsigma space");
        Vec rhs_snakes;
        RatMatrix snakes = snake_system(ops, lambda, rhs_snakes);
        RatMatrix sys = vstack({cen, snakes});
        Vec rhs(sys.rows());
        for (std::size_t k = 0; k < rhs_snakes.size(); ++k) rhs[cen.rows() + k] = rhs_snakes[k];
        auto rho = solve(sys, rhs);
        if (!rho) return false;
        WreathFrobWitness cert{vs, *rho};
        auto v = verify_wreath_frobenius(w, cert);
        if (!v.ok()) throw std::logic_error("check_frobenius_wreath: witness failed: " + v.summary());
        rep.frobenius = true;
        rep.witness = cert;
        return true;
    };

    bool decided = false;
    if (!space.empty()) {
        for (std::size_t t = 0; t < opt.trials && !decided; ++t) {
            RatMatrix vs(ops.da, ops.dx);
            for (const auto& b : space) vs = vs + b.scaled(rng.rational());
            decided = try_varsigma(vs);
            if (!decided) ++proof.samples_tried;
        }
    }

    if (!decided) {
        // negative must be certified: pairing determinant of
        // theta(s . -) over the varsigma space, computed on the wreath side.
        const Algebra& s = ext.top();
        auto rlin = right_linear_hom_basis(ext);
        if (rlin.size() != s.dim) {
            proof.detail = "hom-space dimension mismatch";
            rep.proof = proof;
        } else if (space.empty()) {
            proof.detail = "no psi-intertwining varsigma exists";
            rep.proof = proof;
        } else if (s.dim > opt.symbolic_cap) {
            throw SymbolicCapExceeded("check_frobenius_wreath: dim " + std::to_string(s.dim) +
                                      " exceeds the symbolic cap");
        } else {
            ParamMatrix pm;
            pm.n = s.dim;
            pm.nvars = space.size();
            pm.constant = RatMatrix(s.dim, s.dim);
            for (const auto& b : space) {
                // theta(x # y) = m(id (x) varsigma) on A (x) X
                RatMatrix theta = ops.m * kron(ops.ida, b);
                pm.linear.push_back(pairing_matrix(ext, theta, rlin));
            }
            Poly det = symbolic_determinant(pm);
            if (det.is_zero()) {
                proof.determinant = "0";
                proof.detail = "pairing determinant vanishes identically over the varsigma space";
                rep.proof = proof;
            } else {
                Vec c = nonzero_point(det);
                RatMatrix vs(ops.da, ops.dx);
                for (std::size_t k = 0; k < space.size(); ++k) vs = vs + space[k].scaled(c[k]);
                if (!try_varsigma(vs))
                    throw std::logic_error(
                        "check_frobenius_wreath: invertible pairing point has no snake witness");
            }
        }
    }

    rep.ext_decision = check_frobenius_extension(ext, opt);
    rep.routes_agree = rep.frobenius == ext_is_frobenius(rep.ext_decision);
    return rep;
}

}  // namespace frobalg
