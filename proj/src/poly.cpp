#include "frobalg/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace frobalg {

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

Poly Poly::variable(std::size_t idx, std::size_t nvars) {
    Poly p;
    p.nvars_ = nvars;
    Mono m(nvars, 0);
    m[idx] = 1;
    p.terms_[m] = Rat(1);
    return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    Mono key = m;
    key.resize(nvars_, 0);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    r.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m(r.nvars_, 0);
            for (std::size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
            for (std::size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Rat Poly::eval(const Vec& point) const {
    Rat acc;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::uint16_t k = 0; k < m[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << c.str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            os << "*" << (i < names.size() ? names[i] : "c" + std::to_string(i));
            if (m[i] > 1) os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

RatMatrix ParamMatrix::eval(const Vec& c) const {
    if (c.size() != nvars) throw std::invalid_argument("ParamMatrix::eval: wrong parameter count");
    RatMatrix m = constant;
    for (std::size_t k = 0; k < nvars; ++k)
        if (!c[k].is_zero()) m = m + linear[k].scaled(c[k]);
    return m;
}

Poly ParamMatrix::entry_poly(std::size_t i, std::size_t j) const {
    Poly p = Poly::constant(constant.at(i, j));
    for (std::size_t k = 0; k < nvars; ++k) {
        const Rat& a = linear[k].at(i, j);
        if (!a.is_zero()) p = p + Poly::variable(k, nvars) * Poly::constant(a);
    }
    return p;
}

// Laplace expansion down the columns: minor(rows_used, next_col) memoized on
// the row subset. 2^n subsets of rows, each combined with one column index.
Poly symbolic_determinant(const ParamMatrix& m) {
    const std::size_t n = m.n;
    if (n == 0) return Poly::constant(Rat(1));
    if (n > 20) throw std::invalid_argument("symbolic_determinant: size too large");
    std::vector<Poly> memo(std::size_t(1) << n);
    std::vector<bool> have(std::size_t(1) << n, false);
    // det of the submatrix using row set `mask` and the last popcount(mask) columns
    auto popcount = [](std::size_t x) {
        std::size_t c = 0;
        while (x) { c += x & 1; x >>= 1; }
        return c;
    };
    std::vector<std::size_t> order(std::size_t(1) << n);
    for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return popcount(a) < popcount(b);
    });
    for (std::size_t mask : order) {
        std::size_t k = popcount(mask);
        if (k == 0) {
            memo[mask] = Poly::constant(Rat(1));
            have[mask] = true;
            continue;
        }
        std::size_t col = n - k;  // expand along column `col`
        Poly acc;
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            std::size_t sub = mask & ~(std::size_t(1) << i);
            Poly term = m.entry_poly(i, col) * memo[sub];
            acc = (sign > 0) ? acc + term : acc - term;
            sign = -sign;
        }
        memo[mask] = acc;
        have[mask] = true;
    }
    return memo[(std::size_t(1) << n) - 1];
}

Vec nonzero_point(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("nonzero_point: zero polynomial");
    const std::size_t n = p.nvars();
    if (n == 0) return {};
    // Exhaustive sweep over small grids when feasible.
    for (long h = 1; h <= 3; ++h) {
        const long span = 2 * h + 1;
        std::size_t total = 1;
        bool feasible = true;
        for (std::size_t i = 0; i < n; ++i) {
            total *= span;
            if (total > 200000) { feasible = false; break; }
        }
        if (!feasible) break;
        for (std::size_t t = 0; t < total; ++t) {
            std::size_t x = t;
            Vec pt(n);
            for (std::size_t i = 0; i < n; ++i) {
                pt[i] = Rat(static_cast<long>(x % span) - h);
                x /= span;
            }
            if (!p.eval(pt).is_zero()) return pt;
        }
    }
    // Otherwise sample with a fixed seed over growing ranges; a nonzero
    // polynomial vanishes on at most deg/range of each range, so this
    // terminates quickly and reproducibly.
    std::mt19937_64 gen(0x5eed);
    for (long range = 8; range <= (1L << 30); range *= 2) {
        std::uniform_int_distribution<long> dist(-range, range);
        for (int t = 0; t < 64; ++t) {
            Vec pt(n);
            for (std::size_t i = 0; i < n; ++i) pt[i] = Rat(dist(gen));
            if (!p.eval(pt).is_zero()) return pt;
        }
    }
    throw std::runtime_error("nonzero_point: search exhausted");
}

}  // namespace frobalg
