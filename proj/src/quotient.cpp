#include "frobalg/quotient.hpp"

#include <map>
#include <stdexcept>

namespace frobalg {

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::contains: size mismatch");
    if (is_zero(v)) return true;
    RatMatrix m(basis.size(), ambient_dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = basis[i][j];
    return solve(m.transpose(), v).has_value();
}

namespace {

using SparseRow = std::map<std::size_t, Rat>;

// Incremental sparse row echelon keyed on the leading coordinate. Produces
// the same reduced echelon basis as dense RREF, but relation sets coming
// from structure constants are very sparse and reduce cheaply.
struct SparseEchelon {
    std::map<std::size_t, SparseRow> pivot_rows;  // pivot column -> normalized row

    void insert(SparseRow row) {
        while (!row.empty()) {
            auto lead = row.begin()->first;
            auto it = pivot_rows.find(lead);
            if (it == pivot_rows.end()) {
                Rat inv = row.begin()->second.inv();
                for (auto& [c, v] : row) v *= inv;
                pivot_rows.emplace(lead, std::move(row));
                return;
            }
            Rat f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -(f * v));
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
        }
    }

    // Back-substitute so each pivot column appears in exactly one row.
    void reduce_fully() {
        for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
            for (auto jt = pivot_rows.begin(); jt->first != it->first; ++jt) {
                auto ft = jt->second.find(it->first);
                if (ft == jt->second.end()) continue;
                Rat f = ft->second;
                for (const auto& [c, v] : it->second) {
                    auto kt = jt->second.find(c);
                    if (kt == jt->second.end()) {
                        jt->second.emplace(c, -(f * v));
                    } else {
                        kt->second -= f * v;
                        if (kt->second.is_zero()) jt->second.erase(kt);
                    }
                }
            }
        }
    }
};

}  // namespace

QuotientSpace quotient_by(std::size_t ambient_dim, const std::vector<Vec>& gens) {
    for (const auto& g : gens)
        if (g.size() != ambient_dim) throw std::invalid_argument("quotient_by: generator size mismatch");

    SparseEchelon ech;
    for (const auto& g : gens) {
        SparseRow row;
        for (std::size_t j = 0; j < ambient_dim; ++j)
            if (!g[j].is_zero()) row.emplace(j, g[j]);
        ech.insert(std::move(row));
    }
    ech.reduce_fully();

    const std::size_t r = ech.pivot_rows.size();
    const std::size_t qdim = ambient_dim - r;

    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.killed.ambient_dim = ambient_dim;
    std::vector<bool> is_pivot(ambient_dim, false);
    for (const auto& [p, row] : ech.pivot_rows) {
        is_pivot[p] = true;
        Vec v(ambient_dim);
        for (const auto& [c, val] : row) v[c] = val;
        q.killed.basis.push_back(std::move(v));
    }
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) free.push_back(j);

    // projection: subtract the pivot components along the RREF rows, keep
    // the free coordinates. section: embed on the free coordinates.
    q.projection = RatMatrix(qdim, ambient_dim);
    for (std::size_t fi = 0; fi < qdim; ++fi) q.projection.at(fi, free[fi]) = Rat(1);
    {
        std::size_t i = 0;
        for (const auto& [p, row] : ech.pivot_rows) {
            for (std::size_t fi = 0; fi < qdim; ++fi) {
                auto it = row.find(free[fi]);
                if (it != row.end()) q.projection.at(fi, p) = -it->second;
            }
            ++i;
        }
    }
    q.section = RatMatrix(ambient_dim, qdim);
    for (std::size_t fi = 0; fi < qdim; ++fi) q.section.at(free[fi], fi) = Rat(1);
    return q;
}

std::optional<RatMatrix> factor_through_quotient(const RatMatrix& f, const QuotientSpace& q) {
    if (f.cols() != q.ambient_dim) throw std::invalid_argument("factor_through_quotient: shape mismatch");
    for (const auto& k : q.killed.basis)
        if (!is_zero(f.apply(k))) return std::nullopt;
    return f * q.section;
}

}  // namespace frobalg
