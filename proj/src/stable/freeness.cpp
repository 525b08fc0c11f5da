#include "stabmod/stable/stable.hpp"

#include <stdexcept>

namespace stabmod::stable {

namespace {

/// Rows spanning I(A) m.
BitMatrix radical_span(const AModule& m)
{
    std::vector<BitVector> rows;
    for (const auto& g : m.gens) {
        const auto gt = g.transpose();
        for (std::size_t r = 0; r < gt.rows(); ++r) {
            auto v = gt.row(r);
            if (!v.is_zero())
                rows.push_back(std::move(v));
        }
    }
    return BitMatrix::from_rows(rows, static_cast<std::size_t>(m.dim()));
}

} // namespace

int radical_quotient_dim(const AModule& m)
{
    return m.dim() - static_cast<int>(f2::rank(radical_span(m)));
}

bool is_free(const AModule& m)
{
    return m.dim() == m.alg->dim() * radical_quotient_dim(m);
}

Cover minimal_cover(const AModule& m)
{
    const std::size_t n = static_cast<std::size_t>(m.dim());
    const auto r = f2::rref(radical_span(m));
    std::vector<bool> pivot(n, false);
    for (auto p : r.pivots)
        pivot[p] = true;
    Cover c;
    std::vector<std::size_t> lifts;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) {
            lifts.push_back(i);
            c.generator_degrees.push_back(m.degrees[i]);
        }
    auto f = gmod::share(gmod::free_module(m.alg, c.generator_degrees));
    const std::size_t da = static_cast<std::size_t>(m.alg->dim());
    BitMatrix mat(n, lifts.size() * da);
    for (std::size_t j = 0; j < lifts.size(); ++j)
        for (std::size_t b = 0; b < da; ++b)
            mat.set_column(j * da + b, m.act(static_cast<int>(b)).column(lifts[j]));
    c.map = ModuleMap{f, gmod::share(m), 0, std::move(mat)};
    return c;
}

ModuleMap injective_hull(const AModule& m)
{
    // dual(dual(m)) has the same basis and action as m.
    auto c = minimal_cover(gmod::dual(m));
    auto target = gmod::share(gmod::dual(*c.map.source));
    return ModuleMap{gmod::share(m), target, 0, c.map.matrix.transpose()};
}

AModule kernel_module(const ModuleMap& f)
{
    const auto k = f2::kernel_basis(f.matrix);
    if (k.rows() == 0)
        return gmod::zero_module(f.source->alg);
    return gmod::submodule(f.source, k).first;
}

AModule cokernel_module(const ModuleMap& f)
{
    return gmod::quotient(f.target, f.matrix.transpose()).first;
}

AModule syzygy(const AModule& m) { return kernel_module(minimal_cover(m).map); }

AModule cosyzygy(const AModule& m) { return cokernel_module(injective_hull(m)); }

Reduction reduce(const AModule& m)
{
    Reduction r;
    r.reduced = m.dim() == 0 ? m : cosyzygy(syzygy(m));
    const int diff = m.dim() - r.reduced.dim();
    if (diff % m.alg->dim() != 0)
        throw std::logic_error("reduce: removed part is not free");
    r.free_rank = diff / m.alg->dim();
    return r;
}

bool is_stable_equiv(const ModuleMap& f)
{
    return is_free(kernel_module(f)) && is_free(cokernel_module(f));
}

StableVerdict stably_isomorphic(const AModule& m, const AModule& n)
{
    StableVerdict v;
    const auto rm = reduce(m).reduced;
    const auto rn = reduce(n).reduced;
    if (rm.graded_dims() != rn.graded_dims()) {
        v.kind = StableVerdict::Kind::No;
        v.reason = "graded dimensions of the reductions differ";
        return v;
    }
    auto iso = gmod::is_module_iso(rm, rn);
    switch (iso.status) {
    case gmod::IsoResult::Status::Isomorphic:
        v.kind = StableVerdict::Kind::Yes;
        v.witness = iso.map;
        v.reason = "reductions are isomorphic";
        break;
    case gmod::IsoResult::Status::NotIsomorphic:
        v.kind = StableVerdict::Kind::No;
        v.reason = "reductions: " + iso.reason;
        break;
    case gmod::IsoResult::Status::BudgetExhausted:
        v.kind = StableVerdict::Kind::Unknown;
        v.reason = iso.reason;
        break;
    }
    return v;
}

} // namespace stabmod::stable
