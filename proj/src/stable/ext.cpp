#include "stabmod/stable/stable.hpp"

#include "stabmod/hopf/hopf_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stabmod::stable {

int BigradedChart::total() const
{
    int n = 0;
    for (auto& [k, v] : dims)
        n += v;
    return n;
}

BitVector ExtGroup::coordinates(const BitVector& cocycle) const
{
    const f2::LinearSolver solver(span);
    auto x = solver.solve(cocycle);
    if (!x)
        throw std::invalid_argument("ExtGroup::coordinates: not a cocycle of this bidegree");
    BitVector out(representatives.size());
    for (std::size_t i = 0; i < representatives.size(); ++i)
        out.set(i, x->get(i));
    return out;
}

HomComplex::HomComplex(std::shared_ptr<const CompleteResolution> p, ModulePtr x) : p_(std::move(p)), x_(std::move(x))
{
    if (p_->module->alg->name != x_->alg->name)
        throw std::invalid_argument("HomComplex: resolution and coefficients over different algebras");
}

std::vector<std::pair<int, int>> HomComplex::cochain_basis(int s, int t) const
{
    std::vector<std::pair<int, int>> out;
    const auto& gens = p_->generators.at(s);
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (auto x : x_->indices_in_degree(gens[j] - t))
            out.push_back({static_cast<int>(j), static_cast<int>(x)});
    return out;
}

std::pair<int, int> HomComplex::t_range(int s) const
{
    const auto& gens = p_->generators.at(s);
    if (gens.empty() || x_->dim() == 0)
        return {0, -1};
    const auto [gmin, gmax] = std::minmax_element(gens.begin(), gens.end());
    return {*gmin - x_->max_degree(), *gmax - x_->min_degree()};
}

BitMatrix HomComplex::coboundary(int s, int t) const
{
    const auto src = cochain_basis(s, t);
    const auto tgt = cochain_basis(s + 1, t);
    BitMatrix out(tgt.size(), src.size());
    if (src.empty() || tgt.empty())
        return out;
    const std::size_t dx = static_cast<std::size_t>(x_->dim());
    const std::size_t da = static_cast<std::size_t>(p_->module->alg->dim());
    const std::size_t rank_s = p_->generators.at(s).size();
    std::vector<long> src_index(rank_s * dx, -1);
    for (std::size_t k = 0; k < src.size(); ++k)
        src_index[static_cast<std::size_t>(src[k].first) * dx + static_cast<std::size_t>(src[k].second)] = static_cast<long>(k);
    const auto& d = p_->d(s + 1);
    for (std::size_t row = 0; row < tgt.size(); ++row) {
        const auto [i, y] = tgt[row];
        // (f o d)(g'_i)_y = sum over terms b g_j of d(g'_i) of (b f(g_j))_y
        for (std::size_t r = 0; r < d.rows(); ++r) {
            if (!d.get(r, static_cast<std::size_t>(i) * da))
                continue;
            const std::size_t j = r / da, b = r % da;
            const auto& act = x_->act(static_cast<int>(b));
            const auto words = act.row_words(static_cast<std::size_t>(y));
            for (std::size_t w = 0; w < words.size(); ++w) {
                auto bits = words[w];
                while (bits) {
                    const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    const long col = src_index[j * dx + x];
                    if (col >= 0)
                        out.flip(row, static_cast<std::size_t>(col));
                }
            }
        }
    }
    return out;
}

ExtGroup HomComplex::ext(int s, int t) const
{
    if (s - 1 < p_->s_min || s + 1 > p_->s_max)
        throw std::out_of_range("HomComplex::ext: resolution window too small for s = " + std::to_string(s));
    ExtGroup g;
    g.s = s;
    g.t = t;
    g.cochain_basis = cochain_basis(s, t);
    const std::size_t n = g.cochain_basis.size();
    const auto z = f2::kernel_basis(coboundary(s, t));
    const auto prev = coboundary(s - 1, t);
    f2::EchelonBasis acc(n);
    std::vector<BitVector> boundaries;
    for (std::size_t c = 0; c < prev.cols(); ++c) {
        auto v = prev.column(c);
        if (acc.insert(v))
            boundaries.push_back(std::move(v));
    }
    for (std::size_t r = 0; r < z.rows(); ++r) {
        auto v = z.row(r);
        if (acc.insert(v))
            g.representatives.push_back(std::move(v));
    }
    std::vector<BitVector> cols = g.representatives;
    cols.insert(cols.end(), boundaries.begin(), boundaries.end());
    g.span = BitMatrix::from_columns(cols, n);
    return g;
}

int HomComplex::ext_dim(int s, int t) const
{
    const auto n = cochain_basis(s, t).size();
    if (n == 0)
        return 0;
    return static_cast<int>(n - f2::rank(coboundary(s, t)) - f2::rank(coboundary(s - 1, t)));
}

namespace {

BigradedChart chart_from(const HomComplex& hc, const ChartWindow& w)
{
    BigradedChart c;
    c.window = w;
    for (int s = w.s_min; s <= w.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            const int d = hc.ext_dim(s, t);
            if (d)
                c.dims[{s, t}] = d;
        }
    return c;
}

} // namespace

BigradedChart ext(const AModule& m, const AModule& n, const ChartWindow& w)
{
    auto p = std::make_shared<const CompleteResolution>(complete_resolution(m, w.s_min - 1, w.s_max + 1));
    return chart_from(HomComplex(p, gmod::share(n)), w);
}

BigradedChart ext_from_unit(const AModule& n, const ChartWindow& w)
{
    auto p = unit_resolution(n.alg, w.s_min - 1, w.s_max + 1);
    return chart_from(HomComplex(p, gmod::share(n)), w);
}

BitMatrix induced_map_on_ext(const HomComplex& from, const HomComplex& to, const ModuleMap& f, int s, int t)
{
    if (&from.resolution() != &to.resolution() && from.resolution().generators != to.resolution().generators)
        throw std::invalid_argument("induced_map_on_ext: different resolutions");
    if (f.degree != 0)
        throw std::invalid_argument("induced_map_on_ext: map must have degree 0");
    const auto gx = from.ext(s, t);
    const auto gy = to.ext(s, t);
    BitMatrix out(static_cast<std::size_t>(gy.dim()), static_cast<std::size_t>(gx.dim()));
    if (gx.dim() == 0 || gy.dim() == 0)
        return out;
    std::map<std::pair<int, int>, std::size_t> tgt_index;
    for (std::size_t k = 0; k < gy.cochain_basis.size(); ++k)
        tgt_index[gy.cochain_basis[k]] = k;
    for (std::size_t c = 0; c < gx.representatives.size(); ++c) {
        BitVector image(gy.cochain_basis.size());
        for (auto k : gx.representatives[c].support()) {
            const auto [j, x] = gx.cochain_basis[k];
            for (std::size_t y = 0; y < f.matrix.rows(); ++y)
                if (f.matrix.get(y, static_cast<std::size_t>(x)))
                    image.flip(tgt_index.at({j, static_cast<int>(y)}));
        }
        out.set_column(c, gy.coordinates(image));
    }
    return out;
}

PoincareReport poincare_check(const hopf::HopfPtr& alg, int s_min, int s_max)
{
    PoincareReport rep;
    const int top = alg->top_degree();
    const int lo = std::min(s_min, -1 - s_max) - 1;
    const int hi = std::max(s_max, -1 - s_min) + 1;
    HomComplex hc(unit_resolution(alg, lo, hi), gmod::share(gmod::unit_module(alg)));
    // With cochains of degree t sending P_k to X_{k-t}, the dual partner of (s, t) sits at (-1-s, -|A|-t).
    for (int s = s_min; s <= s_max; ++s) {
        auto [a, b] = hc.t_range(s);
        auto [c, d] = hc.t_range(-1 - s);
        const int tlo = std::min(a, -top - d), thi = std::max(b, -top - c);
        for (int t = tlo; t <= thi; ++t) {
            ++rep.checked;
            const int lhs = hc.ext_dim(s, t);
            const int rhs = hc.ext_dim(-1 - s, -top - t);
            if (lhs != rhs) {
                rep.ok = false;
                rep.failures.push_back("Ext^{" + std::to_string(s) + "," + std::to_string(t) + "} = " + std::to_string(lhs) +
                                       " but Ext^{" + std::to_string(-1 - s) + "," + std::to_string(-top - t) + "} = " + std::to_string(rhs));
            }
        }
    }
    return rep;
}

EndHomotopy end_homotopy(const hopf::HopfPtr& alg, const ChartWindow& w)
{
    EndHomotopy out;
    out.chart.window = w;
    const int top = alg->top_degree();
    const int lo = std::min(w.s_min - 1, 0) - 1;
    const int hi = std::max(w.s_max - 1, w.s_max - 2) + 1;
    HomComplex hc(unit_resolution(alg, lo, hi), gmod::share(gmod::unit_module(alg)));
    for (int s = w.s_min; s <= w.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            const int d = hc.ext_dim(s - 1, top - t);
            if (d)
                out.chart.dims[{s, t}] = d;
        }
    for (int i = 2; i <= w.s_max; ++i)
        out.pic_homotopy[i] = hc.ext_dim(i - 2, top);
    return out;
}

} // namespace stabmod::stable
