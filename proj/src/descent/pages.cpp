#include "stabmod/descent/descent.hpp"

#include <stdexcept>

namespace stabmod::descent {

namespace {

using stable::ExtGroup;
using stable::HomComplex;

bool is_unit(const AModule& m)
{
    return m.dim() == 1 && m.degrees[0] == 0;
}

/// Ext entry with a solver for its coordinates.
struct Entry
{
    ExtGroup group;
    std::shared_ptr<f2::LinearSolver> solver;
    std::map<std::pair<int, int>, std::size_t> index;

    BitVector coordinates(const BitVector& cocycle) const
    {
        auto x = solver->solve(cocycle);
        if (!x)
            throw std::logic_error("descent: pushed cochain is not a cocycle");
        BitVector out(static_cast<std::size_t>(group.dim()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out.set(i, x->get(i));
        return out;
    }
};

Entry make_entry(ExtGroup g)
{
    Entry e;
    e.solver = std::make_shared<f2::LinearSolver>(g.span);
    for (std::size_t k = 0; k < g.cochain_basis.size(); ++k)
        e.index[g.cochain_basis[k]] = k;
    e.group = std::move(g);
    return e;
}

/// Cochain of `from` pushed along a coefficient map f, in the cochain basis of `to`.
BitVector push_cochain(const Entry& from, const Entry& to, const BitMatrix& f, const BitVector& cochain)
{
    BitVector out(to.group.cochain_basis.size());
    for (auto k : cochain.support()) {
        const auto [j, x] = from.group.cochain_basis[k];
        for (auto y : f.column(static_cast<std::size_t>(x)).support())
            out.flip(to.index.at({j, static_cast<int>(y)}));
    }
    return out;
}

/// Matrix of the map on Ext induced by sum_i f_i, columns indexed by `cols` (Ext coordinates of `from`).
BitMatrix push_classes(const Entry& from, const Entry& to, const std::vector<BitMatrix>& fs, const BitMatrix& cols)
{
    BitMatrix out(static_cast<std::size_t>(to.group.dim()), cols.cols());
    if (to.group.dim() == 0)
        return out;
    for (std::size_t c = 0; c < cols.cols(); ++c) {
        BitVector cocycle(from.group.cochain_basis.size());
        for (auto r : cols.column(c).support())
            cocycle ^= from.group.representatives[r];
        BitVector image(to.group.cochain_basis.size());
        for (const auto& f : fs)
            image ^= push_cochain(from, to, f, cocycle);
        out.set_column(c, to.coordinates(image));
    }
    return out;
}

BitMatrix columns_of(const BitMatrix& rows_basis)
{
    return rows_basis.transpose();
}

} // namespace

int SSPage::dim(const Tridegree& d) const
{
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
}

int SSPage::total() const
{
    int n = 0;
    for (auto& [k, v] : dims)
        n += v;
    return n;
}

SSPage e1_end(hopf::HopfPtr a, const gmod::AlgebraObject& t, const AModule& m, const PageWindow& w, bool normalize)
{
    if (w.n_min < 0 || w.n_min > w.n_max || w.s_min > w.s_max || w.t_min > w.t_max)
        throw std::invalid_argument("e1_end: empty or invalid window");
    if (m.alg->name != a->name)
        throw std::invalid_argument("e1_end: coefficient module over a different algebra");
    const int lo = std::max(0, w.n_min - 1);
    const int hi = w.n_max + 1;
    const auto cx = amitsur(a, t, hi);
    auto p = is_unit(m) ? stable::unit_resolution(a, w.s_min - 1, w.s_max + 1)
                        : std::make_shared<const stable::CompleteResolution>(stable::complete_resolution(m, w.s_min - 1, w.s_max + 1));
    const auto idm = BitMatrix::identity(static_cast<std::size_t>(m.dim()));

    std::vector<std::unique_ptr<HomComplex>> complexes(static_cast<std::size_t>(hi) + 1);
    for (int n = std::max(0, lo - 1); n <= hi; ++n)
        complexes[static_cast<std::size_t>(n)] =
            std::make_unique<HomComplex>(p, gmod::share(gmod::tensor(*cx.layers[static_cast<std::size_t>(n)], m)));

    std::map<Tridegree, Entry> entries;
    auto entry = [&](const Tridegree& d) -> const Entry& {
        auto it = entries.find(d);
        if (it == entries.end())
            it = entries.emplace(d, make_entry(complexes[static_cast<std::size_t>(d.n)]->ext(d.s, d.t))).first;
        return it->second;
    };

    SSPage page;
    page.label = "E1 End(" + (is_unit(m) ? std::string("1") : std::string("m")) + ")";
    page.r = 1;
    page.window = w;
    std::map<Tridegree, BitMatrix> basis; // columns in Ext coordinates
    for (int n = lo; n <= hi; ++n)
        for (int s = w.s_min; s <= w.s_max; ++s)
            for (int tt = w.t_min; tt <= w.t_max; ++tt) {
                const Tridegree d{n, s, tt};
                const auto& e = entry(d);
                const std::size_t k = static_cast<std::size_t>(e.group.dim());
                if (k == 0)
                    continue;
                BitMatrix b = BitMatrix::identity(k);
                if (normalize && n > 0) {
                    const Tridegree down{n - 1, s, tt};
                    const auto& target = entry(down);
                    std::vector<BitMatrix> blocks;
                    for (const auto& sg : cx.codegeneracies[static_cast<std::size_t>(n - 1)]) {
                        blocks.push_back(push_classes(e, target, {sg.kron(idm)}, BitMatrix::identity(k)));
                    }
                    // Stack the codegeneracy maps and take the common kernel.
                    std::vector<BitVector> rows;
                    for (const auto& blk : blocks)
                        for (std::size_t r = 0; r < blk.rows(); ++r)
                            rows.push_back(blk.row(r));
                    b = columns_of(f2::kernel_basis(BitMatrix::from_rows(rows, k)));
                }
                if (b.cols() == 0)
                    continue;
                basis[d] = b;
            }

    for (auto& [d, b] : basis) {
        if (d.n >= w.n_min && d.n <= w.n_max) {
            page.dims[d] = static_cast<int>(b.cols());
            page.basis[d] = b;
        }
        if (d.n >= hi)
            continue;
        const Tridegree up{d.n + 1, d.s, d.t};
        std::vector<BitMatrix> faces;
        for (const auto& f : cx.cofaces[static_cast<std::size_t>(d.n + 1)])
            faces.push_back(f.kron(idm));
        const auto image = push_classes(entry(d), entry(up), faces, b);
        auto it = basis.find(up);
        BitMatrix in_basis(it == basis.end() ? 0 : it->second.cols(), b.cols());
        if (it != basis.end()) {
            const f2::LinearSolver solver(it->second);
            for (std::size_t c = 0; c < b.cols(); ++c) {
                auto x = solver.solve(image.column(c));
                if (!x)
                    throw std::logic_error("e1_end: d1 leaves the normalized complex at " + to_string(d));
                in_basis.set_column(c, *x);
            }
        } else if (!image.is_zero()) {
            throw std::logic_error("e1_end: d1 leaves the normalized complex at " + to_string(d));
        }
        page.d1[d] = std::move(in_basis);
    }
    page.warnings = check_page(page);
    return page;
}

std::vector<std::string> check_page(const SSPage& p)
{
    std::vector<std::string> out;
    for (auto& [d, m] : p.d1) {
        auto it = p.d1.find(Tridegree{d.n + 1, d.s, d.t});
        if (it == p.d1.end() || m.rows() == 0)
            continue;
        if (!(it->second * m).is_zero())
            out.push_back("d1 d1 != 0 at " + to_string(d));
    }
    return out;
}

SSPage e2(const SSPage& e1)
{
    if (e1.r != 1)
        throw std::invalid_argument("e2: input must be an E1 page");
    if (!e1.d1_determined)
        throw std::invalid_argument("e2: d1 is undetermined on " + e1.label);
    SSPage out;
    out.label = "E2" + e1.label.substr(std::min<std::size_t>(2, e1.label.size()));
    out.r = 2;
    out.window = e1.window;
    out.warnings = e1.warnings;
    for (auto& [d, k] : e1.dims) {
        const std::size_t dim = static_cast<std::size_t>(k);
        f2::EchelonBasis acc(dim);
        if (auto in = e1.d1.find(Tridegree{d.n - 1, d.s, d.t}); in != e1.d1.end() && in->second.rows() == dim)
            for (std::size_t c = 0; c < in->second.cols(); ++c)
                acc.insert(in->second.column(c));
        BitMatrix kernel = BitMatrix::identity(dim);
        if (auto o = e1.d1.find(d); o != e1.d1.end() && o->second.rows() > 0)
            kernel = columns_of(f2::kernel_basis(o->second));
        std::vector<BitVector> reps;
        for (std::size_t c = 0; c < kernel.cols(); ++c) {
            auto v = kernel.column(c);
            if (acc.insert(v))
                reps.push_back(std::move(v));
        }
        if (reps.empty())
            continue;
        out.dims[d] = static_cast<int>(reps.size());
        out.basis[d] = BitMatrix::from_columns(reps, dim);
    }
    return out;
}

} // namespace stabmod::descent
