#include "stabmod/gmod/module.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stabmod::gmod {

namespace {

BitMatrix word_action(const std::vector<BitMatrix>& gens, const hopf::Word& w, std::size_t dim)
{
    BitMatrix m = BitMatrix::identity(dim);
    for (int g : w)
        m = m * gens[static_cast<std::size_t>(g)];
    return m;
}

void require_same_algebra(const AModule& m, const AModule& n, const char* what)
{
    if (m.alg != n.alg && m.alg->name != n.alg->name)
        throw std::invalid_argument(std::string(what) + ": modules over different algebras");
}

} // namespace

BitMatrix AModule::act_element(Element a) const
{
    BitMatrix out(static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
    for (int i = 0; i < alg->dim(); ++i)
        if (a & hopf::basis_element(i))
            out ^= act(i);
    return out;
}

std::map<int, int> AModule::graded_dims() const
{
    std::map<int, int> out;
    for (int d : degrees)
        ++out[d];
    return out;
}

std::vector<std::size_t> AModule::indices_in_degree(int d) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] == d)
            out.push_back(i);
    return out;
}

int AModule::min_degree() const { return degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end()); }
int AModule::max_degree() const { return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end()); }

int AModule::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i);
    return -1;
}

AModule make_module(HopfPtr alg, std::vector<std::string> names, std::vector<int> degrees, std::vector<BitMatrix> gens)
{
    if (names.size() != degrees.size())
        throw std::invalid_argument("make_module: names and degrees differ in length");
    if (gens.size() != static_cast<std::size_t>(alg->num_generators()))
        throw std::invalid_argument("make_module: one action matrix per generator required");
    const std::size_t n = degrees.size();
    for (const auto& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("make_module: action matrix has the wrong size");
    AModule m;
    m.alg = std::move(alg);
    m.names = std::move(names);
    m.degrees = std::move(degrees);
    m.gens = std::move(gens);
    for (const auto& expr : m.alg->expressions) {
        BitMatrix a(n, n);
        for (const auto& w : expr)
            a ^= word_action(m.gens, w, n);
        m.basis_action.push_back(std::move(a));
    }
    return m;
}

AModule module_from_arrows(HopfPtr alg, const std::vector<std::pair<std::string, int>>& basis, const std::vector<Arrow>& arrows)
{
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (const auto& [nm, d] : basis) {
        if (std::find(names.begin(), names.end(), nm) != names.end())
            throw std::invalid_argument("duplicate basis name '" + nm + "'");
        names.push_back(nm);
        degrees.push_back(d);
    }
    const std::size_t n = names.size();
    std::vector<BitMatrix> gens(static_cast<std::size_t>(alg->num_generators()), BitMatrix(n, n));
    auto lookup = [&](const std::string& nm) {
        auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end())
            throw std::invalid_argument("unknown basis element '" + nm + "'");
        return static_cast<std::size_t>(it - names.begin());
    };
    for (const auto& a : arrows) {
        int g = -1;
        for (int k = 0; k < alg->num_generators(); ++k)
            if (alg->generator_name(k) == a.generator)
                g = k;
        if (g < 0)
            throw std::invalid_argument("unknown generator '" + a.generator + "'");
        const auto src = lookup(a.source);
        for (const auto& t : a.targets)
            gens[static_cast<std::size_t>(g)].flip(lookup(t), src);
    }
    return make_module(std::move(alg), std::move(names), std::move(degrees), std::move(gens));
}

std::vector<std::string> validate_module(const AModule& m)
{
    std::vector<std::string> report;
    const auto& h = *m.alg;
    for (int g = 0; g < h.num_generators(); ++g) {
        const auto& a = m.gens[static_cast<std::size_t>(g)];
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (a.get(r, c) && m.degrees[r] != m.degrees[c] + h.generator_degree(g))
                    report.push_back("degree mismatch: " + h.generator_name(g) + " sends " + m.names[c] + " to " + m.names[r]);
    }
    for (const auto& rel : h.relations) {
        BitMatrix v(static_cast<std::size_t>(m.dim()), static_cast<std::size_t>(m.dim()));
        for (const auto& w : rel.poly)
            v ^= word_action(m.gens, w, static_cast<std::size_t>(m.dim()));
        if (!v.is_zero())
            report.push_back("relation " + rel.name + " fails");
    }
    if (report.empty()) {
        for (int i = 0; i < h.dim(); ++i)
            for (int j = 0; j < h.dim(); ++j)
                if (!(m.act(i) * m.act(j) == m.act_element(h.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])))
                    report.push_back("action is not multiplicative at (" + h.basis_names[static_cast<std::size_t>(i)] + ", " +
                                     h.basis_names[static_cast<std::size_t>(j)] + ")");
    }
    return report;
}

AModule zero_module(HopfPtr alg)
{
    const auto g = static_cast<std::size_t>(alg->num_generators());
    return make_module(std::move(alg), {}, {}, std::vector<BitMatrix>(g, BitMatrix(0, 0)));
}

AModule unit_module(HopfPtr alg)
{
    const auto g = static_cast<std::size_t>(alg->num_generators());
    return make_module(std::move(alg), {"1"}, {0}, std::vector<BitMatrix>(g, BitMatrix(1, 1)));
}

AModule free_module(HopfPtr alg, const std::vector<int>& degrees)
{
    const auto& h = *alg;
    const std::size_t a = static_cast<std::size_t>(h.dim());
    const std::size_t n = degrees.size() * a;
    std::vector<std::string> names;
    std::vector<int> degs;
    for (std::size_t j = 0; j < degrees.size(); ++j)
        for (std::size_t b = 0; b < a; ++b) {
            const std::string gen = degrees.size() == 1 ? "" : "g" + std::to_string(j);
            if (b == 0)
                names.push_back(gen.empty() ? "1" : gen);
            else
                names.push_back(h.basis_names[b] + (gen.empty() ? "" : " " + gen));
            degs.push_back(degrees[j] + h.degrees[b]);
        }
    std::vector<BitMatrix> gens;
    for (int g = 0; g < h.num_generators(); ++g) {
        BitMatrix mat(n, n);
        const auto gi = static_cast<std::size_t>(h.generators[static_cast<std::size_t>(g)]);
        for (std::size_t j = 0; j < degrees.size(); ++j)
            for (std::size_t b = 0; b < a; ++b)
                for (std::size_t c = 0; c < a; ++c)
                    if (h.mult[gi][b] & hopf::basis_element(static_cast<int>(c)))
                        mat.set(j * a + c, j * a + b, true);
        gens.push_back(std::move(mat));
    }
    return make_module(std::move(alg), std::move(names), std::move(degs), std::move(gens));
}

AModule shift(const AModule& m, int t)
{
    AModule out = m;
    for (auto& d : out.degrees)
        d += t;
    return out;
}

AModule direct_sum(const std::vector<AModule>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("direct_sum: empty list");
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        require_same_algebra(parts[0], parts[k], "direct_sum");
        for (int i = 0; i < parts[k].dim(); ++i) {
            std::string nm = parts[k].names[static_cast<std::size_t>(i)];
            while (std::find(names.begin(), names.end(), nm) != names.end())
                nm += "'";
            names.push_back(nm);
            degrees.push_back(parts[k].degrees[static_cast<std::size_t>(i)]);
        }
    }
    std::vector<BitMatrix> gens;
    for (int g = 0; g < parts[0].alg->num_generators(); ++g) {
        std::vector<BitMatrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.gens[static_cast<std::size_t>(g)]);
        gens.push_back(BitMatrix::block_diagonal(blocks));
    }
    return make_module(parts[0].alg, std::move(names), std::move(degrees), std::move(gens));
}

AModule tensor(const AModule& m, const AModule& n)
{
    require_same_algebra(m, n, "tensor");
    const auto& h = *m.alg;
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < n.dim(); ++j) {
            names.push_back(m.names[static_cast<std::size_t>(i)] + "⊗" + n.names[static_cast<std::size_t>(j)]);
            degrees.push_back(m.degrees[static_cast<std::size_t>(i)] + n.degrees[static_cast<std::size_t>(j)]);
        }
    std::vector<BitMatrix> gens;
    for (int g = 0; g < h.num_generators(); ++g) {
        BitMatrix mat(degrees.size(), degrees.size());
        for (auto [p, q] : h.comult[static_cast<std::size_t>(h.generators[static_cast<std::size_t>(g)])])
            mat ^= m.act(p).kron(n.act(q));
        gens.push_back(std::move(mat));
    }
    return make_module(m.alg, std::move(names), std::move(degrees), std::move(gens));
}

AModule dual(const AModule& m)
{
    const auto& h = *m.alg;
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 0; i < m.dim(); ++i) {
        names.push_back(m.names[static_cast<std::size_t>(i)] + "*");
        degrees.push_back(-m.degrees[static_cast<std::size_t>(i)]);
    }
    std::vector<BitMatrix> gens;
    for (int g = 0; g < h.num_generators(); ++g)
        gens.push_back(m.act_element(h.antipode[static_cast<std::size_t>(h.generators[static_cast<std::size_t>(g)])]).transpose());
    return make_module(m.alg, std::move(names), std::move(degrees), std::move(gens));
}

AModule internal_hom(const AModule& m, const AModule& n) { return tensor(dual(m), n); }

ModulePtr share(AModule m) { return std::make_shared<const AModule>(std::move(m)); }

BitMatrix ModuleMap::component(int k) const
{
    const auto cols = source->indices_in_degree(k);
    const auto rows = target->indices_in_degree(k - degree);
    return matrix.submatrix(rows, cols);
}

ModuleMap identity_map(ModulePtr m)
{
    const auto n = static_cast<std::size_t>(m->dim());
    return ModuleMap{m, m, 0, BitMatrix::identity(n)};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    if (g.source->dim() != f.target->dim())
        throw std::invalid_argument("compose: dimension mismatch");
    return ModuleMap{f.source, g.target, f.degree + g.degree, g.matrix * f.matrix};
}

std::vector<std::string> validate_map(const ModuleMap& f)
{
    std::vector<std::string> report;
    const auto& s = *f.source;
    const auto& t = *f.target;
    if (f.matrix.rows() != static_cast<std::size_t>(t.dim()) || f.matrix.cols() != static_cast<std::size_t>(s.dim())) {
        report.push_back("matrix has the wrong shape");
        return report;
    }
    for (std::size_t r = 0; r < f.matrix.rows(); ++r)
        for (std::size_t c = 0; c < f.matrix.cols(); ++c)
            if (f.matrix.get(r, c) && t.degrees[r] != s.degrees[c] - f.degree)
                report.push_back("degree mismatch at " + s.names[c] + " -> " + t.names[r]);
    for (int g = 0; g < s.alg->num_generators(); ++g)
        if (!(t.gens[static_cast<std::size_t>(g)] * f.matrix == f.matrix * s.gens[static_cast<std::size_t>(g)]))
            report.push_back("map does not commute with " + s.alg->generator_name(g));
    return report;
}

ModuleMap evaluation_map(const AModule& m, const AModule& n)
{
    auto source = share(tensor(internal_hom(m, n), m));
    auto target = share(n);
    const std::size_t dm = static_cast<std::size_t>(m.dim()), dn = static_cast<std::size_t>(n.dim());
    BitMatrix mat(dn, dm * dn * dm);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            mat.set(j, (i * dn + j) * dm + i, true);
    return ModuleMap{source, target, 0, std::move(mat)};
}

ModuleMap coevaluation_map(const AModule& m)
{
    auto target = share(internal_hom(m, m));
    const std::size_t dm = static_cast<std::size_t>(m.dim());
    BitMatrix mat(dm * dm, 1);
    for (std::size_t i = 0; i < dm; ++i)
        mat.set(i * dm + i, 0, true);
    return ModuleMap{share(unit_module(m.alg)), target, 0, std::move(mat)};
}

BitMatrix invariant_closure(const AModule& m, const std::vector<BitVector>& vectors)
{
    f2::EchelonBasis span(static_cast<std::size_t>(m.dim()));
    std::vector<BitVector> accepted;
    std::vector<BitVector> queue = vectors;
    while (!queue.empty()) {
        BitVector v = std::move(queue.back());
        queue.pop_back();
        if (!span.insert(v))
            continue;
        for (const auto& g : m.gens) {
            auto w = g * v;
            if (!w.is_zero())
                queue.push_back(std::move(w));
        }
        accepted.push_back(std::move(v));
    }
    return BitMatrix::from_rows(accepted, static_cast<std::size_t>(m.dim()));
}

namespace {

int homogeneous_degree(const AModule& m, const BitVector& v)
{
    const auto s = v.support();
    if (s.empty())
        throw std::invalid_argument("zero vector has no degree");
    const int d = m.degrees[s.front()];
    for (auto i : s)
        if (m.degrees[i] != d)
            throw std::invalid_argument("subspace is not spanned by homogeneous vectors");
    return d;
}

} // namespace

std::pair<AModule, ModuleMap> submodule(ModulePtr m, const BitMatrix& span)
{
    const auto basis = f2::row_space_basis(span);
    const std::size_t k = basis.rows();
    std::vector<BitVector> cols;
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (std::size_t r = 0; r < k; ++r) {
        auto v = basis.row(r);
        degrees.push_back(homogeneous_degree(*m, v));
        std::string nm;
        for (auto i : v.support())
            nm += (nm.empty() ? "" : "+") + m->names[i];
        names.push_back(nm);
        cols.push_back(std::move(v));
    }
    const auto inclusion = BitMatrix::from_columns(cols, static_cast<std::size_t>(m->dim()));
    const f2::LinearSolver solver(inclusion);
    std::vector<BitMatrix> gens;
    for (const auto& g : m->gens) {
        BitMatrix a(k, k);
        for (std::size_t c = 0; c < k; ++c) {
            auto x = solver.solve(g * cols[c]);
            if (!x)
                throw std::invalid_argument("submodule: subspace is not invariant");
            a.set_column(c, *x);
        }
        gens.push_back(std::move(a));
    }
    auto sub = share(make_module(m->alg, std::move(names), std::move(degrees), std::move(gens)));
    ModuleMap inc{sub, m, 0, inclusion};
    return {*sub, inc};
}

std::pair<AModule, ModuleMap> quotient(ModulePtr m, const BitMatrix& span)
{
    const std::size_t n = static_cast<std::size_t>(m->dim());
    const auto r = f2::rref(span.rows() ? span : BitMatrix(0, n));
    std::vector<long> pivot_row(n, -1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        pivot_row[r.pivots[i]] = static_cast<long>(i);
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row[c] < 0)
            keep.push_back(c);
    const std::size_t q = keep.size();
    BitMatrix proj(q, n);
    for (std::size_t a = 0; a < q; ++a)
        proj.set(a, keep[a], true);
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_row[c] < 0)
            continue;
        const auto row = r.reduced.row(static_cast<std::size_t>(pivot_row[c]));
        for (std::size_t a = 0; a < q; ++a)
            if (row.get(keep[a]))
                proj.set(a, c, true);
    }
    BitMatrix section(n, q);
    for (std::size_t a = 0; a < q; ++a)
        section.set(keep[a], a, true);
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (auto c : keep) {
        names.push_back(m->names[c]);
        degrees.push_back(m->degrees[c]);
    }
    std::vector<BitMatrix> gens;
    for (const auto& g : m->gens)
        gens.push_back(proj * g * section);
    auto quo = share(make_module(m->alg, std::move(names), std::move(degrees), std::move(gens)));
    return {*quo, ModuleMap{m, quo, 0, proj}};
}

std::vector<ModuleMap> hom_space(ModulePtr m, ModulePtr n, int t)
{
    require_same_algebra(*m, *n, "hom_space");
    const auto& h = *m->alg;
    const std::size_t dm = static_cast<std::size_t>(m->dim()), dn = static_cast<std::size_t>(n->dim());
    // Variable for each pair (target j, source i) with deg j = deg i - t.
    std::vector<long> var(dm * dn, -1);
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j)
            if (n->degrees[j] == m->degrees[i] - t) {
                var[j * dm + i] = static_cast<long>(vars.size());
                vars.push_back({j, i});
            }
    std::vector<BitMatrix> result_basis;
    std::vector<BitVector> equations;
    for (int g = 0; g < h.num_generators(); ++g) {
        const auto& gm = m->gens[static_cast<std::size_t>(g)];
        const auto& gn = n->gens[static_cast<std::size_t>(g)];
        const int gd = h.generator_degree(g);
        // Entry (r, c) of gn F + F gm.
        for (std::size_t c = 0; c < dm; ++c)
            for (std::size_t r = 0; r < dn; ++r) {
                if (n->degrees[r] != m->degrees[c] - t + gd)
                    continue;
                BitVector eq(vars.size());
                for (std::size_t j = 0; j < dn; ++j)
                    if (gn.get(r, j) && var[j * dm + c] >= 0)
                        eq.flip(static_cast<std::size_t>(var[j * dm + c]));
                for (std::size_t i = 0; i < dm; ++i)
                    if (gm.get(i, c) && var[r * dm + i] >= 0)
                        eq.flip(static_cast<std::size_t>(var[r * dm + i]));
                if (!eq.is_zero())
                    equations.push_back(std::move(eq));
            }
    }
    const auto kernel = f2::kernel_basis(BitMatrix::from_rows(equations, vars.size()));
    std::vector<ModuleMap> out;
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
        BitMatrix f(dn, dm);
        for (auto v : kernel.row(k).support())
            f.set(vars[v].first, vars[v].second, true);
        out.push_back(ModuleMap{m, n, t, std::move(f)});
    }
    return out;
}

std::vector<ModuleMap> hom_space(const AModule& m, const AModule& n, int t) { return hom_space(share(m), share(n), t); }

std::vector<Element> margolis_operators(const hopf::HopfAlgebra& h)
{
    std::vector<Element> out;
    auto add = [&](Element x) {
        if (h.multiply(x, x) == 0 && std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    };
    for (const auto& q : h.quasi_elementary)
        for (auto x : q.generators)
            add(x);
    if (out.empty())
        for (int g : h.generators)
            add(hopf::basis_element(g));
    return out;
}

std::vector<std::map<int, int>> margolis_homology(const AModule& m)
{
    std::vector<std::map<int, int>> out;
    const auto dims = m.graded_dims();
    for (auto q : margolis_operators(*m.alg)) {
        const int qd = m.alg->degree_of(q);
        const ModuleMap op{nullptr, nullptr, 0, m.act_element(q)};
        auto rank_from = [&](int d) {
            const auto cols = m.indices_in_degree(d);
            const auto rows = m.indices_in_degree(d + qd);
            if (cols.empty() || rows.empty())
                return std::size_t{0};
            return f2::rank(op.matrix.submatrix(rows, cols));
        };
        std::map<int, int> hom;
        for (auto [d, k] : dims) {
            const int h = k - static_cast<int>(rank_from(d)) - static_cast<int>(rank_from(d - qd));
            if (h != 0)
                hom[d] = h;
        }
        out.push_back(std::move(hom));
    }
    return out;
}

IsoResult is_module_iso(const AModule& m, const AModule& n)
{
    IsoResult res;
    require_same_algebra(m, n, "is_module_iso");
    if (m.graded_dims() != n.graded_dims()) {
        res.status = IsoResult::Status::NotIsomorphic;
        res.reason = "graded dimensions differ";
        return res;
    }
    if (margolis_homology(m) != margolis_homology(n)) {
        res.status = IsoResult::Status::NotIsomorphic;
        res.reason = "Margolis homology dimensions differ";
        return res;
    }
    auto mp = share(m), np = share(n);
    const auto dim = static_cast<std::size_t>(m.dim());
    auto found = [&](const BitMatrix& f) {
        res.status = IsoResult::Status::Isomorphic;
        res.map = ModuleMap{mp, np, 0, f};
        res.reason = "invertible map found";
        return res;
    };
    if (dim == 0)
        return found(BitMatrix(0, 0));
    const auto homs = hom_space(mp, np, 0);
    const std::size_t k = homs.size();
    BitMatrix acc(dim, dim);
    std::size_t acc_rank = 0;
    for (const auto& h : homs) {
        auto trial = acc ^ h.matrix;
        const auto r = f2::rank(trial);
        if (r > acc_rank) {
            acc = std::move(trial);
            acc_rank = r;
        }
    }
    if (acc_rank == dim)
        return found(acc);
    std::mt19937_64 rng(0x5eedULL);
    for (int trial = 0; trial < 256 && k > 0; ++trial) {
        BitMatrix f(dim, dim);
        for (const auto& h : homs)
            if (rng() & 1)
                f ^= h.matrix;
        if (f2::rank(f) == dim)
            return found(f);
    }
    if (k <= 16) {
        BitMatrix f(dim, dim);
        for (std::uint32_t code = 1; code < (1u << k); ++code) {
            // Gray code: flip the basis map at the lowest set bit.
            f ^= homs[static_cast<std::size_t>(std::countr_zero(code))].matrix;
            if (f2::rank(f) == dim)
                return found(f);
        }
        res.status = IsoResult::Status::NotIsomorphic;
        res.reason = "no invertible map in the degree-0 hom space";
        return res;
    }
    res.status = IsoResult::Status::BudgetExhausted;
    res.reason = "hom space of dimension " + std::to_string(k) + " exceeds the exhaustive budget";
    return res;
}

std::string describe(const AModule& m)
{
    std::ostringstream out;
    out << "module over " << m.alg->name << ", dim " << m.dim() << ", degrees";
    for (auto [d, k] : m.graded_dims())
        out << " " << d << ":" << k;
    return out.str();
}

} // namespace stabmod::gmod
