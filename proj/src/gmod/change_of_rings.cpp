#include "stabmod/gmod/change_of_rings.hpp"

#include <stdexcept>

namespace stabmod::gmod {

AModule restrict(const hopf::SubHopfInclusion& inc, const AModule& m)
{
    if (m.alg->name != inc.ambient->name)
        throw std::invalid_argument("restrict: module is not over the ambient algebra");
    std::vector<BitMatrix> gens;
    for (int g : inc.sub->generators)
        gens.push_back(m.act_element(inc.embedding[static_cast<std::size_t>(g)]));
    return make_module(inc.sub, m.names, m.degrees, std::move(gens));
}

AModule induce(const hopf::SubHopfInclusion& inc, const AModule& m)
{
    if (m.alg->name != inc.sub->name)
        throw std::invalid_argument("induce: module is not over the subalgebra");
    const auto& a = *inc.ambient;
    const std::size_t da = static_cast<std::size_t>(a.dim()), dx = static_cast<std::size_t>(m.dim());
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t x = 0; x < dx; ++x) {
            names.push_back(a.basis_names[i] + "⊗" + m.names[x]);
            degrees.push_back(a.degrees[i] + m.degrees[x]);
        }
    std::vector<BitMatrix> gens;
    for (int g = 0; g < a.num_generators(); ++g) {
        BitMatrix left(da, da);
        const auto gi = static_cast<std::size_t>(a.generators[static_cast<std::size_t>(g)]);
        for (std::size_t b = 0; b < da; ++b)
            for (std::size_t c = 0; c < da; ++c)
                if (a.mult[gi][b] & hopf::basis_element(static_cast<int>(c)))
                    left.set(c, b, true);
        gens.push_back(left.kron(BitMatrix::identity(dx)));
    }
    auto free_part = share(make_module(inc.ambient, std::move(names), std::move(degrees), std::move(gens)));
    std::vector<BitVector> relations;
    for (std::size_t i = 0; i < da; ++i)
        for (int b = 1; b < inc.sub->dim(); ++b) {
            const Element ab = a.multiply(hopf::basis_element(static_cast<int>(i)), inc.embedding[static_cast<std::size_t>(b)]);
            const auto bx = m.act(b);
            for (std::size_t x = 0; x < dx; ++x) {
                BitVector v(da * dx);
                for (std::size_t c = 0; c < da; ++c)
                    if (ab & hopf::basis_element(static_cast<int>(c)))
                        v.flip(c * dx + x);
                for (std::size_t y = 0; y < dx; ++y)
                    if (bx.get(y, x))
                        v.flip(i * dx + y);
                if (!v.is_zero())
                    relations.push_back(std::move(v));
            }
        }
    return quotient(free_part, BitMatrix::from_rows(relations, da * dx)).first;
}

AModule coinduce(const hopf::SubHopfInclusion& inc, const AModule& m)
{
    if (m.alg->name != inc.sub->name)
        throw std::invalid_argument("coinduce: module is not over the subalgebra");
    const auto& a = *inc.ambient;
    const auto& b = *inc.sub;
    const std::size_t da = static_cast<std::size_t>(a.dim()), dx = static_cast<std::size_t>(m.dim());
    // f flattened with index x * da + c.
    std::vector<BitVector> basis;
    std::vector<int> degrees;
    std::vector<std::string> names;
    if (dx > 0) {
        for (int d = m.min_degree() - a.top_degree(); d <= m.max_degree(); ++d) {
            std::vector<std::size_t> vars;
            std::vector<long> var_of(dx * da, -1);
            for (std::size_t x = 0; x < dx; ++x)
                for (std::size_t c = 0; c < da; ++c)
                    if (m.degrees[x] - a.degrees[c] == d) {
                        var_of[x * da + c] = static_cast<long>(vars.size());
                        vars.push_back(x * da + c);
                    }
            if (vars.empty())
                continue;
            std::vector<BitVector> eqs;
            for (int g = 0; g < b.num_generators(); ++g) {
                const Element beta = inc.embedding[static_cast<std::size_t>(b.generators[static_cast<std::size_t>(g)])];
                const auto& gx = m.gens[static_cast<std::size_t>(g)];
                for (std::size_t i = 0; i < da; ++i) {
                    const Element ba = a.multiply(beta, hopf::basis_element(static_cast<int>(i)));
                    for (std::size_t x = 0; x < dx; ++x) {
                        BitVector eq(vars.size());
                        for (std::size_t c = 0; c < da; ++c)
                            if ((ba & hopf::basis_element(static_cast<int>(c))) && var_of[x * da + c] >= 0)
                                eq.flip(static_cast<std::size_t>(var_of[x * da + c]));
                        for (std::size_t y = 0; y < dx; ++y)
                            if (gx.get(x, y) && var_of[y * da + i] >= 0)
                                eq.flip(static_cast<std::size_t>(var_of[y * da + i]));
                        if (!eq.is_zero())
                            eqs.push_back(std::move(eq));
                    }
                }
            }
            const auto kernel = f2::kernel_basis(BitMatrix::from_rows(eqs, vars.size()));
            for (std::size_t k = 0; k < kernel.rows(); ++k) {
                BitVector f(dx * da);
                for (auto v : kernel.row(k).support())
                    f.set(vars[v], true);
                const auto lead = f.support().front();
                names.push_back(a.basis_names[lead % da] + "↦" + m.names[lead / da]);
                degrees.push_back(d);
                basis.push_back(std::move(f));
            }
        }
    }
    const std::size_t n = basis.size();
    const f2::LinearSolver solver(BitMatrix::from_columns(basis, dx * da));
    std::vector<BitMatrix> gens;
    for (int g = 0; g < a.num_generators(); ++g) {
        const Element ge = hopf::basis_element(a.generators[static_cast<std::size_t>(g)]);
        BitMatrix act(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            // (g . f)(a') = f(a' g)
            BitVector out(dx * da);
            for (std::size_t ap = 0; ap < da; ++ap) {
                const Element prod = a.multiply(hopf::basis_element(static_cast<int>(ap)), ge);
                for (std::size_t c = 0; c < da; ++c)
                    if (prod & hopf::basis_element(static_cast<int>(c)))
                        for (std::size_t x = 0; x < dx; ++x)
                            if (basis[k].get(x * da + c))
                                out.flip(x * da + ap);
            }
            auto coords = solver.solve(out);
            if (!coords)
                throw std::logic_error("coinduce: action leaves the B-linear maps");
            act.set_column(k, *coords);
        }
        gens.push_back(std::move(act));
    }
    return make_module(inc.ambient, std::move(names), std::move(degrees), std::move(gens));
}

} // namespace stabmod::gmod
