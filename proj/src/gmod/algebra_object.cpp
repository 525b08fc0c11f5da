#include "stabmod/gmod/algebra_object.hpp"

#include <stdexcept>

namespace stabmod::gmod {

BitVector AlgebraObject::multiply(const BitVector& x, const BitVector& y) const
{
    const std::size_t d = static_cast<std::size_t>(dim());
    BitVector pair(d * d);
    for (auto i : x.support())
        for (auto j : y.support())
            pair.flip(i * d + j);
    return mult * pair;
}

CoalgebraObject quotient_coalgebra(const hopf::SubHopfInclusion& inc)
{
    const auto& a = *inc.ambient;
    const auto& b = *inc.sub;
    if (a.dim() % b.dim() != 0)
        throw std::logic_error("quotient_coalgebra: dim A is not divisible by dim B");
    const std::size_t da = static_cast<std::size_t>(a.dim());
    auto free = share(free_module(inc.ambient, {0}));
    std::vector<BitVector> rel;
    for (std::size_t i = 0; i < da; ++i)
        for (int k = 1; k < b.dim(); ++k) {
            const Element e = a.multiply(hopf::basis_element(static_cast<int>(i)), inc.embedding[static_cast<std::size_t>(k)]);
            BitVector v(da);
            for (std::size_t c = 0; c < da; ++c)
                if (e & hopf::basis_element(static_cast<int>(c)))
                    v.set(c, true);
            if (!v.is_zero())
                rel.push_back(std::move(v));
        }
    auto [mod, proj] = quotient(free, BitMatrix::from_rows(rel, da));
    const std::size_t q = static_cast<std::size_t>(mod.dim());
    if (q * static_cast<std::size_t>(b.dim()) != da)
        throw std::logic_error("quotient_coalgebra: dim(A//B) * dim(B) != dim(A)");
    CoalgebraObject c;
    c.comult = BitMatrix(q * q, q);
    c.counit = BitVector(q);
    for (std::size_t k = 0; k < q; ++k) {
        // Lift of quotient basis element k: the free basis element with the same name.
        const int lift = free->index_of(mod.names[k]);
        for (auto [p, r] : a.comult[static_cast<std::size_t>(lift)]) {
            const auto pp = proj.matrix.column(static_cast<std::size_t>(p));
            const auto pr = proj.matrix.column(static_cast<std::size_t>(r));
            for (auto i : pp.support())
                for (auto j : pr.support())
                    c.comult.flip(i * q + j, k);
        }
        c.counit.set(k, (a.counit >> lift) & 1);
    }
    c.projection = proj.matrix;
    c.module = std::move(mod);
    return c;
}

AlgebraObject T_of(const hopf::SubHopfInclusion& inc)
{
    auto c = quotient_coalgebra(inc);
    AlgebraObject t;
    t.module = dual(c.module);
    t.mult = c.comult.transpose();
    t.unit = c.counit;
    return t;
}

AlgebraObject unit_algebra(HopfPtr alg)
{
    AlgebraObject t;
    t.module = unit_module(alg);
    t.mult = BitMatrix::identity(1);
    t.unit = BitVector(1);
    t.unit.set(0, true);
    return t;
}

AlgebraObject T_product(const std::vector<AlgebraObject>& ts)
{
    if (ts.empty())
        throw std::invalid_argument("T_product: empty list");
    std::vector<AModule> mods;
    for (const auto& t : ts)
        mods.push_back(t.module);
    AlgebraObject out;
    out.module = direct_sum(mods);
    const std::size_t n = static_cast<std::size_t>(out.dim());
    out.mult = BitMatrix(n, n * n);
    out.unit = BitVector(n);
    std::size_t offset = 0;
    for (const auto& t : ts) {
        const std::size_t d = static_cast<std::size_t>(t.dim());
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (t.mult.get(r, i * d + j))
                        out.mult.set(offset + r, (offset + i) * n + offset + j, true);
        for (auto i : t.unit.support())
            out.unit.set(offset + i, true);
        offset += d;
    }
    return out;
}

std::vector<std::string> validate_algebra_object(const AlgebraObject& t)
{
    std::vector<std::string> report;
    const std::size_t d = static_cast<std::size_t>(t.dim());
    auto mod = share(t.module);
    auto sq = share(tensor(t.module, t.module));
    for (const auto& e : validate_map(ModuleMap{sq, mod, 0, t.mult}))
        report.push_back("multiplication: " + e);
    auto unit_map = ModuleMap{share(unit_module(t.module.alg)), mod, 0, BitMatrix::from_columns({t.unit}, d)};
    for (const auto& e : validate_map(unit_map))
        report.push_back("unit: " + e);
    for (std::size_t i = 0; i < d; ++i) {
        const auto ei = BitVector::unit(d, i);
        if (!(t.multiply(t.unit, ei) == ei) || !(t.multiply(ei, t.unit) == ei))
            report.push_back("unit law fails on " + t.module.names[i]);
        for (std::size_t j = 0; j < d; ++j) {
            const auto ej = BitVector::unit(d, j);
            if (!(t.multiply(ei, ej) == t.multiply(ej, ei)))
                report.push_back("commutativity fails on (" + t.module.names[i] + ", " + t.module.names[j] + ")");
            for (std::size_t k = 0; k < d; ++k) {
                const auto ek = BitVector::unit(d, k);
                if (!(t.multiply(t.multiply(ei, ej), ek) == t.multiply(ei, t.multiply(ej, ek))))
                    report.push_back("associativity fails");
            }
        }
    }
    return report;
}

} // namespace stabmod::gmod
