#include "stabmod/stable/stable.hpp"

#include "stabmod/hopf/builtins.hpp"

#include <stdexcept>

namespace stabmod::stable {

namespace {

/// Lifts cocycles P_s -> Y to chain maps F_k : P_{s+k} -> P_k (x) Y over the augmentation P_0 (x) Y -> Y.
class ChainLifter
{
public:
    ChainLifter(std::shared_ptr<const CompleteResolution> p, const AModule& y) : p_(std::move(p)), y_(y) {}

    /// values[j] = image of generator j of P_s in Y. Returns F_0 .. F_depth as (dim C_k) x rank(P_{s+k}).
    std::vector<BitMatrix> lift(int s, const std::vector<BitVector>& values, int depth)
    {
        if (s + depth > p_->s_max)
            throw std::out_of_range("insufficient resolution window");
        std::vector<BitMatrix> out;
        const std::size_t da = static_cast<std::size_t>(p_->module->alg->dim());
        for (int k = 0; k <= depth; ++k) {
            const auto& gens = p_->generators.at(s + k);
            const auto& ck = module(k);
            BitMatrix f(static_cast<std::size_t>(ck.dim()), gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) {
                BitVector rhs;
                if (k == 0) {
                    rhs = values[i];
                } else {
                    const auto& prev = out.back();
                    const auto& ck1 = module(k - 1);
                    rhs = BitVector(static_cast<std::size_t>(ck1.dim()));
                    const auto& d = p_->d(s + k);
                    for (std::size_t r = 0; r < d.rows(); ++r)
                        if (d.get(r, i * da))
                            rhs ^= ck1.act(static_cast<int>(r % da)) * prev.column(r / da);
                }
                auto x = solver(k).solve(rhs);
                if (!x)
                    throw std::logic_error("chain lift failed: input is not a cocycle");
                f.set_column(i, *x);
            }
            out.push_back(std::move(f));
        }
        return out;
    }

    const AModule& module(int k)
    {
        while (static_cast<int>(modules_.size()) <= k)
            modules_.push_back(gmod::tensor(p_->term(static_cast<int>(modules_.size())), y_));
        return modules_[static_cast<std::size_t>(k)];
    }

private:
    const f2::LinearSolver& solver(int k)
    {
        while (static_cast<int>(solvers_.size()) <= k) {
            const int j = static_cast<int>(solvers_.size());
            const auto iy = BitMatrix::identity(static_cast<std::size_t>(y_.dim()));
            BitMatrix m = j == 0 ? p_->augmentation.kron(iy) : p_->d(j).kron(iy);
            solvers_.emplace_back(m);
        }
        return solvers_[static_cast<std::size_t>(k)];
    }

    std::shared_ptr<const CompleteResolution> p_;
    AModule y_;
    std::vector<AModule> modules_;
    std::vector<f2::LinearSolver> solvers_;
};

std::vector<BitVector> cochain_values(const HomComplex& hc, int s, int t, const BitVector& c)
{
    const auto basis = hc.cochain_basis(s, t);
    if (c.size() != basis.size())
        throw std::invalid_argument("cochain has the wrong length for its bidegree");
    std::vector<BitVector> values(hc.resolution().generators.at(s).size(), BitVector(static_cast<std::size_t>(hc.coefficients().dim())));
    for (auto k : c.support())
        values[static_cast<std::size_t>(basis[k].first)].flip(static_cast<std::size_t>(basis[k].second));
    return values;
}

/// (A-hat (x) 1_Y) F where A-hat : P_s -> X extends the cocycle a linearly; output in cochain coordinates.
BitVector compose_with(const HomComplex& target, int s_out, int t_out, const AModule& x, const std::vector<BitVector>& a_values,
                       const BitMatrix& lifted, std::size_t dy)
{
    const std::size_t da = static_cast<std::size_t>(x.alg->dim());
    const std::size_t dx = static_cast<std::size_t>(x.dim());
    const std::size_t rank_s = a_values.size();
    BitMatrix ahat(dx, rank_s * da);
    for (std::size_t j = 0; j < rank_s; ++j)
        for (std::size_t b = 0; b < da; ++b)
            ahat.set_column(j * da + b, x.act(static_cast<int>(b)) * a_values[j]);
    const auto full = ahat.kron(BitMatrix::identity(dy)) * lifted; // (dx*dy) x rank(P_out)
    const auto basis = target.cochain_basis(s_out, t_out);
    BitVector out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        out.set(k, full.get(static_cast<std::size_t>(basis[k].second), static_cast<std::size_t>(basis[k].first)));
    // Every nonzero entry must lie in the listed bidegree.
    std::size_t count = 0;
    for (std::size_t r = 0; r < full.rows(); ++r)
        for (std::size_t c = 0; c < full.cols(); ++c)
            count += full.get(r, c);
    if (count != out.popcount())
        throw std::logic_error("product cocycle is not homogeneous");
    return out;
}

} // namespace

ProductEngine::ProductEngine(hopf::HopfPtr alg, int s_max)
    : alg_(alg), p_(unit_resolution(alg, -2, s_max + 1)), unit_(p_, gmod::share(gmod::unit_module(alg)))
{
}

ProductEngine::ProductEngine(std::shared_ptr<const CompleteResolution> p)
    : alg_(p->module->alg), p_(p), unit_(p_, gmod::share(gmod::unit_module(alg_)))
{
    if (p_->module->dim() != 1)
        throw std::invalid_argument("ProductEngine: resolution is not of the unit");
}

BitVector ProductEngine::cup(const AModule& x, int s1, int t1, const BitVector& a, const AModule& y, int s2, int t2, const BitVector& b) const
{
    if (s1 < 0 || s2 < 0)
        throw std::invalid_argument("cup: classes must have s >= 0");
    HomComplex hx(p_, gmod::share(x)), hy(p_, gmod::share(y));
    auto xy = gmod::tensor(x, y);
    HomComplex hxy(p_, gmod::share(xy));
    ChainLifter lifter(p_, y);
    const auto lifted = lifter.lift(s2, cochain_values(hy, s2, t2, b), s1);
    return compose_with(hxy, s1 + s2, t1 + t2, x, cochain_values(hx, s1, t1, a), lifted.back(), static_cast<std::size_t>(y.dim()));
}

BitVector ProductEngine::yoneda(int s1, int t1, const BitVector& a, int s2, int t2, const BitVector& b) const
{
    const auto one = gmod::unit_module(alg_);
    return cup(one, s1, t1, a, one, s2, t2, b);
}

BigradedChart labelled_unit_ext_A1(const ChartWindow& w)
{
    auto alg = hopf::builtin_A1();
    ProductEngine engine(alg, std::max(w.s_max, 4));
    const auto& hc = engine.unit_complex();
    BigradedChart chart;
    chart.window = w;
    struct Gen
    {
        std::string name;
        int s, t;
        BitVector rep;
    };
    std::vector<Gen> gens{{"v0", 1, 1, {}}, {"η", 1, 2, {}}, {"α", 3, 7, {}}, {"β", 4, 12, {}}};
    for (auto& g : gens) {
        auto grp = hc.ext(g.s, g.t);
        if (grp.dim() != 1)
            throw std::logic_error("unexpected Ext group at a generator bidegree");
        g.rep = grp.representatives[0];
    }
    // Standard monomials of F[v0, η, α, β]/(v0 η, η^3, η α, α^2 + v0^2 β): β^d v0^a α^c (c <= 1), β^d η^b (b = 1, 2).
    struct Mono
    {
        std::string label;
        std::vector<int> factors;
    };
    std::vector<Mono> monos;
    auto power = [](const std::string& x, int k) {
        if (k == 0)
            return std::string();
        return k == 1 ? x : x + "^" + std::to_string(k);
    };
    for (int d = 0; 4 * d <= w.s_max; ++d) {
        for (int c = 0; c <= 1; ++c)
            for (int a = 0; a + 3 * c + 4 * d <= w.s_max; ++a) {
                Mono m;
                for (int i = 0; i < a; ++i)
                    m.factors.push_back(0);
                for (int i = 0; i < c; ++i)
                    m.factors.push_back(2);
                for (int i = 0; i < d; ++i)
                    m.factors.push_back(3);
                m.label = power("v0", a) + power("α", c) + power("β", d);
                monos.push_back(m);
            }
        for (int b = 1; b <= 2 && b + 4 * d <= w.s_max; ++b) {
            Mono m;
            for (int i = 0; i < b; ++i)
                m.factors.push_back(1);
            for (int i = 0; i < d; ++i)
                m.factors.push_back(3);
            m.label = power("η", b) + power("β", d);
            monos.push_back(m);
        }
    }
    std::map<std::pair<int, int>, std::vector<std::pair<std::string, BitVector>>> by_degree;
    for (auto& m : monos) {
        if (m.label.empty())
            m.label = "1";
        int s = 0, t = 0;
        BitVector cur(1);
        cur.set(0, true); // the unit class on P_0
        for (int f : m.factors) {
            const auto& g = gens[static_cast<std::size_t>(f)];
            cur = engine.yoneda(s, t, cur, g.s, g.t, g.rep);
            s += g.s;
            t += g.t;
        }
        if (s >= w.s_min && s <= w.s_max && t >= w.t_min && t <= w.t_max)
            by_degree[{s, t}].push_back({m.label, cur});
    }
    for (int s = std::max(w.s_min, 0); s <= w.s_max; ++s)
        for (int t = w.t_min; t <= w.t_max; ++t) {
            const int d = hc.ext_dim(s, t);
            if (d == 0)
                continue;
            chart.dims[{s, t}] = d;
            auto grp = hc.ext(s, t);
            f2::EchelonBasis span(static_cast<std::size_t>(d));
            std::vector<std::string> labels;
            for (auto& [label, cocycle] : by_degree[{s, t}])
                if (span.insert(grp.coordinates(cocycle)))
                    labels.push_back(label);
            if (static_cast<int>(labels.size()) == d)
                chart.labels[{s, t}] = labels;
        }
    return chart;
}

} // namespace stabmod::stable
