#include "stabmod/descent/descent.hpp"

#include "stabmod/gmod/change_of_rings.hpp"

#include <mutex>
#include <stdexcept>

namespace stabmod::descent {

namespace {

using hopf::Element;

BitVector to_vector(Element e, int dim)
{
    BitVector v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        if ((e >> i) & 1U)
            v.set(static_cast<std::size_t>(i), true);
    return v;
}

Element to_element(const BitVector& v)
{
    Element e = 0;
    for (auto i : v.support())
        e |= hopf::basis_element(static_cast<int>(i));
    return e;
}

/// The sub-algebra element mapping to e, if any.
std::optional<Element> preimage(const hopf::SubHopfInclusion& inc, Element e)
{
    const int da = inc.ambient->dim();
    std::vector<BitVector> cols;
    for (auto x : inc.embedding)
        cols.push_back(to_vector(x, da));
    auto x = f2::solve(BitMatrix::from_columns(cols, static_cast<std::size_t>(da)), to_vector(e, da));
    if (!x)
        return std::nullopt;
    return to_element(*x);
}

/// Action on x of an ambient element a = eps g + inc(e).
BitMatrix act_ambient(const FirstOrderModule& x, Element a)
{
    const Element g = hopf::basis_element(x.generator);
    const bool has_g = (a & g) != 0;
    auto rest = preimage(x.inc, a & ~g);
    if (!rest)
        throw std::invalid_argument("first-order module: element " + x.inc.ambient->element_to_string(a) +
                                    " is not in the span of the generator and the subalgebra");
    BitMatrix out = x.module.act_element(*rest);
    if (has_g)
        out ^= x.s;
    return out;
}

/// For every subalgebra generator q: q g + g q as a subalgebra element.
std::vector<std::pair<int, Element>> commutators(const hopf::SubHopfInclusion& inc, int generator)
{
    const auto& a = *inc.ambient;
    const Element g = hopf::basis_element(generator);
    std::vector<std::pair<int, Element>> out;
    for (int k = 0; k < inc.sub->num_generators(); ++k) {
        const Element q = inc.image(hopf::basis_element(inc.sub->generators[static_cast<std::size_t>(k)]));
        const Element c = a.multiply(q, g) ^ a.multiply(g, q);
        auto pre = preimage(inc, c);
        if (!pre)
            throw std::invalid_argument("first-order module: commutator of " + a.basis_names[static_cast<std::size_t>(generator)] +
                                        " with a subalgebra generator leaves the subalgebra");
        out.push_back({k, *pre});
    }
    return out;
}

/// Left-module basis of A over E: ambient basis indices r_j with {e r_j} a basis.
std::vector<int> left_basis(const hopf::SubHopfInclusion& inc)
{
    const auto& a = *inc.ambient;
    const int da = a.dim();
    std::vector<int> order(static_cast<std::size_t>(da));
    for (int i = 0; i < da; ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.degrees[static_cast<std::size_t>(x)] < a.degrees[static_cast<std::size_t>(y)]; });
    f2::EchelonBasis span(static_cast<std::size_t>(da));
    std::vector<int> out;
    for (int r : order) {
        f2::EchelonBasis trial = span;
        bool ok = true;
        for (auto e : inc.embedding)
            ok = ok && trial.insert(to_vector(a.multiply(e, hopf::basis_element(r)), da));
        if (ok) {
            span = trial;
            out.push_back(r);
        }
    }
    if (static_cast<int>(out.size()) * inc.sub->dim() != da)
        throw std::logic_error("left_basis: ambient algebra is not free over the subalgebra");
    return out;
}

/// Ambient resolution of the unit restricted to the subalgebra, with the change of basis per term.
struct RestrictedResolution
{
    std::shared_ptr<const stable::CompleteResolution> ambient;
    std::shared_ptr<const stable::CompleteResolution> sub;
    std::vector<int> rs;                    // left basis of A over E
    std::map<int, BitMatrix> to_ambient;    // sub coordinates -> ambient coordinates
    std::map<int, BitMatrix> from_ambient;
};

RestrictedResolution build_restricted(const hopf::SubHopfInclusion& inc, int s_min, int s_max)
{
    RestrictedResolution r;
    r.ambient = stable::unit_resolution(inc.ambient, s_min, s_max);
    r.rs = left_basis(inc);
    const auto& a = *inc.ambient;
    const std::size_t da = static_cast<std::size_t>(a.dim());
    const std::size_t de = static_cast<std::size_t>(inc.sub->dim());
    const std::size_t k = r.rs.size();
    stable::CompleteResolution sub;
    sub.module = gmod::share(gmod::unit_module(inc.sub));
    sub.s_min = s_min;
    sub.s_max = s_max;
    for (auto& [s, gens] : r.ambient->generators) {
        std::vector<int> degs;
        BitMatrix c(gens.size() * da, gens.size() * k * de);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) {
                degs.push_back(gens[i] + a.degrees[static_cast<std::size_t>(r.rs[j])]);
                for (std::size_t b = 0; b < de; ++b) {
                    const auto v = to_vector(a.multiply(inc.embedding[b], hopf::basis_element(r.rs[j])), a.dim());
                    for (auto x : v.support())
                        c.set(i * da + x, (i * k + j) * de + b, true);
                }
            }
        sub.generators[s] = degs;
        auto inv = f2::inverse(c);
        if (!inv)
            throw std::logic_error("restrict_unit_resolution: change of basis is singular");
        r.to_ambient[s] = c;
        r.from_ambient[s] = *inv;
    }
    for (auto& [s, d] : r.ambient->differential)
        sub.differential[s] = r.from_ambient.at(s - 1) * d * r.to_ambient.at(s);
    if (r.to_ambient.count(0))
        sub.augmentation = r.ambient->augmentation * r.to_ambient.at(0);
    if (r.from_ambient.count(-1))
        sub.coaugmentation = r.from_ambient.at(-1) * r.ambient->coaugmentation;
    r.sub = std::make_shared<const stable::CompleteResolution>(std::move(sub));
    return r;
}

std::shared_ptr<const RestrictedResolution> restrict_unit_resolution(const hopf::SubHopfInclusion& inc, int s_min, int s_max)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const RestrictedResolution>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[inc.ambient->name + "/" + inc.sub->name];
    if (!slot || slot->sub->s_min > s_min || slot->sub->s_max < s_max) {
        if (slot) {
            s_min = std::min(s_min, slot->sub->s_min);
            s_max = std::max(s_max, slot->sub->s_max);
        }
        slot = std::make_shared<const RestrictedResolution>(build_restricted(inc, s_min, s_max));
    }
    return slot;
}

} // namespace

std::vector<std::string> validate_first_order(const FirstOrderModule& x)
{
    std::vector<std::string> out;
    if (x.module.alg->name != x.inc.sub->name)
        out.push_back("module is not over the subalgebra");
    const std::size_t n = static_cast<std::size_t>(x.module.dim());
    if (x.s.rows() != n || x.s.cols() != n) {
        out.push_back("S has the wrong shape");
        return out;
    }
    const int dg = x.inc.ambient->degrees[static_cast<std::size_t>(x.generator)];
    for (std::size_t c = 0; c < n; ++c)
        for (auto r : x.s.column(c).support())
            if (x.module.degrees[r] != x.module.degrees[c] + dg) {
                out.push_back("S does not have degree " + std::to_string(dg) + " on " + x.module.names[c]);
                break;
            }
    for (auto [k, e] : commutators(x.inc, x.generator)) {
        const auto& q = x.module.gens[static_cast<std::size_t>(k)];
        if ((q * x.s) + (x.s * q) != x.module.act_element(e))
            out.push_back("linear relation with " + x.inc.sub->generator_name(k) + " fails");
    }
    return out;
}

std::optional<FirstOrderSpace> first_order_space(const hopf::SubHopfInclusion& inc, int generator, const AModule& m)
{
    const int dg = inc.ambient->degrees[static_cast<std::size_t>(generator)];
    const std::size_t n = static_cast<std::size_t>(m.dim());
    std::vector<std::pair<std::size_t, std::size_t>> vars; // (row, col) of S
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (m.degrees[r] == m.degrees[c] + dg)
                vars.push_back({r, c});
    const auto comms = commutators(inc, generator);
    // Unknown S enters q S + S q linearly; one equation per matrix entry and generator.
    std::vector<BitVector> rows;
    std::vector<bool> rhs;
    for (auto [k, e] : comms) {
        const auto& q = m.gens[static_cast<std::size_t>(k)];
        const auto target = m.act_element(e);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BitVector row(vars.size());
                for (std::size_t v = 0; v < vars.size(); ++v) {
                    const auto [a, b] = vars[v];
                    // (q S)_{ij} = sum_a q_{ia} S_{aj};  (S q)_{ij} = sum_b S_{ib} q_{bj}
                    bool bit = false;
                    if (b == j)
                        bit ^= q.get(i, a);
                    if (a == i)
                        bit ^= q.get(b, j);
                    row.set(v, bit);
                }
                rows.push_back(std::move(row));
                rhs.push_back(target.get(i, j));
            }
    }
    BitVector b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        b.set(i, rhs[i]);
    const auto system = BitMatrix::from_rows(rows, vars.size());
    auto x = rows.empty() ? std::optional<BitVector>(BitVector(vars.size())) : f2::solve(system, b);
    if (!x)
        return std::nullopt;
    auto to_matrix = [&](const BitVector& v) {
        BitMatrix s(n, n);
        for (auto k : v.support())
            s.set(vars[k].first, vars[k].second, true);
        return s;
    };
    FirstOrderSpace out{to_matrix(*x), {}};
    if (rows.empty()) {
        for (std::size_t k = 0; k < vars.size(); ++k) {
            BitVector v(vars.size());
            v.set(k, true);
            out.directions.push_back(to_matrix(v));
        }
    } else {
        const auto kb = f2::kernel_basis(system);
        for (std::size_t r = 0; r < kb.rows(); ++r)
            out.directions.push_back(to_matrix(kb.row(r)));
    }
    return out;
}

std::optional<BitMatrix> find_first_order_datum(const hopf::SubHopfInclusion& inc, int generator, const AModule& m)
{
    auto space = first_order_space(inc, generator, m);
    if (!space)
        return std::nullopt;
    return space->particular;
}

FirstOrderModule first_order_restriction(const hopf::SubHopfInclusion& inc, int generator, const AModule& ambient_module)
{
    return FirstOrderModule{inc, generator, gmod::restrict(inc, ambient_module), ambient_module.act(generator)};
}

FirstOrderModule first_order_tensor(const FirstOrderModule& x, const FirstOrderModule& y)
{
    if (x.generator != y.generator || x.inc.ambient->name != y.inc.ambient->name)
        throw std::invalid_argument("first_order_tensor: incompatible first-order modules");
    FirstOrderModule out{x.inc, x.generator, gmod::tensor(x.module, y.module), {}};
    const auto& a = *x.inc.ambient;
    out.s = BitMatrix(static_cast<std::size_t>(out.module.dim()), static_cast<std::size_t>(out.module.dim()));
    for (auto [j, k] : a.comult[static_cast<std::size_t>(x.generator)])
        out.s ^= act_ambient(x, hopf::basis_element(j)).kron(act_ambient(y, hopf::basis_element(k)));
    return out;
}

FirstOrderModule first_order_dual(const FirstOrderModule& x)
{
    FirstOrderModule out{x.inc, x.generator, gmod::dual(x.module), {}};
    out.s = act_ambient(x, x.inc.ambient->antipode[static_cast<std::size_t>(x.generator)]).transpose();
    return out;
}

FirstOrderModule first_order_end(const FirstOrderModule& m)
{
    return first_order_tensor(first_order_dual(m), m);
}

SSPage e1_first_order(const FirstOrderModule& x, const PageWindow& w)
{
    if (auto errs = validate_first_order(x); !errs.empty())
        throw std::invalid_argument("e1_first_order: " + errs.front());
    const auto& a = *x.inc.ambient;
    if (a.dim() != 2 * x.inc.sub->dim())
        throw std::invalid_argument("e1_first_order: the quotient A//E must be two-dimensional");
    if (preimage(x.inc, hopf::basis_element(x.generator)))
        throw std::invalid_argument("e1_first_order: the generator lies in the subalgebra");
    const int dg = a.degrees[static_cast<std::size_t>(x.generator)];
    const auto rrp = restrict_unit_resolution(x.inc, w.s_min - 1, w.s_max + 1);
    const auto& rr = *rrp;
    const auto xm = gmod::share(x.module);
    stable::HomComplex hc(rr.sub, xm);
    const std::size_t da = static_cast<std::size_t>(a.dim());
    const std::size_t de = static_cast<std::size_t>(x.inc.sub->dim());

    // Values of chi(z) . G for every coproduct term (y, z) of g and generator G, in sub coordinates.
    const auto& terms = a.comult[static_cast<std::size_t>(x.generator)];
    std::vector<BitMatrix> left_actions; // on A, column b = chi(z) b
    std::vector<BitMatrix> act_x;
    for (auto [y, z] : terms) {
        const Element cz = a.apply_antipode(hopf::basis_element(z));
        BitMatrix l(da, da);
        for (std::size_t b = 0; b < da; ++b)
            l.set_column(b, to_vector(a.multiply(cz, hopf::basis_element(static_cast<int>(b))), a.dim()));
        left_actions.push_back(std::move(l));
        act_x.push_back(act_ambient(x, hopf::basis_element(y)));
    }

    auto theta = [&](int s, int t, const BitVector& cochain) {
        const auto src = hc.cochain_basis(s, t);
        const auto tgt = hc.cochain_basis(s, t - dg);
        const std::size_t rank = rr.sub->generators.at(s).size();
        std::vector<BitVector> values(rank, BitVector(static_cast<std::size_t>(x.module.dim())));
        for (auto k : cochain.support())
            values[static_cast<std::size_t>(src[k].first)].flip(static_cast<std::size_t>(src[k].second));
        // f extended E-linearly: f(p) = sum p_{G,b} b f(G).
        auto eval = [&](const BitVector& p) {
            BitVector out(static_cast<std::size_t>(x.module.dim()));
            for (auto idx : p.support())
                out ^= x.module.act(static_cast<int>(idx % de)) * values[idx / de];
            return out;
        };
        const auto& to_a = rr.to_ambient.at(s);
        const auto& from_a = rr.from_ambient.at(s);
        const std::size_t rank_a = rr.ambient->generators.at(s).size();
        std::vector<BitVector> out_values(rank, BitVector(static_cast<std::size_t>(x.module.dim())));
        for (std::size_t g = 0; g < rank; ++g) {
            const auto in_a = to_a.column(g * de);
            for (std::size_t term = 0; term < terms.size(); ++term) {
                BitVector moved(rank_a * da);
                for (auto idx : in_a.support())
                    for (auto r : left_actions[term].column(idx % da).support())
                        moved.flip((idx / da) * da + r);
                out_values[g] ^= act_x[term] * eval(from_a * moved);
            }
        }
        BitVector out(tgt.size());
        std::size_t placed = 0;
        for (std::size_t k = 0; k < tgt.size(); ++k)
            if (out_values[static_cast<std::size_t>(tgt[k].first)].get(static_cast<std::size_t>(tgt[k].second))) {
                out.set(k, true);
                ++placed;
            }
        std::size_t total = 0;
        for (const auto& v : out_values)
            total += v.popcount();
        if (placed != total)
            throw std::logic_error("e1_first_order: action of the generator is not homogeneous");
        return out;
    };

    SSPage page;
    page.label = "E1 End first-order";
    page.window = w;
    const int lo = std::max(0, w.n_min - 1);
    std::map<std::pair<int, int>, stable::ExtGroup> groups;
    auto group = [&](int s, int t) -> const stable::ExtGroup& {
        auto it = groups.find({s, t});
        if (it == groups.end())
            it = groups.emplace(std::make_pair(s, t), hc.ext(s, t)).first;
        return it->second;
    };
    for (int n = lo; n <= w.n_max; ++n)
        for (int s = w.s_min; s <= w.s_max; ++s)
            for (int t = w.t_min; t <= w.t_max; ++t) {
                const auto& g = group(s, t - n * dg);
                if (g.dim() == 0)
                    continue;
                const Tridegree d{n, s, t};
                if (n >= w.n_min) {
                    page.dims[d] = g.dim();
                    page.basis[d] = BitMatrix::identity(static_cast<std::size_t>(g.dim()));
                }
                const auto& h = group(s, t - (n + 1) * dg);
                BitMatrix m(static_cast<std::size_t>(h.dim()), static_cast<std::size_t>(g.dim()));
                if (h.dim() > 0)
                    for (std::size_t c = 0; c < g.representatives.size(); ++c)
                        m.set_column(c, h.coordinates(theta(s, t - n * dg, g.representatives[c])));
                page.d1[d] = std::move(m);
            }
    page.warnings = check_page(page);
    return page;
}

SSPage e1_without_datum(const hopf::SubHopfInclusion& inc, int generator, const AModule& x, const PageWindow& w)
{
    if (x.alg->name != inc.sub->name)
        throw std::invalid_argument("e1_without_datum: module is not over the subalgebra");
    const int dg = inc.ambient->degrees[static_cast<std::size_t>(generator)];
    stable::HomComplex hc(stable::unit_resolution(inc.sub, w.s_min - 1, w.s_max + 1), gmod::share(x));
    SSPage page;
    page.label = "E1 End (no first-order datum)";
    page.window = w;
    page.d1_determined = false;
    for (int n = w.n_min; n <= w.n_max; ++n)
        for (int s = w.s_min; s <= w.s_max; ++s)
            for (int t = w.t_min; t <= w.t_max; ++t)
                if (const int k = hc.ext_dim(s, t - n * dg); k > 0) {
                    page.dims[Tridegree{n, s, t}] = k;
                    page.basis[Tridegree{n, s, t}] = BitMatrix::identity(static_cast<std::size_t>(k));
                }
    page.warnings.push_back("no first-order datum exists; d1 is not determined by the module");
    return page;
}

std::map<Tridegree, int> e1_dims_via_subalgebra(const hopf::SubHopfInclusion& inc, const AModule& m, const PageWindow& w)
{
    const auto t = gmod::T_of(inc);
    auto tm = gmod::share(t.module);
    const auto unit = BitMatrix::from_columns({t.unit}, static_cast<std::size_t>(t.dim()));
    const auto tbar = gmod::quotient(tm, unit.transpose()).first;
    std::map<Tridegree, int> out;
    const auto um = gmod::restrict(inc, m);
    AModule power = gmod::unit_module(inc.ambient);
    for (int n = 0; n <= w.n_max; ++n) {
        if (n > 0)
            power = gmod::tensor(power, tbar);
        if (n < w.n_min)
            continue;
        const auto chart = stable::ext(um, gmod::restrict(inc, gmod::tensor(power, m)), {w.s_min, w.s_max, w.t_min, w.t_max});
        for (auto& [st, k] : chart.dims)
            out[Tridegree{n, st.first, st.second}] = k;
    }
    return out;
}

} // namespace stabmod::descent

namespace stabmod::descent {

E1Pairing::E1Pairing(const FirstOrderModule& unit, const FirstOrderModule& x, const PageWindow& w)
    : unit_(unit), x_(x), w_(w), unit_page_(e1_first_order(unit, w)), page_(e1_first_order(x, w))
{
    if (unit.module.dim() != 1 || unit.generator != x.generator || unit.inc.ambient->name != x.inc.ambient->name)
        throw std::invalid_argument("E1Pairing: first argument must be the unit over the same inclusion");
    if (w.s_min > 0)
        throw std::invalid_argument("E1Pairing: window must contain s = 0");
    res_ = restrict_unit_resolution(x.inc, w.s_min - 1, w.s_max + 1)->sub;
    dg_ = x.inc.ambient->degrees[static_cast<std::size_t>(x.generator)];
}

BitVector E1Pairing::multiply(const Tridegree& a, const BitVector& ca, const Tridegree& y, const BitVector& cy) const
{
    if (a.s < 0 || y.s < 0)
        throw std::invalid_argument("E1Pairing::multiply: classes must have s >= 0");
    const auto xm = gmod::share(x_.module);
    stable::HomComplex hu(res_, gmod::share(unit_.module)), hx(res_, xm);
    const int ta = a.t - a.n * dg_, ty = y.t - y.n * dg_;
    const auto ga = hu.ext(a.s, ta);
    const auto gy = hx.ext(y.s, ty);
    const auto gt = hx.ext(a.s + y.s, ta + ty);
    BitVector out(static_cast<std::size_t>(gt.dim()));
    if (gt.dim() == 0)
        return out;
    BitVector va(ga.cochain_basis.size()), vy(gy.cochain_basis.size());
    for (auto i : ca.support())
        va ^= ga.representatives[i];
    for (auto j : cy.support())
        vy ^= gy.representatives[j];
    if (va.is_zero() || vy.is_zero())
        return out;
    stable::ProductEngine engine(res_);
    return gt.coordinates(engine.cup(unit_.module, a.s, ta, va, x_.module, y.s, ty, vy));
}

BitVector E1Pairing::d1(const SSPage& p, const Tridegree& d, const BitVector& c) const
{
    auto it = p.d1.find(d);
    if (it == p.d1.end())
        throw std::out_of_range("E1Pairing: no d1 at " + to_string(d));
    return it->second * c;
}

E1Pairing::LeibnizReport E1Pairing::leibniz() const
{
    LeibnizReport rep;
    stable::HomComplex hx(res_, gmod::share(x_.module));
    auto unit_vector = [](int n, std::size_t i) {
        BitVector v(static_cast<std::size_t>(n));
        v.set(i, true);
        return v;
    };
    for (auto& [da, ka] : unit_page_.dims) {
        if (da.s < 0)
            continue;
        for (auto& [dy, ky] : page_.dims) {
            if (dy.s < 0)
                continue;
            const Tridegree dt{da.n + dy.n, da.s + dy.s, da.t + dy.t};
            if (!w_.contains(dt))
                continue;
            const Tridegree da1{da.n + 1, da.s, da.t}, dy1{dy.n + 1, dy.s, dy.t};
            const int next_dim = hx.ext_dim(dt.s, dt.t - (dt.n + 1) * dg_);
            for (int i = 0; i < ka; ++i)
                for (int j = 0; j < ky; ++j) {
                    const auto ea = unit_vector(ka, static_cast<std::size_t>(i));
                    const auto ey = unit_vector(ky, static_cast<std::size_t>(j));
                    const auto prod = multiply(da, ea, dy, ey);
                    BitVector lhs(static_cast<std::size_t>(next_dim));
                    if (!prod.is_zero())
                        lhs = d1(page_, dt, prod);
                    BitVector rhs(static_cast<std::size_t>(next_dim));
                    if (auto a1 = d1(unit_page_, da, ea); !a1.is_zero())
                        rhs ^= multiply(da1, a1, dy, ey);
                    if (auto y1 = d1(page_, dy, ey); !y1.is_zero())
                        rhs ^= multiply(da, ea, dy1, y1);
                    ++rep.checked;
                    if (lhs != rhs)
                        rep.failures.push_back("a = " + to_string(da) + "#" + std::to_string(i) + ", y = " + to_string(dy) + "#" +
                                               std::to_string(j));
                }
        }
    }
    return rep;
}

} // namespace stabmod::descent
