#include "stabmod/descent/descent.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stabmod::descent {

namespace {

/// Exponent bound per generator when enumerating monomials.
constexpr int kExponentCap = 40;

std::string monomial_name(const PresentationSummand& p, const std::vector<int>& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        out += p.generators[i].name;
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    if (out.empty())
        out = "1";
    return p.shift_name.empty() ? out : p.shift_name + " " + out;
}

bool in_box(const std::array<int, 3>& d, const std::array<int, 6>& box)
{
    return d[0] >= box[0] && d[0] <= box[1] && d[1] >= box[2] && d[1] <= box[3] && d[2] >= box[4] && d[2] <= box[5];
}

} // namespace

std::array<int, 3> IndexTranslation::apply(const Tridegree& d) const
{
    std::array<int, 3> out{};
    const std::array<int, 3> in{d.n, d.s, d.t};
    for (int r = 0; r < 3; ++r) {
        out[static_cast<std::size_t>(r)] = offset[static_cast<std::size_t>(r)];
        for (int c = 0; c < 3; ++c)
            out[static_cast<std::size_t>(r)] += matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * in[static_cast<std::size_t>(c)];
    }
    return out;
}

Tridegree IndexTranslation::invert(int s, int t, int n) const
{
    const auto& m = matrix;
    auto det2 = [&](int r0, int r1, int c0, int c1) { return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]; };
    const int det = m[0][0] * det2(1, 2, 1, 2) - m[0][1] * det2(1, 2, 0, 2) + m[0][2] * det2(1, 2, 0, 1);
    if (det != 1 && det != -1)
        throw std::invalid_argument("IndexTranslation " + name + " is not invertible over the integers");
    const std::array<int, 3> y{s - offset[0], t - offset[1], n - offset[2]};
    // Adjugate times y, divided by det.
    std::array<int, 3> x{};
    for (int c = 0; c < 3; ++c) {
        const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        int acc = 0;
        for (int r = 0; r < 3; ++r) {
            const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
            acc += (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) * y[static_cast<std::size_t>(r)];
        }
        x[static_cast<std::size_t>(c)] = acc * det;
    }
    return Tridegree{x[0], x[1], x[2]};
}

IndexTranslation homotopy_translation()
{
    IndexTranslation tr;
    tr.name = "homotopy";
    tr.matrix = {{{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}};
    return tr;
}

PresentationCount count_presentation(const Presentation& p, const std::array<int, 6>& box)
{
    PresentationCount out;
    for (const auto& summand : p) {
        const std::size_t k = summand.generators.size();
        std::vector<int> e(k, 0);
        std::function<void(std::size_t, std::array<int, 3>)> walk = [&](std::size_t i, std::array<int, 3> deg) {
            if (i == k) {
                if (in_box(deg, box)) {
                    ++out.dims[deg];
                    out.monomials[deg].push_back(monomial_name(summand, e));
                }
                return;
            }
            const auto& g = summand.generators[i];
            for (int a = g.laurent ? -kExponentCap : 0; a <= kExponentCap; ++a) {
                e[i] = a;
                walk(i + 1, {deg[0] + a * g.degree[0], deg[1] + a * g.degree[1], deg[2] + a * g.degree[2]});
            }
            e[i] = 0;
        };
        walk(0, summand.shift);
    }
    return out;
}

PageWindow window_for_box(const IndexTranslation& tr, const std::array<int, 6>& box)
{
    PageWindow w;
    bool first = true;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const auto d = tr.invert(box[static_cast<std::size_t>(a)], box[static_cast<std::size_t>(2 + b)], box[static_cast<std::size_t>(4 + c)]);
                if (first) {
                    w = PageWindow{d.s, d.s, d.t, d.t, d.n, d.n};
                    first = false;
                }
                w.s_min = std::min(w.s_min, d.s);
                w.s_max = std::max(w.s_max, d.s);
                w.t_min = std::min(w.t_min, d.t);
                w.t_max = std::max(w.t_max, d.t);
                w.n_min = std::min(w.n_min, d.n);
                w.n_max = std::max(w.n_max, d.n);
            }
    w.n_min = std::max(w.n_min, 0);
    return w;
}

PresentationComparison compare_with_presentation(const SSPage& page, const IndexTranslation& tr, const Presentation& p,
                                                 const std::array<int, 6>& box)
{
    PresentationComparison cmp;
    const auto expected = count_presentation(p, box);
    std::map<std::array<int, 3>, int> computed;
    for (auto& [d, k] : page.dims) {
        const auto e = tr.apply(d);
        if (in_box(e, box) && k > 0)
            computed[e] = k;
    }
    auto fmt = [](const std::array<int, 3>& e) {
        return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
    };
    std::map<std::array<int, 3>, int> all = computed;
    for (auto& [e, k] : expected.dims)
        all.emplace(e, 0);
    for (auto& [e, unused] : all) {
        const auto d = tr.invert(e[0], e[1], e[2]);
        if (!page.window.contains(d)) {
            cmp.match = false;
            cmp.mismatches.push_back(fmt(e) + ": outside the computed window");
            continue;
        }
        ++cmp.checked;
        const int want = expected.dims.count(e) ? expected.dims.at(e) : 0;
        const int got = computed.count(e) ? computed.at(e) : 0;
        if (want != got) {
            cmp.match = false;
            std::string line = fmt(e) + ": computed " + std::to_string(got) + ", presentation " + std::to_string(want);
            if (expected.monomials.count(e))
                for (const auto& m : expected.monomials.at(e))
                    line += " [" + m + "]";
            cmp.mismatches.push_back(line);
        }
    }
    return cmp;
}

ReconcileReport reconcile(const SSPage& e2_page, const stable::BigradedChart& abutment)
{
    ReconcileReport rep;
    std::map<std::pair<int, int>, ReconcileRow> rows; // (t, total)
    for (auto& [d, k] : e2_page.dims) {
        auto& row = rows[{d.t, d.s + d.n}];
        row.total = d.s + d.n;
        row.t = d.t;
        row.e2_dim += k;
    }
    for (auto& [st, k] : abutment.dims) {
        auto& row = rows[{st.second, st.first}];
        row.total = st.first;
        row.t = st.second;
        row.abutment_dim += k;
    }
    int surplus = 0;
    std::vector<std::string> problems;
    for (auto& [key, row] : rows) {
        rep.rows.push_back(row);
        const int excess = row.e2_dim - row.abutment_dim;
        if (excess < 0) {
            rep.contradiction = true;
            problems.push_back("total " + std::to_string(row.total) + ", t = " + std::to_string(row.t) + ": abutment exceeds E2");
        }
        surplus += std::max(excess, 0);
    }
    // Each unit of differential rank removes one class from each of two adjacent totals.
    rep.min_differential_rank = (surplus + 1) / 2;
    if (rep.contradiction)
        rep.summary = problems.front();
    else
        rep.summary = "consistent; differentials of total rank >= " + std::to_string(rep.min_differential_rank) + " required";
    return rep;
}

} // namespace stabmod::descent

namespace stabmod::descent {

PicPage pic_page_from_end(const SSPage& end_page, const std::map<int, std::string>& pic0_row, const IndexTranslation& tr)
{
    if (pic0_row.empty())
        throw std::invalid_argument("pic_page_from_end: the s = 0 row (Picard groups of the layers) has no algorithm here "
                                    "and must be supplied, for example {0: \"Z+Z\"} for E(1)");
    PicPage out;
    out.pic0 = pic0_row;
    for (auto& [d, k] : end_page.dims) {
        const auto e = tr.apply(d);
        if (e[1] != 0 || k == 0)
            continue;
        const int s = e[0] + 1;
        if (s >= 2)
            out.dims[{e[2], s}] += k;
    }
    out.notes.push_back("s = 1 row set to zero");
    out.notes.push_back("s >= 2 entries copied from " + end_page.label);
    return out;
}

std::map<Tridegree, int> end_diagonal(const SSPage& end_page, const IndexTranslation& tr)
{
    std::map<Tridegree, int> out;
    for (auto& [d, k] : end_page.dims) {
        const auto e = tr.apply(d);
        if (k > 0 && e[1] == 0 && e[2] == e[0] + 1)
            out[d] = k;
    }
    return out;
}

} // namespace stabmod::descent
