#include "stabmod/hopf/hopf_algebra.hpp"

#include "stabmod/f2/bit_matrix.hpp"

#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace stabmod::hopf {

namespace {

template <typename F>
void for_each_bit(Element e, F&& f)
{
    while (e) {
        f(std::countr_zero(e));
        e &= e - 1;
    }
}

/// Element of h (x) h: row i holds the right factors paired with b_i.
using Tensor2 = std::vector<Element>;

Tensor2 coproduct(const HopfAlgebra& h, Element a)
{
    Tensor2 t(static_cast<std::size_t>(h.dim()), 0);
    for_each_bit(a, [&](int i) {
        for (auto [j, k] : h.comult[static_cast<std::size_t>(i)])
            t[static_cast<std::size_t>(j)] ^= basis_element(k);
    });
    return t;
}

Tensor2 tensor_multiply(const HopfAlgebra& h, const Tensor2& x, const Tensor2& y)
{
    Tensor2 out(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (!y[j])
                continue;
            const Element right = h.multiply(x[i], y[j]);
            for_each_bit(h.mult[i][j], [&](int k) { out[static_cast<std::size_t>(k)] ^= right; });
        }
    }
    return out;
}

} // namespace

Element HopfAlgebra::multiply(Element a, Element b) const
{
    Element out = 0;
    for_each_bit(a, [&](int i) {
        for_each_bit(b, [&](int j) { out ^= mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; });
    });
    return out;
}

Element HopfAlgebra::word_value(const Word& w) const
{
    Element v = basis_element(unit());
    for (int g : w)
        v = multiply(v, basis_element(generators[static_cast<std::size_t>(g)]));
    return v;
}

Element HopfAlgebra::polynomial_value(const Polynomial& p) const
{
    Element v = 0;
    for (const auto& w : p)
        v ^= word_value(w);
    return v;
}

Element HopfAlgebra::apply_antipode(Element a) const
{
    Element out = 0;
    for_each_bit(a, [&](int i) { out ^= antipode[static_cast<std::size_t>(i)]; });
    return out;
}

int HopfAlgebra::degree_of(Element a) const
{
    if (a == 0)
        throw std::invalid_argument("degree_of: zero element has no degree");
    int d = degrees[static_cast<std::size_t>(std::countr_zero(a))];
    for_each_bit(a, [&](int i) {
        if (degrees[static_cast<std::size_t>(i)] != d)
            throw std::invalid_argument("degree_of: inhomogeneous element");
    });
    return d;
}

int HopfAlgebra::top_degree() const
{
    int top = 0;
    for (int d : degrees)
        top = std::max(top, d);
    return top;
}

int HopfAlgebra::index_of(const std::string& basis_name) const
{
    for (std::size_t i = 0; i < basis_names.size(); ++i)
        if (basis_names[i] == basis_name)
            return static_cast<int>(i);
    return -1;
}

std::string HopfAlgebra::element_to_string(Element a) const
{
    if (a == 0)
        return "0";
    std::string s;
    for_each_bit(a, [&](int i) {
        if (!s.empty())
            s += " + ";
        s += basis_names[static_cast<std::size_t>(i)];
    });
    return s;
}

int top_degree(const HopfAlgebra& h) { return h.top_degree(); }

void finalize(HopfAlgebra& h)
{
    const int n = h.dim();
    if (n > kMaxDim)
        throw std::invalid_argument("HopfAlgebra: dimension exceeds 64");
    std::vector<Word> words;
    std::vector<Element> values;
    f2::EchelonBasis span(static_cast<std::size_t>(n));
    auto to_vec = [n](Element e) {
        f2::BitVector v(static_cast<std::size_t>(n));
        for_each_bit(e, [&](int i) { v.set(static_cast<std::size_t>(i), true); });
        return v;
    };
    std::deque<Word> queue{Word{}};
    while (!queue.empty()) {
        Word w = queue.front();
        queue.pop_front();
        const Element v = h.word_value(w);
        if (v == 0 || !span.insert(to_vec(v)))
            continue;
        words.push_back(w);
        values.push_back(v);
        for (int g = 0; g < h.num_generators(); ++g) {
            Word next = w;
            next.push_back(g);
            queue.push_back(std::move(next));
        }
    }
    if (static_cast<int>(words.size()) != n)
        throw std::invalid_argument("HopfAlgebra '" + h.name + "': generators do not generate the algebra");
    std::vector<f2::BitVector> cols;
    for (auto v : values)
        cols.push_back(to_vec(v));
    const f2::LinearSolver solver(f2::BitMatrix::from_columns(cols, static_cast<std::size_t>(n)));
    h.expressions.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        auto x = solver.solve(to_vec(basis_element(i)));
        for (auto k : x->support())
            h.expressions[static_cast<std::size_t>(i)].push_back(words[k]);
    }
}

std::vector<std::string> validate_hopf(const HopfAlgebra& h)
{
    std::vector<std::string> report;
    const int n = h.dim();
    auto nm = [&](int i) { return h.basis_names[static_cast<std::size_t>(i)]; };
    if (n == 0 || n > kMaxDim) {
        report.push_back("dimension must be between 1 and 64");
        return report;
    }
    if (h.degrees.size() != static_cast<std::size_t>(n) || h.mult.size() != static_cast<std::size_t>(n) ||
        h.comult.size() != static_cast<std::size_t>(n) || h.antipode.size() != static_cast<std::size_t>(n)) {
        report.push_back("structure tables have inconsistent sizes");
        return report;
    }
    int deg0 = 0;
    for (int i = 0; i < n; ++i) {
        if (h.degrees[static_cast<std::size_t>(i)] < 0)
            report.push_back("connectedness: negative degree on " + nm(i));
        if (h.degrees[static_cast<std::size_t>(i)] == 0)
            ++deg0;
    }
    if (deg0 != 1 || h.degrees[0] != 0)
        report.push_back("connectedness: degree 0 must be one-dimensional and spanned by the unit (index 0)");

    auto homogeneous_in = [&](Element e, int d) {
        bool ok = true;
        for_each_bit(e, [&](int k) { ok = ok && h.degrees[static_cast<std::size_t>(k)] == d; });
        return ok;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!homogeneous_in(h.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                h.degrees[static_cast<std::size_t>(i)] + h.degrees[static_cast<std::size_t>(j)]))
                report.push_back("grading: product " + nm(i) + "*" + nm(j) + " has the wrong degree");
    for (int i = 0; i < n; ++i) {
        if (h.mult[0][static_cast<std::size_t>(i)] != basis_element(i) || h.mult[static_cast<std::size_t>(i)][0] != basis_element(i))
            report.push_back("unit: 1*" + nm(i) + " or " + nm(i) + "*1 differs from " + nm(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Element left = h.multiply(h.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], basis_element(k));
                const Element right = h.multiply(basis_element(i), h.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
                if (left != right)
                    report.push_back("associativity fails at (" + nm(i) + ", " + nm(j) + ", " + nm(k) + ")");
            }

    for (int i = 0; i < n; ++i) {
        const auto t = coproduct(h, basis_element(i));
        for (int j = 0; j < n; ++j)
            if (!homogeneous_in(t[static_cast<std::size_t>(j)], h.degrees[static_cast<std::size_t>(i)] - h.degrees[static_cast<std::size_t>(j)]))
                report.push_back("grading: coproduct of " + nm(i) + " is not homogeneous");
        // Counit: (eps (x) 1) Delta = id = (1 (x) eps) Delta.
        Element left = 0, right = 0;
        for (int j = 0; j < n; ++j) {
            if (h.counit & basis_element(j))
                left ^= t[static_cast<std::size_t>(j)];
            if (h.counit & t[static_cast<std::size_t>(j)])
                right ^= basis_element(j);
        }
        if (left != basis_element(i) || right != basis_element(i))
            report.push_back("counit axiom fails on " + nm(i));
        // Cocommutativity.
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (((t[static_cast<std::size_t>(j)] >> k) & 1) != ((t[static_cast<std::size_t>(k)] >> j) & 1)) {
                    report.push_back("cocommutativity fails on " + nm(i));
                    j = k = n;
                }
        // Coassociativity: compare (Delta (x) 1) Delta and (1 (x) Delta) Delta as sets of triples.
        std::vector<Element> lhs(static_cast<std::size_t>(n * n), 0), rhs(static_cast<std::size_t>(n * n), 0);
        for (int j = 0; j < n; ++j) {
            const auto tj = coproduct(h, basis_element(j));
            for_each_bit(t[static_cast<std::size_t>(j)], [&](int k) {
                for (int a = 0; a < n; ++a)
                    for_each_bit(tj[static_cast<std::size_t>(a)], [&](int b) {
                        lhs[static_cast<std::size_t>(a * n + b)] ^= basis_element(k);
                    });
                const auto tk = coproduct(h, basis_element(k));
                for (int a = 0; a < n; ++a)
                    rhs[static_cast<std::size_t>(j * n + a)] ^= tk[static_cast<std::size_t>(a)];
            });
        }
        if (lhs != rhs)
            report.push_back("coassociativity fails on " + nm(i));
        // Antipode: mu (S (x) 1) Delta = eta eps = mu (1 (x) S) Delta.
        Element s_left = 0, s_right = 0;
        for (int j = 0; j < n; ++j) {
            s_left ^= h.multiply(h.antipode[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j)]);
            s_right ^= h.multiply(basis_element(j), h.apply_antipode(t[static_cast<std::size_t>(j)]));
        }
        const Element expected = (h.counit & basis_element(i)) ? basis_element(0) : 0;
        if (s_left != expected || s_right != expected)
            report.push_back("antipode axiom fails on " + nm(i));
    }
    // Bialgebra compatibility.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto lhs = coproduct(h, h.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            const auto rhs = tensor_multiply(h, coproduct(h, basis_element(i)), coproduct(h, basis_element(j)));
            if (lhs != rhs)
                report.push_back("compatibility Delta(ab) = Delta(a)Delta(b) fails at (" + nm(i) + ", " + nm(j) + ")");
        }
    for (int g : h.generators)
        if (g < 0 || g >= n)
            report.push_back("generator index out of range");
    if (report.empty()) {
        HopfAlgebra copy = h;
        try {
            finalize(copy);
        } catch (const std::exception& e) {
            report.push_back(std::string("generation: ") + e.what());
        }
    }
    return report;
}

HopfPtr trivial_algebra()
{
    static const HopfPtr f = [] {
        HopfAlgebra h;
        h.name = "F";
        h.basis_names = {"1"};
        h.degrees = {0};
        h.mult = {{1}};
        h.comult = {{{0, 0}}};
        h.counit = 1;
        h.antipode = {1};
        finalize(h);
        return std::make_shared<const HopfAlgebra>(std::move(h));
    }();
    return f;
}

Element SubHopfInclusion::image(Element sub_element) const
{
    Element out = 0;
    for_each_bit(sub_element, [&](int i) { out ^= embedding[static_cast<std::size_t>(i)]; });
    return out;
}

std::vector<std::string> validate_inclusion(const SubHopfInclusion& inc)
{
    std::vector<std::string> report;
    const auto& s = *inc.sub;
    const auto& a = *inc.ambient;
    if (inc.embedding.size() != static_cast<std::size_t>(s.dim())) {
        report.push_back("embedding has the wrong length");
        return report;
    }
    f2::EchelonBasis span(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < s.dim(); ++i) {
        const Element e = inc.embedding[static_cast<std::size_t>(i)];
        f2::BitVector v(static_cast<std::size_t>(a.dim()));
        for_each_bit(e, [&](int k) { v.set(static_cast<std::size_t>(k), true); });
        if (!span.insert(v))
            report.push_back("embedding is not injective at " + s.basis_names[static_cast<std::size_t>(i)]);
        if (e == 0 || a.degree_of(e) != s.degrees[static_cast<std::size_t>(i)])
            report.push_back("embedding does not preserve the degree of " + s.basis_names[static_cast<std::size_t>(i)]);
    }
    if (!report.empty())
        return report;
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            if (inc.image(s.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) !=
                a.multiply(inc.embedding[static_cast<std::size_t>(i)], inc.embedding[static_cast<std::size_t>(j)]))
                report.push_back("embedding is not multiplicative at (" + s.basis_names[static_cast<std::size_t>(i)] + ", " +
                                 s.basis_names[static_cast<std::size_t>(j)] + ")");
    for (int i = 0; i < s.dim(); ++i) {
        const auto lhs = coproduct(a, inc.embedding[static_cast<std::size_t>(i)]);
        Tensor2 rhs(static_cast<std::size_t>(a.dim()), 0);
        for (auto [j, k] : s.comult[static_cast<std::size_t>(i)]) {
            const Element left = inc.embedding[static_cast<std::size_t>(j)];
            const Element right = inc.embedding[static_cast<std::size_t>(k)];
            for_each_bit(left, [&](int l) { rhs[static_cast<std::size_t>(l)] ^= right; });
        }
        if (lhs != rhs)
            report.push_back("embedding is not comultiplicative at " + s.basis_names[static_cast<std::size_t>(i)]);
    }
    return report;
}

SubHopfInclusion make_inclusion(HopfPtr sub, HopfPtr ambient, const std::vector<Element>& generator_images)
{
    if (generator_images.size() != sub->generators.size())
        throw std::invalid_argument("make_inclusion: one image per generator required");
    SubHopfInclusion inc{sub, ambient, {}};
    for (int i = 0; i < sub->dim(); ++i) {
        Element e = 0;
        for (const auto& w : sub->expressions[static_cast<std::size_t>(i)]) {
            Element v = basis_element(ambient->unit());
            for (int g : w)
                v = ambient->multiply(v, generator_images[static_cast<std::size_t>(g)]);
            e ^= v;
        }
        inc.embedding.push_back(e);
    }
    auto report = validate_inclusion(inc);
    if (!report.empty())
        throw std::invalid_argument("make_inclusion: " + report.front());
    return inc;
}

SubHopfInclusion generated_subalgebra(HopfPtr ambient, const std::string& name,
                                      const std::vector<std::string>& generator_names,
                                      const std::vector<Element>& generators)
{
    const auto& a = *ambient;
    const int n = a.dim();
    auto to_vec = [n](Element e) {
        f2::BitVector v(static_cast<std::size_t>(n));
        for_each_bit(e, [&](int i) { v.set(static_cast<std::size_t>(i), true); });
        return v;
    };
    // Breadth-first monomials in the generators give a basis of the subalgebra.
    std::vector<Word> words;
    std::vector<Element> values;
    f2::EchelonBasis span(static_cast<std::size_t>(n));
    std::deque<Word> queue{Word{}};
    while (!queue.empty()) {
        Word w = queue.front();
        queue.pop_front();
        Element v = basis_element(a.unit());
        for (int g : w)
            v = a.multiply(v, generators[static_cast<std::size_t>(g)]);
        if (v == 0 || !span.insert(to_vec(v)))
            continue;
        words.push_back(w);
        values.push_back(v);
        for (std::size_t g = 0; g < generators.size(); ++g) {
            Word next = w;
            next.push_back(static_cast<int>(g));
            queue.push_back(std::move(next));
        }
    }
    const int m = static_cast<int>(values.size());
    std::vector<f2::BitVector> cols;
    for (auto v : values)
        cols.push_back(to_vec(v));
    const f2::LinearSolver solver(f2::BitMatrix::from_columns(cols, static_cast<std::size_t>(n)));
    auto coords = [&](Element e) {
        auto x = solver.solve(to_vec(e));
        if (!x)
            throw std::invalid_argument("generated_subalgebra: element outside the subalgebra");
        Element out = 0;
        for (auto k : x->support())
            out |= basis_element(static_cast<int>(k));
        return out;
    };

    HopfAlgebra s;
    s.name = name;
    for (int i = 0; i < m; ++i) {
        std::string nm;
        for (int g : words[static_cast<std::size_t>(i)])
            nm += (nm.empty() ? "" : " ") + generator_names[static_cast<std::size_t>(g)];
        s.basis_names.push_back(nm.empty() ? "1" : nm);
        s.degrees.push_back(a.degree_of(values[static_cast<std::size_t>(i)]));
    }
    s.mult.assign(static_cast<std::size_t>(m), std::vector<Element>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coords(a.multiply(values[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(j)]));
    s.comult.resize(static_cast<std::size_t>(m));
    // Coproduct of a subalgebra element lies in sub (x) sub; change basis on both factors.
    for (int i = 0; i < m; ++i) {
        const auto t = coproduct(a, values[static_cast<std::size_t>(i)]);
        // t = sum_j b_j (x) t[j]; rewrite as sum over sub basis on the left first.
        std::vector<Element> by_right(static_cast<std::size_t>(n), 0); // right ambient basis -> left sub coords
        for (int j = 0; j < n; ++j)
            for_each_bit(t[static_cast<std::size_t>(j)], [&](int k) { by_right[static_cast<std::size_t>(k)] ^= basis_element(j); });
        std::vector<Element> left_coords(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < n; ++k)
            if (by_right[static_cast<std::size_t>(k)])
                left_coords[static_cast<std::size_t>(k)] = coords(by_right[static_cast<std::size_t>(k)]);
        // Now t = sum_k (sum_{p in left_coords[k]} v_p) (x) b_k; collect per p the right ambient element.
        std::vector<Element> right_of(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < n; ++k)
            for_each_bit(left_coords[static_cast<std::size_t>(k)], [&](int p) { right_of[static_cast<std::size_t>(p)] ^= basis_element(k); });
        for (int p = 0; p < m; ++p) {
            if (!right_of[static_cast<std::size_t>(p)])
                continue;
            for_each_bit(coords(right_of[static_cast<std::size_t>(p)]), [&](int q) { s.comult[static_cast<std::size_t>(i)].push_back({p, q}); });
        }
    }
    s.counit = basis_element(0);
    s.antipode.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        s.antipode[static_cast<std::size_t>(i)] = coords(a.apply_antipode(values[static_cast<std::size_t>(i)]));
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const Word w{static_cast<int>(g)};
        for (int i = 0; i < m; ++i)
            if (words[static_cast<std::size_t>(i)] == w)
                s.generators.push_back(i);
    }
    if (s.generators.size() != generators.size())
        throw std::invalid_argument("generated_subalgebra: generators are not independent");
    finalize(s);
    auto sub = std::make_shared<const HopfAlgebra>(std::move(s));
    SubHopfInclusion inc{sub, ambient, values};
    auto report = validate_inclusion(inc);
    if (!report.empty())
        throw std::invalid_argument("generated_subalgebra: " + report.front());
    return inc;
}

SubHopfInclusion identity_inclusion(HopfPtr h)
{
    SubHopfInclusion inc{h, h, {}};
    for (int i = 0; i < h->dim(); ++i)
        inc.embedding.push_back(basis_element(i));
    return inc;
}

SubHopfInclusion unit_inclusion(HopfPtr h) { return SubHopfInclusion{trivial_algebra(), h, {basis_element(h->unit())}}; }

std::vector<SubHopfInclusion> quasi_elementary_inclusions(HopfPtr h)
{
    std::vector<SubHopfInclusion> out;
    for (const auto& q : h->quasi_elementary)
        out.push_back(generated_subalgebra(h, q.name, q.generator_names, q.generators));
    return out;
}

} // namespace stabmod::hopf
