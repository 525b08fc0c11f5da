#include "stabmod/hopf/presentation.hpp"

#include "stabmod/f2/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace stabmod::hopf {

namespace {

int word_degree(const std::vector<GeneratorSpec>& gens, const Word& w)
{
    int d = 0;
    for (int g : w)
        d += gens[static_cast<std::size_t>(g)].degree;
    return d;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

/// Degree-d part of the free algebra modulo the ideal.
struct DegreePiece
{
    std::vector<Word> words;            // all free words, columns in descending order
    std::map<Word, std::size_t> column; // word -> column
    f2::BitMatrix ideal;                // rref rows spanning I_d
    std::vector<std::size_t> pivots;
    std::vector<long> pivot_row;        // column -> row or -1
};

class Builder
{
public:
    explicit Builder(const Presentation& p) : p_(p) {}

    HopfAlgebra build();

private:
    const Presentation& p_;
    std::vector<DegreePiece> pieces_;
    std::vector<Word> basis_;
    std::map<Word, int> basis_index_;

    void build_degree(int d);
    /// Normal form of a free word as a set of basis indices.
    Element normal_form(const Word& w) const;
    Element normal_form(const Polynomial& p) const
    {
        Element e = 0;
        for (const auto& w : p)
            e ^= normal_form(w);
        return e;
    }
};

void Builder::build_degree(int d)
{
    DegreePiece piece;
    if (d == 0) {
        piece.words.push_back({});
    } else {
        for (std::size_t g = 0; g < p_.generators.size(); ++g) {
            const int gd = p_.generators[g].degree;
            if (gd > d)
                continue;
            for (const auto& u : pieces_[static_cast<std::size_t>(d - gd)].words) {
                Word w = u;
                w.push_back(static_cast<int>(g));
                piece.words.push_back(std::move(w));
            }
        }
    }
    std::sort(piece.words.begin(), piece.words.end(), std::greater<>());
    for (std::size_t i = 0; i < piece.words.size(); ++i)
        piece.column[piece.words[i]] = i;
    const std::size_t n = piece.words.size();

    std::vector<f2::BitVector> rows;
    for (std::size_t g = 0; g < p_.generators.size(); ++g) {
        const int gd = p_.generators[g].degree;
        if (gd > d || d == 0)
            continue;
        const auto& lower = pieces_[static_cast<std::size_t>(d - gd)];
        for (std::size_t r = 0; r < lower.ideal.rows(); ++r) {
            f2::BitVector v(n);
            for (auto c : lower.ideal.row(r).support()) {
                Word w{static_cast<int>(g)};
                w.insert(w.end(), lower.words[c].begin(), lower.words[c].end());
                v.flip(piece.column.at(w));
            }
            rows.push_back(std::move(v));
        }
    }
    for (const auto& rel : p_.relations) {
        if (rel.poly.empty())
            continue;
        const int rd = word_degree(p_.generators, rel.poly.front());
        if (rd > d)
            continue;
        for (const auto& v : pieces_[static_cast<std::size_t>(d - rd)].words) {
            f2::BitVector row(n);
            for (const auto& term : rel.poly) {
                Word w = term;
                w.insert(w.end(), v.begin(), v.end());
                row.flip(piece.column.at(w));
            }
            rows.push_back(std::move(row));
        }
    }
    auto r = f2::rref(f2::BitMatrix::from_rows(rows, n));
    std::vector<std::size_t> keep(r.pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        keep[i] = i;
    piece.ideal = r.reduced.select_rows(keep);
    piece.pivots = r.pivots;
    piece.pivot_row.assign(n, -1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        piece.pivot_row[r.pivots[i]] = static_cast<long>(i);
    // Standard words of this degree, ascending.
    for (std::size_t c = n; c-- > 0;)
        if (piece.pivot_row[c] < 0) {
            if (basis_.size() >= static_cast<std::size_t>(kMaxDim))
                throw PresentationError("presentation '" + p_.name + "' has dimension above 64");
            basis_index_[piece.words[c]] = static_cast<int>(basis_.size());
            basis_.push_back(piece.words[c]);
        }
    pieces_.push_back(std::move(piece));
}

Element Builder::normal_form(const Word& w) const
{
    const int d = word_degree(p_.generators, w);
    if (d >= static_cast<int>(pieces_.size()))
        return 0; // beyond saturation every word vanishes
    const auto& piece = pieces_[static_cast<std::size_t>(d)];
    const std::size_t c = piece.column.at(w);
    if (piece.pivot_row[c] < 0)
        return basis_element(basis_index_.at(w));
    Element e = 0;
    for (auto k : piece.ideal.row(static_cast<std::size_t>(piece.pivot_row[c])).support())
        if (k != c)
            e ^= basis_element(basis_index_.at(piece.words[k]));
    return e;
}

HopfAlgebra Builder::build()
{
    if (p_.generators.empty())
        throw PresentationError("presentation '" + p_.name + "' has no generators");
    int max_gen = 0;
    for (const auto& g : p_.generators) {
        if (g.degree <= 0)
            throw PresentationError("generator '" + g.name + "' must have positive degree");
        max_gen = std::max(max_gen, g.degree);
    }
    for (const auto& rel : p_.relations) {
        for (const auto& w : rel.poly) {
            for (int g : w)
                if (g < 0 || g >= static_cast<int>(p_.generators.size()))
                    throw PresentationError("relation '" + rel.name + "' uses an unknown generator");
            if (w.empty() || word_degree(p_.generators, w) != word_degree(p_.generators, rel.poly.front()))
                throw PresentationError("relation '" + rel.name + "' is not homogeneous of positive degree");
        }
    }
    int zero_run = 0;
    for (int d = 0;; ++d) {
        if (d > p_.degree_bound)
            throw PresentationError("presentation not finite within bound");
        const std::size_t before = basis_.size();
        build_degree(d);
        zero_run = basis_.size() == before ? zero_run + 1 : 0;
        if (zero_run >= max_gen)
            break;
    }
    // Trailing zero degrees are dropped so that normal_form treats them as vanishing.
    while (!pieces_.empty() && pieces_.back().ideal.rows() == pieces_.back().words.size())
        pieces_.pop_back();

    const int n = static_cast<int>(basis_.size());
    HopfAlgebra h;
    h.name = p_.name;
    for (const auto& w : basis_) {
        std::string nm;
        for (int g : w)
            nm += (nm.empty() ? "" : " ") + p_.generators[static_cast<std::size_t>(g)].name;
        h.basis_names.push_back(nm.empty() ? "1" : nm);
        h.degrees.push_back(word_degree(p_.generators, w));
    }
    h.mult.assign(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Word w = basis_[static_cast<std::size_t>(i)];
            w.insert(w.end(), basis_[static_cast<std::size_t>(j)].begin(), basis_[static_cast<std::size_t>(j)].end());
            h.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = normal_form(w);
        }
    for (std::size_t g = 0; g < p_.generators.size(); ++g) {
        const Word w{static_cast<int>(g)};
        auto it = basis_index_.find(w);
        if (it == basis_index_.end())
            throw PresentationError("generator '" + p_.generators[g].name + "' is not a basis element of the quotient");
        h.generators.push_back(it->second);
    }
    for (const auto& rel : p_.relations)
        h.relations.push_back(rel);

    // Coproducts of generators as rows: left index -> right element.
    using Tensor2 = std::vector<Element>;
    std::vector<Tensor2> gen_coproduct;
    for (std::size_t g = 0; g < p_.generators.size(); ++g) {
        Tensor2 t(static_cast<std::size_t>(n), 0);
        const int gi = h.generators[g];
        auto it = p_.coproducts.find(static_cast<int>(g));
        if (it == p_.coproducts.end()) {
            t[static_cast<std::size_t>(gi)] ^= basis_element(0);
            t[0] ^= basis_element(gi);
        } else {
            for (const auto& [l, r] : it->second.terms) {
                if (word_degree(p_.generators, l) + word_degree(p_.generators, r) != p_.generators[g].degree)
                    throw PresentationError("coproduct of '" + p_.generators[g].name + "' is not homogeneous");
                const Element le = normal_form(l), re = normal_form(r);
                for (int k = 0; k < n; ++k)
                    if (le & basis_element(k))
                        t[static_cast<std::size_t>(k)] ^= re;
            }
        }
        gen_coproduct.push_back(std::move(t));
    }
    auto tensor_multiply = [&](const Tensor2& x, const Tensor2& y) {
        Tensor2 out(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            if (!x[static_cast<std::size_t>(i)])
                continue;
            for (int j = 0; j < n; ++j) {
                if (!y[static_cast<std::size_t>(j)])
                    continue;
                const Element right = h.multiply(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
                const Element left = h.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int k = 0; k < n; ++k)
                    if (left & basis_element(k))
                        out[static_cast<std::size_t>(k)] ^= right;
            }
        }
        return out;
    };
    h.comult.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Tensor2 t(static_cast<std::size_t>(n), 0);
        t[0] = basis_element(0);
        for (int g : basis_[static_cast<std::size_t>(i)])
            t = tensor_multiply(t, gen_coproduct[static_cast<std::size_t>(g)]);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t[static_cast<std::size_t>(j)] & basis_element(k))
                    h.comult[static_cast<std::size_t>(i)].push_back({j, k});
    }
    h.counit = basis_element(0);
    // S(x) = sum over Delta(x) terms other than x (x) 1 of S(x') x''; basis is degree-sorted.
    h.antipode.assign(static_cast<std::size_t>(n), 0);
    h.antipode[0] = basis_element(0);
    for (int i = 1; i < n; ++i) {
        Element s = 0;
        for (auto [j, k] : h.comult[static_cast<std::size_t>(i)]) {
            if (j == i && k == 0)
                continue;
            if (j == i)
                throw PresentationError("coproduct of '" + h.basis_names[static_cast<std::size_t>(i)] + "' is not connected");
            s ^= h.multiply(h.antipode[static_cast<std::size_t>(j)], basis_element(k));
        }
        h.antipode[static_cast<std::size_t>(i)] = s;
    }
    auto report = validate_hopf(h);
    if (!report.empty())
        throw PresentationError("presentation '" + p_.name + "' does not define a Hopf algebra: " + report.front());
    finalize(h);
    return h;
}

} // namespace

HopfAlgebra from_presentation(const Presentation& p) { return Builder(p).build(); }

Word parse_word(const std::vector<GeneratorSpec>& gens, const std::string& text)
{
    std::string s = text;
    std::replace(s.begin(), s.end(), '*', ' ');
    std::istringstream in(s);
    Word w;
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        auto it = std::find_if(gens.begin(), gens.end(), [&](const GeneratorSpec& g) { return g.name == tok; });
        if (it == gens.end())
            throw PresentationError("unknown generator '" + tok + "'");
        w.push_back(static_cast<int>(it - gens.begin()));
    }
    return w;
}

Polynomial parse_polynomial(const std::vector<GeneratorSpec>& gens, const std::string& text)
{
    Polynomial p;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto plus = text.find('+', start);
        const std::string term = trim(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (term.empty())
            throw PresentationError("empty term in '" + text + "'");
        if (term != "0")
            p.push_back(parse_word(gens, term));
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return p;
}

} // namespace stabmod::hopf
