#include "stabmod/descent/descent.hpp"

#include <stdexcept>

namespace stabmod::descent {

namespace {

BitMatrix eye_power(std::size_t d, int k)
{
    std::size_t n = 1;
    for (int i = 0; i < k; ++i)
        n *= d;
    return BitMatrix::identity(n);
}

/// I_{d^left} (x) m (x) I_{d^right}
BitMatrix sandwich(std::size_t d, int left, const BitMatrix& m, int right)
{
    return eye_power(d, left).kron(m).kron(eye_power(d, right));
}

} // namespace

std::string to_string(const Tridegree& d)
{
    return "(n=" + std::to_string(d.n) + ", s=" + std::to_string(d.s) + ", t=" + std::to_string(d.t) + ")";
}

bool PageWindow::contains(const Tridegree& d) const
{
    return d.n >= n_min && d.n <= n_max && d.s >= s_min && d.s <= s_max && d.t >= t_min && d.t <= t_max;
}

AmitsurComplex amitsur(hopf::HopfPtr a, const gmod::AlgebraObject& t, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("amitsur: n_max must be >= 0");
    if (t.module.alg->name != a->name)
        throw std::invalid_argument("amitsur: algebra object over a different algebra");
    if (auto errs = gmod::validate_algebra_object(t); !errs.empty())
        throw std::invalid_argument("amitsur: invalid algebra object: " + errs.front());
    AmitsurComplex c;
    c.ambient = a;
    c.t = t;
    c.n_max = n_max;
    const std::size_t d = static_cast<std::size_t>(t.dim());
    auto layer = gmod::share(t.module);
    c.layers.push_back(layer);
    for (int n = 1; n <= n_max; ++n)
        c.layers.push_back(gmod::share(gmod::tensor(*c.layers.back(), t.module)));
    const auto unit = BitMatrix::from_columns({t.unit}, d);
    c.cofaces.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            c.cofaces[static_cast<std::size_t>(n)].push_back(sandwich(d, i, unit, n - i));
    c.codegeneracies.resize(static_cast<std::size_t>(n_max));
    for (int n = 0; n + 1 <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            c.codegeneracies[static_cast<std::size_t>(n)].push_back(sandwich(d, i, t.mult, n - i));
    if (auto errs = check_cosimplicial(c); !errs.empty())
        throw std::invalid_argument("amitsur: " + errs.front());
    return c;
}

std::vector<std::string> check_cosimplicial(const AmitsurComplex& c)
{
    std::vector<std::string> out;
    auto name = [](const char* kind, int n, int i) { return std::string(kind) + std::to_string(i) + " at level " + std::to_string(n); };
    // Module maps.
    for (int n = 1; n <= c.n_max; ++n)
        for (int i = 0; i <= n; ++i)
            for (const auto& e : gmod::validate_map({c.layers[static_cast<std::size_t>(n - 1)], c.layers[static_cast<std::size_t>(n)], 0,
                                                     c.cofaces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]}))
                out.push_back(name("coface d", n, i) + ": " + e);
    for (int n = 0; n + 1 <= c.n_max; ++n)
        for (int i = 0; i <= n; ++i)
            for (const auto& e : gmod::validate_map({c.layers[static_cast<std::size_t>(n + 1)], c.layers[static_cast<std::size_t>(n)], 0,
                                                     c.codegeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]}))
                out.push_back(name("codegeneracy s", n, i) + ": " + e);
    auto d = [&](int n, int i) -> const BitMatrix& { return c.cofaces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; };
    auto s = [&](int n, int i) -> const BitMatrix& { return c.codegeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; };
    // d^j d^i = d^i d^{j-1} for i < j (layer n-2 -> n).
    for (int n = 2; n <= c.n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (d(n, j) * d(n - 1, i) != d(n, i) * d(n - 1, j - 1))
                    out.push_back("d" + std::to_string(j) + " d" + std::to_string(i) + " identity fails at level " + std::to_string(n));
    // s^j s^i = s^i s^{j+1} for i <= j (layer n+2 -> n).
    for (int n = 0; n + 2 <= c.n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (s(n, j) * s(n + 1, i) != s(n, i) * s(n + 1, j + 1))
                    out.push_back("s" + std::to_string(j) + " s" + std::to_string(i) + " identity fails at level " + std::to_string(n));
    // s^j d^i : layer n -> layer n+1 -> layer n.
    for (int n = 0; n + 1 <= c.n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const auto lhs = s(n, j) * d(n + 1, i);
                BitMatrix rhs;
                if (i == j || i == j + 1)
                    rhs = BitMatrix::identity(lhs.rows());
                else if (i < j)
                    rhs = d(n, i) * s(n - 1, j - 1);
                else
                    rhs = d(n, i - 1) * s(n - 1, j);
                if (lhs != rhs)
                    out.push_back("s" + std::to_string(j) + " d" + std::to_string(i) + " identity fails at level " + std::to_string(n));
            }
    return out;
}

} // namespace stabmod::descent
