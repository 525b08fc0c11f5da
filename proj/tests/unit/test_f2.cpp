#include "doctest.h"

#include "stabmod/f2/bit_matrix.hpp"

#include <random>

using namespace stabmod::f2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rng() & 1);
    return m;
}

// Brute-force kernel dimension by enumerating every vector.
std::size_t brute_nullity(const BitMatrix& m)
{
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x) {
        BitVector v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.set(j, (x >> j) & 1);
        if ((m * v).is_zero())
            ++count;
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < count)
        ++k;
    return k;
}

} // namespace

TEST_CASE("f2: identity and products")
{
    auto m = BitMatrix::from_strings({"110", "011"});
    CHECK(m * BitMatrix::identity(3) == m);
    CHECK(BitMatrix::identity(2) * m == m);
    CHECK(m.transpose().transpose() == m);
    CHECK(rank(m) == 2);
    CHECK(kernel_basis(m).rows() == 1);
}

TEST_CASE("f2: rank-nullity against brute force, 300 seeded cases")
{
    std::mt19937_64 rng(20261016);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 10;
        auto m = random_matrix(rng, r, c);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.rows() == c);
        CHECK(brute_nullity(m) == k.rows());
        for (std::size_t i = 0; i < k.rows(); ++i)
            CHECK((m * k.row(i)).is_zero());
    }
}

TEST_CASE("f2: solve and LinearSolver agree on consistency, 300 seeded cases")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        auto m = random_matrix(rng, r, c);
        BitVector b(r);
        if (t % 2 == 0) {
            BitVector x(c);
            for (std::size_t j = 0; j < c; ++j)
                x.set(j, rng() & 1);
            b = m * x;
        } else {
            for (std::size_t i = 0; i < r; ++i)
                b.set(i, rng() & 1);
        }
        auto x1 = solve(m, b);
        LinearSolver ls(m);
        auto x2 = ls.solve(b);
        CHECK(x1.has_value() == x2.has_value());
        if (t % 2 == 0)
            CHECK(x1.has_value());
        if (x1)
            CHECK(m * *x1 == b);
        if (x2)
            CHECK(m * *x2 == b);
    }
}

TEST_CASE("f2: inverse of random invertible matrices")
{
    std::mt19937_64 rng(11);
    int found = 0;
    for (int t = 0; t < 300; ++t) {
        auto m = random_matrix(rng, 6, 6);
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == 6));
        if (inv) {
            ++found;
            CHECK(m * *inv == BitMatrix::identity(6));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("f2: echelon basis membership")
{
    EchelonBasis e(4);
    CHECK(e.insert(BitVector::unit(4, 0) ^ BitVector::unit(4, 1)));
    CHECK(e.insert(BitVector::unit(4, 1)));
    CHECK(e.contains(BitVector::unit(4, 0)));
    CHECK_FALSE(e.contains(BitVector::unit(4, 2)));
    CHECK_FALSE(e.insert(BitVector::unit(4, 0)));
}

TEST_CASE("f2: kron and block diagonal")
{
    auto a = BitMatrix::from_strings({"01", "10"});
    auto i2 = BitMatrix::identity(2);
    auto k = a.kron(i2);
    CHECK(k.rows() == 4);
    CHECK(k.get(0, 2));
    CHECK(k.get(3, 1));
    auto bd = BitMatrix::block_diagonal({a, i2});
    CHECK(bd.get(0, 1));
    CHECK(bd.get(3, 3));
    CHECK_FALSE(bd.get(0, 3));
}
