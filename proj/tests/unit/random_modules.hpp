#pragma once

#include "stabmod/gmod/module.hpp"

#include <random>

namespace test_support {

using namespace stabmod;

/// Random homogeneous vector of the given module in a random occupied degree.
inline f2::BitVector random_homogeneous(std::mt19937_64& rng, const gmod::AModule& m)
{
    f2::BitVector v(static_cast<std::size_t>(m.dim()));
    if (m.dim() == 0)
        return v;
    const int d = m.degrees[rng() % m.degrees.size()];
    for (auto i : m.indices_in_degree(d))
        if (rng() & 1)
            v.set(i, true);
    return v;
}

/// Random module of dimension in [1, max_dim]: a quotient of a small free module by a random
/// invariant subspace, optionally cut down to the submodule generated by random vectors.
inline gmod::AModule random_module(std::mt19937_64& rng, hopf::HopfPtr alg, int max_dim)
{
    for (;;) {
        const int rank = 1 + static_cast<int>(rng() % 2);
        std::vector<int> degs;
        for (int i = 0; i < rank; ++i)
            degs.push_back(static_cast<int>(rng() % 5) - 2);
        auto free = gmod::share(gmod::free_module(alg, degs));
        std::vector<f2::BitVector> rel;
        const int k = static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i)
            rel.push_back(random_homogeneous(rng, *free));
        auto q = gmod::quotient(free, gmod::invariant_closure(*free, rel)).first;
        if (q.dim() == 0)
            continue;
        if (rng() % 3 == 0) {
            auto qp = gmod::share(q);
            std::vector<f2::BitVector> gens{random_homogeneous(rng, q)};
            auto span = gmod::invariant_closure(q, gens);
            if (span.rows() == 0)
                continue;
            q = gmod::submodule(qp, span).first;
        }
        if (q.dim() >= 1 && q.dim() <= max_dim)
            return q;
    }
}

} // namespace test_support
