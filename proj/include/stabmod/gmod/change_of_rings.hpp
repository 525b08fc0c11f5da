#pragma once

#include "stabmod/gmod/module.hpp"
#include "stabmod/hopf/hopf_algebra.hpp"

namespace stabmod::gmod {

/// Restriction along a sub-Hopf-algebra inclusion; same underlying graded space.
AModule restrict(const hopf::SubHopfInclusion& inc, const AModule& m);

/// A (x)_B m: quotient of A (x) m by (a b) (x) x + a (x) (b x).
AModule induce(const hopf::SubHopfInclusion& inc, const AModule& m);

/// hom_B(A, m): B-linear maps f with (a . f)(a') = f(a' a). A degree-d element sends A_k into m_{k+d}.
AModule coinduce(const hopf::SubHopfInclusion& inc, const AModule& m);

} // namespace stabmod::gmod
