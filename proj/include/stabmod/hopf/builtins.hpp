#pragma once

#include "stabmod/hopf/hopf_algebra.hpp"
#include "stabmod/hopf/presentation.hpp"

namespace stabmod::hopf {

/// Exterior algebra on primitive Q0 (degree 1) and Q1 (degree 3).
Presentation presentation_E1();
/// F<Sq1, Sq2> / (Sq1^2, Sq2^2 + Sq1 Sq2 Sq1) with Delta(Sq2) = Sq2 (x) 1 + Sq1 (x) Sq1 + 1 (x) Sq2.
Presentation presentation_A1();

HopfPtr builtin_E1();
HopfPtr builtin_A1();
/// E(1) inside A(1): Q0 = Sq1, Q1 = Sq1 Sq2 + Sq2 Sq1.
const SubHopfInclusion& builtin_E1_in_A1();

/// "A1", "E1" or "F"; nullptr otherwise.
HopfPtr builtin_by_name(const std::string& name);

} // namespace stabmod::hopf
