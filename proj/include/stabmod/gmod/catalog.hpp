#pragma once

#include "stabmod/gmod/module.hpp"

namespace stabmod::gmod {

/// The joker over A(1): one class in each degree offset-2 .. offset+2.
AModule joker(int offset = 0);

/// Six-dimensional E(1)-module with classes m0, m2, m3, m4, m5, m7.
AModule module_M();
/// Four-dimensional E(1)-module with classes n-1, n0, n1, n2.
AModule module_N();

} // namespace stabmod::gmod
