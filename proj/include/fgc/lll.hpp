#pragma once

#include "fgc/intmat.hpp"

namespace fgc::exact {

// LLL-reduced basis of the lattice spanned by the rows (rows must be
// Q-linearly independent); exact rational Gram-Schmidt, default delta 3/4
IntMat lll_reduce(const IntMat& basis, const Rat& delta = Rat(3, 4));

// verify size reduction and the Lovasz condition
bool lll_check(const IntMat& basis, const Rat& delta = Rat(3, 4));

} // namespace fgc::exact
