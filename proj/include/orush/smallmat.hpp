#pragma once

// Dense exact linear algebra on the small matrices this project needs:
// integer row echelon with unimodular transform (for lattice kernels) and
// rational kernels (for the branch-map injectivity evidence).

#include <vector>

#include "orush/numeric.hpp"

namespace orush {

using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

// Basis of { z : z * M = 0 } as rows, via integer row reduction U*M = H.
ZMat kernel_int(const ZMat& m);

// Basis of { z : z * M = 0 } over the rationals.
QMat kernel_rat(const QMat& m);

}  // namespace orush
