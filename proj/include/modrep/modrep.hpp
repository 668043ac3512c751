#pragma once

// Exact-arithmetic toolkit for finite-dimensional representations of the
// projective modular group PSL(2,Z) = Z_3 * Z_2: explicit module families,
// dimension formulas for the varieties of simples, extension/codimension
// computations, counting of maximally iterated extensions, upper triangular
// involution spaces and the related generating-function identities.

#include "modrep/cyclotomic.hpp"
#include "modrep/dimvec.hpp"
#include "modrep/ext_deform.hpp"
#include "modrep/matrix.hpp"
#include "modrep/mie.hpp"
#include "modrep/rational.hpp"
#include "modrep/rep_families.hpp"
#include "modrep/series.hpp"

namespace modrep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace modrep
