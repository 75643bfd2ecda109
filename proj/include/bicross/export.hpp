#pragma once

#include "bicross/mha.hpp"

namespace bicross {

/// Structure-constant serialization of a finite structure: basis labels and
/// the images of basis words under mult, T1, T2, S and the counit, with
/// exact coefficients. Deterministic line order, byte-identical across
/// runs.
std::string export_structure_constants(const Mha& m);

}  // namespace bicross
