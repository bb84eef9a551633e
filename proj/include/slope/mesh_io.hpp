#pragma once

#include <iosfwd>

#include "slope/surfaces.hpp"

namespace slope {

// ASCII OBJ: nu*nv "v x1 x2 x3" records in row-major (u outer) order and
// (nu-1)(nv-1) quad faces with 1-based indices. Minkowski coordinates are
// written verbatim; viewers render the Euclidean shadow of the surface.
void write_obj(std::ostream& out, const SurfaceSampleGrid& grid);

// CSV with header u,v,x1,x2,x3, one row per sample in the same order, all
// values at full binary64 round-trip precision (17 significant digits).
void write_csv(std::ostream& out, const SurfaceSampleGrid& grid);

}  // namespace slope
