#pragma once

#include <optional>

#include "segsyz/complex.hpp"
#include "segsyz/matrix.hpp"

namespace segsyz {

struct HomologyReport {
    int j = 0;
    long f_below = 0;  // count of (j-1)-faces
    long f_j = 0;
    long f_above = 0;  // count of (j+1)-faces
    int rank_dj = 0;
    int rank_djp1 = 0;
    long betti = 0;
    RankStats stats_dj, stats_djp1;
};

// matrix of d_j : C_j -> C_{j-1}; rows = (j-1)-faces, cols = j-faces,
// reduced convention: d_0 maps every vertex to the augmentation simplex
SparseMatrix boundary_matrix(const SlicedComplex& cx, int j);

// dim_C H~_j of the complex, via betti = f_j - rank d_j - rank d_{j+1}.
// Enumerates faces up to j+1; j >= 0.
HomologyReport betti_reduced(const ComplexSpec& spec, int j,
                             const RankOptions& opts = {});

// Exact solve d x = gamma inside the complex, enumerated up to dimension
// cap D (callers pass D >= dim gamma + 1). Returns a chain with boundary
// exactly gamma, or nullopt when gamma is not a boundary (certified by the
// exact elimination). gamma must be a cycle supported on the complex.
// forbidden_vertices restricts the solution away from faces containing them.
std::optional<Chain> fill(const Chain& gamma, const ComplexSpec& spec, int D,
                          const std::vector<int>& forbidden_vertices = {});

}  // namespace segsyz
