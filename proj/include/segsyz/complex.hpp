#pragma once

#include <vector>

#include "segsyz/chain.hpp"
#include "segsyz/config.hpp"

namespace segsyz {

// The three simplicial complexes the tool works with. All are downward
// closed, so depth-first enumeration may prune at the first failing subset.
//
//   MonoidDelta(b): F is a face iff sum(F) <= b coordinatewise and
//                   b - sum(F) lies in N.A  (requires b in N.A)
//   BoxDelta(v):    F is a face iff sum(F) <= v coordinatewise
//   UnionX(b):      union over 0 <= k <= b_1 of BoxDelta(b - k e_1 + k e_2);
//                   closed form: s_1 <= b_1, s_1 + s_2 <= b_1 + b_2,
//                   s_i <= b_i for i >= 3
enum class ComplexKind { MonoidDelta, BoxDelta, UnionX };

struct ComplexSpec {
    ConfigPtr cfg;
    ComplexKind kind;
    MultiDegree bound;
};

ComplexSpec monoid_delta(ConfigPtr cfg, MultiDegree b);
ComplexSpec box_delta(ConfigPtr cfg, MultiDegree v);
ComplexSpec union_x(ConfigPtr cfg, MultiDegree b);

bool is_face(const ComplexSpec& spec, const Simplex& f);

// faces enumerated by dimension, -1 through the cap D
struct SlicedComplex {
    ComplexSpec spec;
    int cap;
    // faces_by_dim[d+1] lists the dimension-d faces, each sorted;
    // lexicographic order within a dimension
    std::vector<std::vector<Simplex>> faces_by_dim;

    const std::vector<Simplex>& faces(int d) const;
    long total_faces() const;
};

// Enumerates all faces of dimension <= D. D is mandatory: these complexes
// can be huge and every caller knows how deep it needs to look.
SlicedComplex enumerate_faces(const ComplexSpec& spec, int D);

// true when every simplex of the chain is a face
bool supported_on(const ComplexSpec& spec, const Chain& c);

}  // namespace segsyz
