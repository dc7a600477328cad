#pragma once

#include <string>
#include <vector>

#include "segsyz/chain.hpp"
#include "segsyz/complex.hpp"
#include "segsyz/config.hpp"

namespace segsyz {

// eta = <a^1..a^t> * base inside the box complex of beta. The axis vertices
// are exactly the vertices of eta with a positive coord-th coordinate, and
// together they saturate it: their coord-th coordinates sum to beta[coord].
// base is a cycle avoiding the coordinate, so d(eta) = d<axis> * base already
// lives in the box complex of beta - e_coord.
struct UfoChain {
    ConfigPtr cfg;
    MultiDegree beta;
    int coord = 0;
    std::vector<int> axis;  // strictly increasing point indices
    Chain base;             // cycle; dim -1 means a multiple of <>
    Chain eta;              // join(<axis>, base), nonzero

    int t() const { return (int)axis.size(); }
    int k() const { return eta.dim() + 1; }  // vertices per simplex
};

// Validates every invariant listed on UfoChain; throws std::invalid_argument
// on violation.
UfoChain make_ufo(ConfigPtr cfg, MultiDegree beta, int coord,
                  std::vector<int> axis, const Chain& base);

// A chain rewritten into the box complex of `target` with a prescribed
// boundary. certify_fill re-verifies both properties exactly, so holding one
// of these is proof that boundary(eta_tilde) == boundary_value and that
// eta_tilde fits under target. route records which construction produced it;
// routes ending in "solver" went through the exact linear solver instead of
// the combinatorial construction.
struct FillCertificate {
    Chain eta_tilde;
    Chain boundary_value;
    MultiDegree target;
    std::string route;
};

// throws std::logic_error when the boundary or the support check fails
FillCertificate certify_fill(const ConfigPtr& cfg, Chain eta_tilde,
                             Chain expected_boundary, MultiDegree target,
                             std::string route);

// Rewrites a UFO with t in {p+1, p, 1} axis vertices (and k = p + 1) into the
// box complex of beta + e_l - e_coord, keeping the boundary d(eta).
// Requires beta in N.A with deg beta >= p + 2; the t = 1 case moves the axis
// vertex itself and needs l in the same block as coord.
FillCertificate fill_simple(const UfoChain& u, int l, int p);

// Case base == boundary(<sigma>): then d(eta) is already bounded by
// +-d<axis> * sigma inside the box complex of beta - e_coord itself.
// sigma must be disjoint from the axis and fit under beta - sum(axis).
FillCertificate fill_subc(const UfoChain& u, const Simplex& sigma);

// The one shape fill_simple cannot treat when p = 3: t = 2, k = 4, coord = 1
// (second coordinate of the first block), beta[1] == 2, first block of size
// <= 4, deg beta >= 5. Target is beta + e_0 - e_1.
FillCertificate fill_ufo24(const UfoChain& u);

struct UfoDecomposition {
    std::vector<UfoChain> pieces;  // grouped by axis, sorted by axis
    Chain remainder;               // the part already under beta - e_coord
};

// Splits eta into the UFO pieces spanned by the simplexes saturating
// beta[coord], plus the remainder. Each per-axis base must come out a cycle,
// which holds exactly when d(eta) fits under beta - e_coord; throws
// std::invalid_argument otherwise.
UfoDecomposition decompose_ufos(const ConfigPtr& cfg, const MultiDegree& beta,
                                int coord, const Chain& eta);

// eta a p-chain under beta whose boundary fits under beta - e_1: produces a
// chain with the same boundary under beta + e_0 - e_1. Decomposes at
// coordinate 1 and dispatches each piece to fill_simple or fill_ufo24.
// p in {2, 3}; for p = 3 the first block must have size <= 4; deg beta >= p+2.
FillCertificate push_boundary(const ConfigPtr& cfg, const MultiDegree& beta,
                              const Chain& eta, int p);

// gamma a (p-1)-cycle under b that bounds inside the union complex X_b.
// Slides a filling down the X-slices with push_boundary until it fits under
// b itself. Throws std::runtime_error when gamma does not bound in X_b.
struct RetractResult {
    FillCertificate cert;  // target b, boundary gamma
    int slides = 0;        // slice pushes performed
};
RetractResult step2_retract(const ConfigPtr& cfg, const MultiDegree& b,
                            const Chain& gamma, int p);

// Eliminates the first coordinate from a (p-1)-cycle gamma in X_b: returns
// gamma' with no vertex touching coordinate 0 and a witness W inside X_b with
// boundary(W) == gamma - gamma'. gamma' then fits under (0, b_0+b_1, b_2,...).
struct PushResult {
    Chain gamma_prime;
    Chain witness;
    std::vector<std::string> routes;  // one entry per eliminated vertex
};
PushResult step1_push(const ConfigPtr& cfg, const MultiDegree& b,
                      const Chain& gamma, int p);

}  // namespace segsyz
