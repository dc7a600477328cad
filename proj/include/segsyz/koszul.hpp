#pragma once

#include <string>
#include <vector>

#include "segsyz/config.hpp"
#include "segsyz/matrix.hpp"

namespace segsyz {

// One slice of the Koszul-type complex used to cross-validate syzygy counts:
//
//   Wedge^{p+1}(W) (x) Sym^{q-1}V_1 (x)...(x) Sym^{q-1}V_d
//     -> Wedge^p(W) (x) Sym^q V_1 (x)...(x) Sym^q V_d
//     -> Wedge^{p-1}(W) (x) Sym^{q+1}V_1 (x)...(x) Sym^{q+1}V_d
//
// where W = V_1 (x)...(x) V_d has the configuration points as its monomial
// basis. The differential drops one wedge factor with an alternating sign by
// position and multiplies it into the symmetric parts; it preserves the
// multidegree, so ranks are assembled blockwise per multidegree.
// tor_dim = dim(middle) - rank(in) - rank(out) counts minimal generators of
// the p-th syzygy module in total degree p + q.
struct KoszulSlice {
    int p = 0;
    int q = 0;
    long dim_in = 0;
    long dim_mid = 0;
    long dim_out = 0;
    long rank_in = 0;
    long rank_out = 0;
    long tor_dim = 0;
    long blocks = 0;  // number of multidegrees assembled
};

struct KoszulOptions {
    RankOptions rank;
    int jobs = 0;
    long max_term_dim = 5'000'000;  // resource guard on the largest term
};

// dim of Sym^q V_1 (x)...(x) Sym^q V_d = prod C(n_i + q, n_i)
long h0_dim(const SegreParams& params, int q);

// cfg must be a Segre configuration; p >= 1, q >= 0
KoszulSlice koszul_tor_dim(const ConfigPtr& cfg, int p, int q,
                           const KoszulOptions& opts = {});

struct CrossCheck {
    long koszul = 0;
    long cps = 0;
    bool match = false;
};

// compares the Koszul count with the sum of CPS ranks over multidegrees of
// total degree p + q at homology slot p - 1
CrossCheck cross_check(const ConfigPtr& cfg, int p, int q,
                       const KoszulOptions& opts = {});

}  // namespace segsyz
