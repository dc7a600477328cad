#pragma once

#include <string>
#include <vector>

#include "segsyz/cache.hpp"
#include "segsyz/homology.hpp"

namespace segsyz {

struct BettiEntry {
    int j;          // homological slot: entry counts generators of E_{j+1}
    MultiDegree b;  // multidegree
    Int t;          // total degree of b
    long rank;      // dim_C H~_j(Delta_b)
};

struct BettiTable {
    std::string config;
    std::vector<BettiEntry> entries;  // nonzero ranks only, sorted by (j, b)
    long total = 0;
};

struct NpRow {
    int p;  // homological degree checked (syzygy stage)
    int q;  // twist: multidegrees of total degree p + q
    bool verified;
    std::vector<MultiDegree> witnesses;  // nonvanishing multidegrees
};

// Verification of property N_p through total degree D ("verified-through-D"):
// all rows (p', q) with 1 <= p' <= p, 2 <= q, p' + q <= D must vanish.
struct NpReport {
    std::string config;
    int p = 0;
    int degree_bound = 0;
    bool verified = false;
    bool capped = false;
    std::vector<NpRow> rows;
};

struct SyzygyOptions {
    RankOptions rank;
    int jobs = 0;            // 0 = hardware concurrency
    RankCache* cache = nullptr;
};

// dim_C H~_j(Delta_b) = number of minimal generators of E_{j+1} in
// multidegree b. Requires b in N.A.
long cps_rank(const ConfigPtr& cfg, const MultiDegree& b, int j,
              const SyzygyOptions& opts = {});

// all nonzero entries for slot j at total degree t
BettiTable graded_betti(const ConfigPtr& cfg, int j, Int t,
                        const SyzygyOptions& opts = {});

NpReport check_np(const ConfigPtr& cfg, int p, int D, bool use_cap,
                  const SyzygyOptions& opts = {});

struct WitnessEntry {
    MultiDegree b;
    Int t;
    long rank;    // dim_C H~_{p-1}(Delta_b)
    Chain cycle;  // explicit (p-1)-cycle with no filling inside Delta_b
};

struct WitnessReport {
    std::string config;
    int p = 0;
    std::vector<Int> degrees;
    std::vector<WitnessEntry> entries;  // empty = no obstruction at these degrees
};

// N_p obstructions at the given total degrees, each certified by an explicit
// non-bounding cycle (fill() over Delta_b comes back empty, an exact check).
WitnessReport find_witness(const ConfigPtr& cfg, int p,
                           const std::vector<Int>& degrees,
                           const SyzygyOptions& opts = {});

}  // namespace segsyz
