#pragma once

// Shared test utilities: deterministic random generators for chains, UFO
// instances and cycles, plus brute-force oracles the library is checked
// against. Everything is seeded explicitly so failures reproduce.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "segsyz/chain.hpp"
#include "segsyz/complex.hpp"
#include "segsyz/config.hpp"
#include "segsyz/homology.hpp"
#include "segsyz/ufo.hpp"

namespace testutil {

using namespace segsyz;
using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rat pick_sign(Rng& rng) { return pick(rng, 0, 1) ? Rat(1) : Rat(-1); }

template <class T>
const T& pick_one(Rng& rng, const std::vector<T>& v) {
    return v[pick(rng, 0, (int)v.size() - 1)];
}

inline MultiDegree simplex_sum(const PointConfiguration& cfg, const Simplex& s) {
    MultiDegree v(cfg.k(), 0);
    for (int p : s)
        for (int i = 0; i < cfg.k(); ++i) v[i] += cfg.points[p][i];
    return v;
}

inline MultiDegree chain_max_support(const PointConfiguration& cfg,
                                     const Chain& ch) {
    MultiDegree mx(cfg.k(), 0);
    for (const auto& [s, c] : ch.terms()) {
        MultiDegree v = simplex_sum(cfg, s);
        for (int i = 0; i < cfg.k(); ++i) mx[i] = std::max(mx[i], v[i]);
    }
    return mx;
}

inline Int max_block_sum(const PointConfiguration& cfg, const MultiDegree& v) {
    Int best = 0;
    int off = 0;
    for (int bl : cfg.blocks) {
        Int s = 0;
        for (int i = 0; i < bl; ++i) s += v[off + i];
        best = std::max(best, s);
        off += bl;
    }
    return best;
}

// raises coordinates other than avoid_coord until every block sums to deg
inline MultiDegree pad_to_degree(Rng& rng, const PointConfiguration& cfg,
                                 MultiDegree base, int avoid_coord, Int deg) {
    int off = 0;
    for (int bl : cfg.blocks) {
        Int sum = 0;
        for (int i = 0; i < bl; ++i) sum += base[off + i];
        while (sum < deg) {
            int c = off + pick(rng, 0, bl - 1);
            if (c == avoid_coord) continue;
            base[c] += 1;
            ++sum;
        }
        off += bl;
    }
    return base;
}

// random element of N.A with total degree t (Segre only)
inline MultiDegree random_segre_degree(Rng& rng, const PointConfiguration& cfg,
                                       Int t) {
    MultiDegree b(cfg.k(), 0);
    int off = 0;
    for (int bl : cfg.blocks) {
        for (Int i = 0; i < t; ++i) b[off + pick(rng, 0, bl - 1)] += 1;
        off += bl;
    }
    return b;
}

inline std::vector<int> points_with(const PointConfiguration& cfg, int coord,
                                    bool positive) {
    std::vector<int> out;
    for (int i = 0; i < cfg.m(); ++i)
        if ((cfg.points[i][coord] > 0) == positive) out.push_back(i);
    return out;
}

inline Simplex sample_distinct(Rng& rng, std::vector<int> pool, int n) {
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    std::sort(pool.begin(), pool.end());
    return pool;
}

// random d-cycle over the pool; d = -1 gives a multiple of the augmentation
// simplex, d >= 0 a sum of simplex boundaries. May return zero (caller
// retries with fresh randomness).
inline Chain random_cycle(Rng& rng, const std::vector<int>& pool, int d,
                          int nterms) {
    if (d == -1) return Chain::simplex({}, pick_sign(rng));
    Chain out;
    if ((int)pool.size() < d + 2) return out;
    for (int i = 0; i < nterms + 4 && (i < nterms || out.zero()); ++i)
        out += boundary(Chain::simplex(sample_distinct(rng, pool, d + 2),
                                       pick_sign(rng)));
    return out;
}

struct UfoInstance {
    UfoChain u;
    int p;
    int l;  // target coordinate accepted by fill_simple
};

// Valid random input for fill_simple with t = tcase in {p+1, p, 1}.
// extra_deg pushes deg(beta) past the p+2 minimum.
inline std::optional<UfoInstance> try_random_ufo(Rng& rng, const ConfigPtr& cfg,
                                                 int p, int tcase,
                                                 Int extra_deg) {
    const auto& C = *cfg;
    int coord = pick(rng, 0, C.k() - 1);
    auto axis_pool = points_with(C, coord, true);
    if ((int)axis_pool.size() < tcase) return std::nullopt;
    Simplex axis = sample_distinct(rng, axis_pool, tcase);
    Chain base = random_cycle(rng, points_with(C, coord, false), p - tcase,
                              pick(rng, 1, 2));
    if (base.zero()) return std::nullopt;
    Chain eta = join(Chain::simplex(axis), base);
    if (eta.zero()) return std::nullopt;
    MultiDegree mx = chain_max_support(C, eta);
    Int deg = std::max(max_block_sum(C, mx), Int(p) + 2 + extra_deg);
    MultiDegree beta = pad_to_degree(rng, C, mx, coord, deg);
    int l = coord;
    if (tcase == 1) {
        int blk = C.block_of(coord);
        int off = C.block_offset(blk);
        while (l == coord) l = off + pick(rng, 0, C.blocks[blk] - 1);
    } else {
        while (l == coord) l = pick(rng, 0, C.k() - 1);
    }
    return UfoInstance{make_ufo(cfg, beta, coord, axis, base), p, l};
}

struct SubcInstance {
    UfoChain u;
    Simplex sigma;
};

inline std::optional<SubcInstance> try_random_subc(Rng& rng,
                                                   const ConfigPtr& cfg) {
    const auto& C = *cfg;
    int coord = pick(rng, 0, C.k() - 1);
    auto axis_pool = points_with(C, coord, true);
    auto base_pool = points_with(C, coord, false);
    int t = pick(rng, 1, std::min(3, (int)axis_pool.size()));
    if ((int)axis_pool.size() < t) return std::nullopt;
    int ssz = pick(rng, 2, 3);
    if ((int)base_pool.size() < ssz) return std::nullopt;
    Simplex axis = sample_distinct(rng, axis_pool, t);
    Simplex sigma = sample_distinct(rng, base_pool, ssz);
    Chain base = boundary(Chain::simplex(sigma));
    Chain eta = join(Chain::simplex(axis), base);
    MultiDegree need = simplex_sum(C, axis);
    MultiDegree ssum = simplex_sum(C, sigma);
    for (int i = 0; i < C.k(); ++i) need[i] += ssum[i];
    Int deg = max_block_sum(C, need);
    MultiDegree beta = pad_to_degree(rng, C, need, coord, deg);
    return SubcInstance{make_ufo(cfg, beta, coord, axis, base), sigma};
}

// t = 2, k = 4 shape handled by fill_ufo24. force_case2 builds the
// first-block-of-size-4, all-ones profile on a matching configuration.
inline std::optional<UfoChain> try_random_ufo24(Rng& rng, const ConfigPtr& cfg,
                                                bool force_case2) {
    const auto& C = *cfg;
    if (!C.is_segre() || C.blocks[0] < 2 || C.blocks[0] > 4) return std::nullopt;
    auto axis_pool = points_with(C, 1, true);
    auto base_pool = points_with(C, 1, false);
    if ((int)axis_pool.size() < 2 || (int)base_pool.size() < 3)
        return std::nullopt;
    Simplex axis = sample_distinct(rng, axis_pool, 2);
    Simplex tri;
    if (force_case2) {
        if (C.blocks[0] != 4) return std::nullopt;
        // one triangle vertex per non-axis first-block value
        for (int c : {0, 2, 3}) {
            auto fam = points_with(C, c, true);
            std::vector<int> fam0;
            for (int v : fam)
                if (C.points[v][1] == 0) fam0.push_back(v);
            if (fam0.empty()) return std::nullopt;
            tri.push_back(pick_one(rng, fam0));
        }
        std::sort(tri.begin(), tri.end());
        tri.erase(std::unique(tri.begin(), tri.end()), tri.end());
        if (tri.size() != 3) return std::nullopt;
    } else {
        tri = sample_distinct(rng, base_pool, 3);
    }
    Chain base = boundary(Chain::simplex(tri, pick_sign(rng)));
    Chain eta = join(Chain::simplex(axis), base);
    if (eta.zero()) return std::nullopt;
    MultiDegree mx = chain_max_support(C, eta);
    Int deg = std::max(max_block_sum(C, mx), Int(5));
    MultiDegree beta = pad_to_degree(rng, C, mx, 1, deg);
    return make_ufo(cfg, beta, 1, axis, base);
}

struct PushInstance {
    MultiDegree beta;
    Chain eta;
    int p;
};

// p-chain under beta whose boundary already fits under beta - e_1, built by
// filling a random cycle from the shrunk box. Exercises push_boundary.
inline std::optional<PushInstance> try_random_push(Rng& rng,
                                                   const ConfigPtr& cfg, int p) {
    const auto& C = *cfg;
    Int deg = p + 2 + pick(rng, 0, 1);
    MultiDegree beta = random_segre_degree(rng, C, deg);
    if (beta[1] < 1) {
        for (int i = 0; i < C.blocks[0]; ++i)
            if (i != 1 && beta[i] > 0) {
                beta[i] -= 1;
                beta[1] += 1;
                break;
            }
    }
    if (beta[1] < 1) return std::nullopt;
    MultiDegree below = beta;
    below[1] -= 1;
    SlicedComplex cx = enumerate_faces(box_delta(cfg, below), p);
    if (cx.faces(p).empty()) return std::nullopt;
    Chain z;
    int nt = pick(rng, 1, 2);
    for (int i = 0; i < nt; ++i)
        z += boundary(Chain::simplex(pick_one(rng, cx.faces(p)), pick_sign(rng)));
    if (z.zero()) return std::nullopt;
    auto eta = fill(z, box_delta(cfg, beta), p);
    if (!eta || eta->zero()) return std::nullopt;
    return PushInstance{beta, *eta, p};
}

struct CycleInstance {
    MultiDegree b;
    Chain gamma;
    int p;
};

// (p-1)-cycle bounding inside Delta_b, as a signed sum of simplex boundaries
inline std::optional<CycleInstance> try_random_cycle(Rng& rng,
                                                     const ConfigPtr& cfg,
                                                     int p, Int deg) {
    MultiDegree b = random_segre_degree(rng, *cfg, deg);
    if (b[0] < 1) {
        for (int i = 1; i < cfg->blocks[0]; ++i)
            if (b[i] > 0) {
                b[i] -= 1;
                b[0] += 1;
                break;
            }
    }
    SlicedComplex cx = enumerate_faces(monoid_delta(cfg, b), p);
    if (cx.faces(p).empty()) return std::nullopt;
    Chain gamma;
    int nt = pick(rng, 1, 2);
    for (int i = 0; i < nt; ++i)
        gamma += boundary(
            Chain::simplex(pick_one(rng, cx.faces(p)), pick_sign(rng)));
    if (gamma.zero()) return std::nullopt;
    return CycleInstance{b, gamma, p};
}

// brute-force face enumeration: every vertex subset of size <= D + 1 that
// is_face accepts, grown one vertex at a time without pruning shortcuts
inline std::vector<Simplex> brute_faces(const ComplexSpec& spec, int D) {
    std::vector<Simplex> out;
    int m = spec.cfg->m();
    std::vector<Simplex> frontier{Simplex{}};
    if (is_face(spec, {})) out.push_back({});
    for (int d = 0; d <= D; ++d) {
        std::vector<Simplex> next;
        for (const auto& f : frontier) {
            int lo = f.empty() ? 0 : f.back() + 1;
            for (int v = lo; v < m; ++v) {
                Simplex g = f;
                g.push_back(v);
                // no pruning: test every extension independently
                if (is_face(spec, g)) {
                    out.push_back(g);
                    next.push_back(g);
                } else {
                    next.push_back(g);  // keep exploring supersets anyway
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace testutil
