#include "segsyz/syzygy.hpp"

#include <algorithm>
#include <stdexcept>

#include "segsyz/parallel.hpp"

namespace segsyz {

long cps_rank(const ConfigPtr& cfg, const MultiDegree& b, int j,
              const SyzygyOptions& opts) {
    if (j < 0) throw std::invalid_argument("cps_rank needs j >= 0");
    Int t = degree_int(*cfg, b);
    if (opts.cache && opts.cache->enabled()) {
        auto hit = opts.cache->get(cfg->descriptor, t, j, b);
        if (hit) return *hit;
    }
    HomologyReport rep = betti_reduced(monoid_delta(cfg, b), j, opts.rank);
    if (opts.cache && opts.cache->enabled())
        opts.cache->put(cfg->descriptor, t, j, b, rep.betti,
                        {rep.stats_dj, rep.stats_djp1});
    return rep.betti;
}

BettiTable graded_betti(const ConfigPtr& cfg, int j, Int t,
                        const SyzygyOptions& opts) {
    if (j < 0) throw std::invalid_argument("graded_betti needs j >= 0");
    BettiTable out;
    out.config = cfg->descriptor;
    std::vector<MultiDegree> degs = enumerate_multidegrees(*cfg, t);
    std::vector<long> ranks(degs.size(), 0);
    parallel_for((long)degs.size(), opts.jobs,
                 [&](long i) { ranks[i] = cps_rank(cfg, degs[i], j, opts); });
    for (size_t i = 0; i < degs.size(); ++i) {
        if (ranks[i] != 0) {
            out.entries.push_back({j, degs[i], t, ranks[i]});
            out.total += ranks[i];
        }
    }
    return out;
}

NpReport check_np(const ConfigPtr& cfg, int p, int D, bool use_cap,
                  const SyzygyOptions& opts) {
    if (p < 1) throw std::invalid_argument("check_np needs p >= 1");
    if (D < 3) throw std::invalid_argument("check_np needs D >= 3");
    ConfigPtr work = cfg;
    NpReport rep;
    rep.config = cfg->descriptor;
    rep.p = p;
    rep.degree_bound = D;
    if (use_cap) {
        if (!cfg->is_segre())
            throw std::invalid_argument("dimension capping applies to segre only");
        SegreParams params;
        for (int bl : cfg->blocks) params.dims.push_back(bl - 1);
        SegreParams capped = cap_dimensions(params, p);
        if (capped.dims != params.dims) {
            work = build_segre(capped);
            rep.capped = true;
        }
    }
    rep.verified = true;
    for (int pp = 1; pp <= p; ++pp) {
        for (int q = 2; pp + q <= D; ++q) {
            BettiTable tb = graded_betti(work, pp - 1, pp + q, opts);
            NpRow row;
            row.p = pp;
            row.q = q;
            row.verified = (tb.total == 0);
            for (const auto& e : tb.entries) row.witnesses.push_back(e.b);
            if (!row.verified) rep.verified = false;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

WitnessReport find_witness(const ConfigPtr& cfg, int p,
                           const std::vector<Int>& degrees,
                           const SyzygyOptions& opts) {
    if (p < 1) throw std::invalid_argument("find_witness needs p >= 1");
    WitnessReport rep;
    rep.config = cfg->descriptor;
    rep.p = p;
    rep.degrees = degrees;
    for (Int t : degrees) {
        BettiTable tb = graded_betti(cfg, p - 1, t, opts);
        for (const auto& e : tb.entries) {
            ComplexSpec spec = monoid_delta(cfg, e.b);
            SlicedComplex cx = enumerate_faces(spec, p);
            SparseMatrix m = boundary_matrix(cx, p - 1);
            auto basis = kernel_basis_exact(m);
            const auto& faces = cx.faces(p - 1);
            bool found = false;
            for (const auto& vec : basis) {
                Chain z;
                for (const auto& [col, v] : vec) z.add(faces[col], v);
                if (!fill(z, spec, p).has_value()) {
                    rep.entries.push_back({e.b, t, e.rank, std::move(z)});
                    found = true;
                    break;
                }
            }
            // rank > 0 forces a non-bounding vector among any kernel basis
            if (!found)
                throw std::logic_error(
                    "find_witness: positive rank but every basis cycle bounds");
        }
    }
    return rep;
}

}  // namespace segsyz
