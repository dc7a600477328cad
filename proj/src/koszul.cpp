#include "segsyz/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "segsyz/parallel.hpp"
#include "segsyz/syzygy.hpp"

namespace segsyz {

long h0_dim(const SegreParams& params, int q) {
    if (q < 0) return 0;
    long out = 1;
    for (int n : params.dims) {
        // C(n + q, n)
        long c = 1;
        for (int i = 1; i <= n; ++i) c = c * (q + i) / i;
        out *= c;
    }
    return out;
}

static long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long c = 1;
    for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// wedge part of a term basis element at a fixed multidegree b: a sorted
// r-subset S of point indices with sum(S) <= b; the symmetric part is then
// forced to b - sum(S). Enumeration is kept local to this module so the
// cross-validation path shares no face machinery with the homology side.
static void wedge_subsets(const PointConfiguration& cfg, const MultiDegree& b,
                          int r, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> cur;
    MultiDegree sum(b.size(), 0);
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < cfg.m(); ++v) {
            bool ok = true;
            for (int c = 0; c < (int)b.size(); ++c)
                if (sum[c] + cfg.points[v][c] > b[c]) { ok = false; break; }
            if (!ok) continue;
            for (int c = 0; c < (int)b.size(); ++c) sum[c] += cfg.points[v][c];
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
            for (int c = 0; c < (int)b.size(); ++c) sum[c] -= cfg.points[v][c];
        }
    };
    rec(0);
}

// rank of the contraction map from r-subsets to (r-1)-subsets at multidegree b
static int block_map_rank(const PointConfiguration& cfg,
                          const std::vector<std::vector<int>>& src,
                          const std::vector<std::vector<int>>& tgt,
                          PrimeSource& primes, bool& used_exact) {
    if (src.empty() || tgt.empty()) return 0;
    std::map<std::vector<int>, int> tidx;
    for (int i = 0; i < (int)tgt.size(); ++i) tidx[tgt[i]] = i;
    SparseMatrix m;
    m.init((int)src.size(), (int)tgt.size());
    for (int r = 0; r < (int)src.size(); ++r) {
        const auto& S = src[r];
        std::map<int, Rat> row;
        for (size_t i = 0; i < S.size(); ++i) {
            std::vector<int> S2(S.begin(), S.end());
            S2.erase(S2.begin() + i);
            auto it = tidx.find(S2);
            if (it == tidx.end())
                throw std::logic_error("koszul target basis incomplete");
            row[it->second] += (i % 2 == 0) ? Rat(1) : Rat(-1);
        }
        for (const auto& [c, v] : row)
            if (v != 0) m.row_data[r].push_back({c, v});
    }
    RankStats st;
    int rk = rank(m, primes, &st);
    if (st.exact_fallback) used_exact = true;
    return rk;
}

KoszulSlice koszul_tor_dim(const ConfigPtr& cfg, int p, int q,
                           const KoszulOptions& opts) {
    if (!cfg->is_segre())
        throw std::invalid_argument("koszul validator needs a segre configuration");
    if (p < 1 || q < 0) throw std::invalid_argument("koszul needs p >= 1, q >= 0");
    SegreParams params;
    for (int bl : cfg->blocks) params.dims.push_back(bl - 1);

    KoszulSlice slice;
    slice.p = p;
    slice.q = q;
    slice.dim_in = q >= 1 ? binom(cfg->m(), p + 1) * h0_dim(params, q - 1) : 0;
    slice.dim_mid = binom(cfg->m(), p) * h0_dim(params, q);
    slice.dim_out = p >= 1 ? binom(cfg->m(), p - 1) * h0_dim(params, q + 1) : 0;
    long biggest = std::max({slice.dim_in, slice.dim_mid, slice.dim_out});
    if (biggest > opts.max_term_dim)
        throw std::runtime_error(
            "koszul slice exceeds the configured size limit (" +
            std::to_string(biggest) + " > " + std::to_string(opts.max_term_dim) +
            " basis elements)");

    std::vector<MultiDegree> degs = enumerate_multidegrees(*cfg, p + q);
    std::vector<long> mid_d(degs.size()), rank_in(degs.size()),
        rank_out(degs.size());
    parallel_for((long)degs.size(), opts.jobs, [&](long i) {
        const MultiDegree& b = degs[i];
        PrimeSource primes(opts.rank.seed + (std::uint64_t)i * 0x9e3779b97f4a7c15ULL);
        std::vector<std::vector<int>> in_b, mid_b, out_b;
        // the symmetric factor exists iff its degree is >= 0; q+1 >= 1 always
        if (q >= 1) wedge_subsets(*cfg, b, p + 1, in_b);
        wedge_subsets(*cfg, b, p, mid_b);
        wedge_subsets(*cfg, b, p - 1, out_b);
        bool used_exact = false;
        mid_d[i] = (long)mid_b.size();
        rank_in[i] = block_map_rank(*cfg, in_b, mid_b, primes, used_exact);
        rank_out[i] = block_map_rank(*cfg, mid_b, out_b, primes, used_exact);
        long tor = mid_d[i] - rank_in[i] - rank_out[i];
        if (tor < 0)
            throw std::logic_error("negative block tor dimension: rank engine bug");
    });
    for (size_t i = 0; i < degs.size(); ++i) {
        slice.rank_in += rank_in[i];
        slice.rank_out += rank_out[i];
        slice.tor_dim += mid_d[i] - rank_in[i] - rank_out[i];
    }
    slice.blocks = (long)degs.size();
    return slice;
}

CrossCheck cross_check(const ConfigPtr& cfg, int p, int q,
                       const KoszulOptions& opts) {
    CrossCheck out;
    out.koszul = koszul_tor_dim(cfg, p, q, opts).tor_dim;
    SyzygyOptions sopts;
    sopts.rank = opts.rank;
    sopts.jobs = opts.jobs;
    out.cps = graded_betti(cfg, p - 1, p + q, sopts).total;
    out.match = (out.koszul == out.cps);
    return out;
}

}  // namespace segsyz
