#include "segsyz/config.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segsyz {

int PointConfiguration::block_of(int coord) const {
    int off = 0;
    for (int bi = 0; bi < (int)blocks.size(); ++bi) {
        if (coord < off + blocks[bi]) return bi;
        off += blocks[bi];
    }
    throw std::invalid_argument("coordinate out of range");
}

int PointConfiguration::block_offset(int blk) const {
    int off = 0;
    for (int bi = 0; bi < blk; ++bi) off += blocks[bi];
    return off;
}

ConfigPtr build_segre(const SegreParams& params) {
    if (params.dims.empty())
        throw std::invalid_argument("segre needs at least one factor");
    for (int n : params.dims)
        if (n < 1) throw std::invalid_argument("segre factor dims must be >= 1");
    auto cfg = std::make_shared<PointConfiguration>();
    cfg->blocks.reserve(params.dims.size());
    int k = 0;
    for (int n : params.dims) {
        cfg->blocks.push_back(n + 1);
        k += n + 1;
    }
    int d = (int)params.dims.size();
    cfg->omega.assign(k, Rat(1, d));
    // points ordered lexicographically by the index tuple (j_1,...,j_d)
    std::vector<int> idx(d, 0);
    for (;;) {
        MultiDegree pt(k, 0);
        int off = 0;
        for (int bi = 0; bi < d; ++bi) {
            pt[off + idx[bi]] = 1;
            off += cfg->blocks[bi];
        }
        cfg->points.push_back(std::move(pt));
        int bi = d - 1;
        while (bi >= 0 && ++idx[bi] == cfg->blocks[bi]) idx[bi--] = 0;
        if (bi < 0) break;
    }
    std::ostringstream ds;
    ds << "segre:";
    for (int i = 0; i < d; ++i) ds << (i ? "," : "") << params.dims[i];
    cfg->descriptor = ds.str();
    return cfg;
}

ConfigPtr build_veronese(int n, int a) {
    if (n < 1 || a < 1) throw std::invalid_argument("veronese needs n,a >= 1");
    auto cfg = std::make_shared<PointConfiguration>();
    int k = n + 1;
    cfg->omega.assign(k, Rat(1, a));
    // exponent vectors of total degree a, lex order
    MultiDegree pt(k, 0);
    std::function<void(int, Int)> rec = [&](int pos, Int rem) {
        if (pos == k - 1) {
            pt[pos] = rem;
            cfg->points.push_back(pt);
            return;
        }
        for (Int v = rem; v >= 0; --v) {
            pt[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, a);
    std::ostringstream ds;
    ds << "veronese:" << n << "," << a;
    cfg->descriptor = ds.str();
    return cfg;
}

ConfigPtr parse_descriptor(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad config descriptor: " + descriptor);
    std::string kind = descriptor.substr(0, colon);
    std::string rest = descriptor.substr(colon + 1);
    std::vector<int> nums;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad config descriptor: " + descriptor);
        nums.push_back(std::stoi(tok));
    }
    if (nums.empty())
        throw std::invalid_argument("bad config descriptor: " + descriptor);
    if (kind == "segre") return build_segre(SegreParams{nums});
    if (kind == "veronese") {
        if (nums.size() != 2)
            throw std::invalid_argument("veronese descriptor needs n,a");
        return build_veronese(nums[0], nums[1]);
    }
    throw std::invalid_argument("unknown config kind: " + kind);
}

Rat degree(const PointConfiguration& cfg, const MultiDegree& b) {
    if ((int)b.size() != cfg.k())
        throw std::invalid_argument("multidegree has wrong length");
    Rat s = 0;
    for (int i = 0; i < (int)b.size(); ++i) s += cfg.omega[i] * b[i];
    return s;
}

Int degree_int(const PointConfiguration& cfg, const MultiDegree& b) {
    Rat s = degree(cfg, b);
    if (denominator(s) != 1)
        throw std::invalid_argument("degree is not an integer");
    return (Int)numerator(s);
}

bool is_in_monoid(const PointConfiguration& cfg, const MultiDegree& b) {
    if ((int)b.size() != cfg.k())
        throw std::invalid_argument("multidegree has wrong length");
    for (Int v : b)
        if (v < 0) return false;
    if (cfg.is_segre()) {
        // b in N.A iff all block sums are equal
        Int first = 0, off = 0;
        for (int bi = 0; bi < (int)cfg.blocks.size(); ++bi) {
            Int s = 0;
            for (int c = 0; c < cfg.blocks[bi]; ++c) s += b[off + c];
            if (bi == 0)
                first = s;
            else if (s != first)
                return false;
            off += cfg.blocks[bi];
        }
        return true;
    }
    // general case: bounded search, memoized on the remaining vector
    Rat dg = degree(cfg, b);
    if (dg < 0) return false;
    if (denominator(dg) != 1) return false;
    std::map<MultiDegree, bool> memo;
    std::function<bool(const MultiDegree&)> rec = [&](const MultiDegree& v) -> bool {
        bool zero = true;
        for (Int x : v)
            if (x != 0) { zero = false; break; }
        if (zero) return true;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& a : cfg.points) {
            bool fits = true;
            for (int i = 0; i < (int)v.size(); ++i)
                if (v[i] < a[i]) { fits = false; break; }
            if (!fits) continue;
            MultiDegree w(v.size());
            for (int i = 0; i < (int)v.size(); ++i) w[i] = v[i] - a[i];
            if (rec(w)) { ok = true; break; }
        }
        memo[v] = ok;
        return ok;
    };
    return rec(b);
}

std::vector<MultiDegree> enumerate_multidegrees(const PointConfiguration& cfg,
                                                Int t) {
    if (t < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<MultiDegree> out;
    if (cfg.is_segre()) {
        // per-block compositions of t, cartesian product, lex order
        std::vector<std::vector<MultiDegree>> per;
        for (int bl : cfg.blocks) {
            std::vector<MultiDegree> comps;
            MultiDegree c(bl, 0);
            std::function<void(int, Int)> rec = [&](int pos, Int rem) {
                if (pos == bl - 1) {
                    c[pos] = rem;
                    comps.push_back(c);
                    return;
                }
                for (Int v = rem; v >= 0; --v) {
                    c[pos] = v;
                    rec(pos + 1, rem - v);
                }
            };
            rec(0, t);
            // lex ascending on the block vector
            std::sort(comps.begin(), comps.end());
            per.push_back(std::move(comps));
        }
        std::vector<size_t> idx(per.size(), 0);
        for (;;) {
            MultiDegree b;
            for (size_t bi = 0; bi < per.size(); ++bi)
                b.insert(b.end(), per[bi][idx[bi]].begin(), per[bi][idx[bi]].end());
            out.push_back(std::move(b));
            int bi = (int)per.size() - 1;
            while (bi >= 0 && ++idx[bi] == per[bi].size()) idx[bi--] = 0;
            if (bi < 0) break;
        }
        return out;
    }
    // general case: sums of t points, deduplicated
    std::set<MultiDegree> seen;
    MultiDegree acc(cfg.k(), 0);
    std::function<void(Int, int)> rec = [&](Int rem, int from) {
        if (rem == 0) {
            seen.insert(acc);
            return;
        }
        for (int i = from; i < cfg.m(); ++i) {
            for (int c = 0; c < cfg.k(); ++c) acc[c] += cfg.points[i][c];
            rec(rem - 1, i);
            for (int c = 0; c < cfg.k(); ++c) acc[c] -= cfg.points[i][c];
        }
    };
    rec(t, 0);
    return std::vector<MultiDegree>(seen.begin(), seen.end());
}

SegreParams cap_dimensions(const SegreParams& params, int p) {
    if (p < 1) throw std::invalid_argument("cap needs p >= 1");
    SegreParams out;
    out.dims.reserve(params.dims.size());
    for (int n : params.dims) out.dims.push_back(std::min(n, p));
    return out;
}

}  // namespace segsyz
