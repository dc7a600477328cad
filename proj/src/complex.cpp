#include "segsyz/complex.hpp"

#include <stdexcept>

namespace segsyz {

ComplexSpec monoid_delta(ConfigPtr cfg, MultiDegree b) {
    if (!is_in_monoid(*cfg, b))
        throw std::invalid_argument("MonoidDelta needs b in N.A");
    return ComplexSpec{std::move(cfg), ComplexKind::MonoidDelta, std::move(b)};
}

ComplexSpec box_delta(ConfigPtr cfg, MultiDegree v) {
    if ((int)v.size() != cfg->k())
        throw std::invalid_argument("bound has wrong length");
    return ComplexSpec{std::move(cfg), ComplexKind::BoxDelta, std::move(v)};
}

ComplexSpec union_x(ConfigPtr cfg, MultiDegree b) {
    if ((int)b.size() != cfg->k())
        throw std::invalid_argument("bound has wrong length");
    if (cfg->k() < 2)
        throw std::invalid_argument("UnionX needs at least two coordinates");
    for (Int v : b)
        if (v < 0) throw std::invalid_argument("UnionX needs b >= 0");
    return ComplexSpec{std::move(cfg), ComplexKind::UnionX, std::move(b)};
}

static bool sum_admissible(const ComplexSpec& spec, const MultiDegree& s) {
    const MultiDegree& b = spec.bound;
    switch (spec.kind) {
        case ComplexKind::BoxDelta:
        case ComplexKind::MonoidDelta:
            for (size_t i = 0; i < s.size(); ++i)
                if (s[i] > b[i]) return false;
            if (spec.kind == ComplexKind::BoxDelta) return true;
            {
                MultiDegree rest(b.size());
                for (size_t i = 0; i < b.size(); ++i) rest[i] = b[i] - s[i];
                return is_in_monoid(*spec.cfg, rest);
            }
        case ComplexKind::UnionX:
            if (s[0] > b[0]) return false;
            if (s[0] + s[1] > b[0] + b[1]) return false;
            for (size_t i = 2; i < s.size(); ++i)
                if (s[i] > b[i]) return false;
            return true;
    }
    return false;
}

bool is_face(const ComplexSpec& spec, const Simplex& f) {
    const auto& pts = spec.cfg->points;
    MultiDegree s(spec.cfg->k(), 0);
    int prev = -1;
    for (int v : f) {
        if (v <= prev)
            throw std::invalid_argument("simplex vertices must be strictly increasing");
        if (v < 0 || v >= spec.cfg->m())
            throw std::invalid_argument("vertex index out of range");
        prev = v;
        for (int c = 0; c < (int)s.size(); ++c) s[c] += pts[v][c];
    }
    return sum_admissible(spec, s);
}

const std::vector<Simplex>& SlicedComplex::faces(int d) const {
    static const std::vector<Simplex> none;
    if (d < -1 || d > cap) return none;
    return faces_by_dim[d + 1];
}

long SlicedComplex::total_faces() const {
    long t = 0;
    for (const auto& fs : faces_by_dim) t += (long)fs.size();
    return t;
}

SlicedComplex enumerate_faces(const ComplexSpec& spec, int D) {
    if (D < -1) throw std::invalid_argument("dimension cap must be >= -1");
    SlicedComplex out{spec, D, {}};
    out.faces_by_dim.assign(D + 2, {});

    MultiDegree zero(spec.cfg->k(), 0);
    if (!sum_admissible(spec, zero)) return out;  // entirely empty
    out.faces_by_dim[0].push_back({});
    if (D < 0) return out;

    const auto& pts = spec.cfg->points;
    int m = spec.cfg->m();
    // frontier of (face, vertex sum); complexes are downward closed, so a
    // failing extension never reappears deeper
    std::vector<std::pair<Simplex, MultiDegree>> frontier;
    frontier.push_back({{}, zero});
    for (int d = 0; d <= D && !frontier.empty(); ++d) {
        std::vector<std::pair<Simplex, MultiDegree>> next;
        for (const auto& [f, s] : frontier) {
            int lo = f.empty() ? 0 : f.back() + 1;
            for (int v = lo; v < m; ++v) {
                MultiDegree s2 = s;
                for (int c = 0; c < (int)s2.size(); ++c) s2[c] += pts[v][c];
                if (!sum_admissible(spec, s2)) continue;
                Simplex f2 = f;
                f2.push_back(v);
                next.push_back({std::move(f2), std::move(s2)});
            }
        }
        out.faces_by_dim[d + 1].reserve(next.size());
        for (const auto& [f, s] : next) out.faces_by_dim[d + 1].push_back(f);
        frontier = std::move(next);
    }
    return out;
}

bool supported_on(const ComplexSpec& spec, const Chain& c) {
    for (const auto& [s, coef] : c.terms())
        if (!is_face(spec, s)) return false;
    return true;
}

}  // namespace segsyz
