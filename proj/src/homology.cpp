#include "segsyz/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segsyz {

SparseMatrix boundary_matrix(const SlicedComplex& cx, int j) {
    if (j < 0 || j > cx.cap)
        throw std::invalid_argument("boundary_matrix: dimension out of range");
    const auto& upper = cx.faces(j);
    const auto& lower = cx.faces(j - 1);
    std::map<Simplex, int> lidx;
    for (int i = 0; i < (int)lower.size(); ++i) lidx[lower[i]] = i;
    SparseMatrix m;
    m.init((int)lower.size(), (int)upper.size());
    // build row-wise: collect (row, col, val) then bucket
    for (int c = 0; c < (int)upper.size(); ++c) {
        const Simplex& s = upper[c];
        Simplex face(s.begin(), s.end());
        for (size_t i = 0; i < s.size(); ++i) {
            face.assign(s.begin(), s.end());
            face.erase(face.begin() + i);
            auto it = lidx.find(face);
            if (it == lidx.end())
                throw std::logic_error("complex not downward closed");
            m.row_data[it->second].push_back({c, (i % 2 == 0) ? Rat(1) : Rat(-1)});
        }
    }
    for (auto& row : m.row_data)
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return m;
}

HomologyReport betti_reduced(const ComplexSpec& spec, int j,
                             const RankOptions& opts) {
    if (j < 0) throw std::invalid_argument("betti_reduced needs j >= 0");
    SlicedComplex cx = enumerate_faces(spec, j + 1);
    HomologyReport rep;
    rep.j = j;
    rep.f_below = (long)cx.faces(j - 1).size();
    rep.f_j = (long)cx.faces(j).size();
    rep.f_above = (long)cx.faces(j + 1).size();
    PrimeSource primes(opts.seed);
    if (rep.f_j > 0) {
        SparseMatrix dj = boundary_matrix(cx, j);
        rep.rank_dj = rank(dj, primes, &rep.stats_dj);
    }
    if (rep.f_above > 0) {
        SparseMatrix djp1 = boundary_matrix(cx, j + 1);
        rep.rank_djp1 = rank(djp1, primes, &rep.stats_djp1);
    }
    rep.betti = rep.f_j - rep.rank_dj - rep.rank_djp1;
    return rep;
}

std::optional<Chain> fill(const Chain& gamma, const ComplexSpec& spec, int D,
                          const std::vector<int>& forbidden_vertices) {
    if (gamma.zero()) return Chain();
    int j = gamma.dim();
    if (j < -1) throw std::invalid_argument("fill: bad chain dimension");
    if (D < j + 1) throw std::invalid_argument("fill: cap below dim gamma + 1");
    if (!supported_on(spec, gamma))
        throw std::invalid_argument("fill: chain not supported on the complex");
    if (j >= 0 && !boundary(gamma).zero())
        throw std::invalid_argument("fill: chain is not a cycle");

    SlicedComplex cx = enumerate_faces(spec, j + 1);
    const auto& lower = cx.faces(j);
    const auto& upper = cx.faces(j + 1);
    if (upper.empty()) return std::nullopt;
    std::map<Simplex, int> lidx;
    for (int i = 0; i < (int)lower.size(); ++i) lidx[lower[i]] = i;
    SparseMatrix m = boundary_matrix(cx, j + 1);
    std::vector<Rat> rhs((int)lower.size(), Rat(0));
    for (const auto& [s, c] : gamma.terms()) {
        auto it = lidx.find(s);
        if (it == lidx.end())
            throw std::logic_error("fill: face enumeration missed a simplex");
        rhs[it->second] = c;
    }
    std::optional<std::vector<char>> forb;
    if (!forbidden_vertices.empty()) {
        forb.emplace(upper.size(), 0);
        for (int c = 0; c < (int)upper.size(); ++c)
            for (int v : forbidden_vertices)
                if (std::binary_search(upper[c].begin(), upper[c].end(), v)) {
                    (*forb)[c] = 1;
                    break;
                }
    }
    auto sol = solve_exact(m, rhs, forb ? &*forb : nullptr);
    if (!sol) return std::nullopt;
    Chain out(j + 1);
    for (const auto& [c, v] : *sol) out.add(upper[c], v);
    // exact certificate
    if (!(boundary(out) == gamma) && !(out.zero() && gamma.zero()))
        throw std::logic_error("fill: solver certificate failed");
    return out;
}

}  // namespace segsyz
