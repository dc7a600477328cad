#include "segsyz/ufo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "segsyz/homology.hpp"

namespace segsyz {

namespace {

MultiDegree simplex_sum(const PointConfiguration& cfg, const Simplex& s) {
    MultiDegree out(cfg.k(), 0);
    for (int v : s)
        for (int i = 0; i < cfg.k(); ++i) out[i] += cfg.points[v][i];
    return out;
}

bool leq(const MultiDegree& a, const MultiDegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

MultiDegree vsub(MultiDegree a, const MultiDegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

MultiDegree shifted(MultiDegree v, int plus, int minus, Int amt = 1) {
    v[plus] += amt;
    v[minus] -= amt;
    return v;
}

std::string fmt_vec(const MultiDegree& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

int locate_point(const PointConfiguration& cfg, const MultiDegree& v) {
    for (int i = 0; i < cfg.m(); ++i)
        if (cfg.points[i] == v) return i;
    return -1;
}

bool simplex_has(const Simplex& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

std::set<int> chain_vertices(const Chain& c) {
    std::set<int> out;
    for (const auto& [s, coef] : c.terms()) out.insert(s.begin(), s.end());
    return out;
}

// inverse of join for a chain whose every simplex contains `front`:
// returns rest with join(<front>, rest) == c
Chain chain_divide(const Simplex& front, const Chain& c) {
    Chain out;
    for (const auto& [tau, coef] : c.terms()) {
        Simplex rest;
        rest.reserve(tau.size() - front.size());
        std::size_t fi = 0;
        for (int v : tau) {
            if (fi < front.size() && front[fi] == v) {
                ++fi;
                continue;
            }
            rest.push_back(v);
        }
        if (fi != front.size())
            throw std::logic_error("chain_divide: a term misses the front simplex");
        int sg = 0;
        join_simplex(front, rest, sg);
        out.add(rest, coef * sg);
    }
    return out;
}

Int checked_degree(const PointConfiguration& cfg, const MultiDegree& b,
                   const char* who) {
    if (!is_in_monoid(cfg, b))
        throw std::invalid_argument(std::string(who) + ": " + fmt_vec(b) +
                                    " is not in the point monoid");
    return degree_int(cfg, b);
}

}  // namespace

FillCertificate certify_fill(const ConfigPtr& cfg, Chain eta_tilde,
                             Chain expected_boundary, MultiDegree target,
                             std::string route) {
    Chain bv = eta_tilde.zero() ? Chain() : boundary(eta_tilde);
    if (!(bv == expected_boundary))
        throw std::logic_error("certify_fill(" + route +
                               "): boundary mismatch");
    if (!supported_on(box_delta(cfg, target), eta_tilde))
        throw std::logic_error("certify_fill(" + route +
                               "): chain leaves the box of " + fmt_vec(target));
    return FillCertificate{std::move(eta_tilde), std::move(bv),
                           std::move(target), std::move(route)};
}

UfoChain make_ufo(ConfigPtr cfg, MultiDegree beta, int coord,
                  std::vector<int> axis, const Chain& base) {
    if (!cfg) throw std::invalid_argument("make_ufo: null configuration");
    const auto& C = *cfg;
    if ((int)beta.size() != C.k())
        throw std::invalid_argument("make_ufo: beta has the wrong length");
    for (Int x : beta)
        if (x < 0) throw std::invalid_argument("make_ufo: negative beta");
    if (coord < 0 || coord >= C.k())
        throw std::invalid_argument("make_ufo: coordinate out of range");
    if (axis.empty()) throw std::invalid_argument("make_ufo: empty axis");
    Int sat = 0;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        int a = axis[i];
        if (a < 0 || a >= C.m())
            throw std::invalid_argument("make_ufo: axis vertex out of range");
        if (i > 0 && axis[i - 1] >= a)
            throw std::invalid_argument("make_ufo: axis must be strictly increasing");
        if (C.points[a][coord] <= 0)
            throw std::invalid_argument(
                "make_ufo: axis vertex does not touch the coordinate");
        sat += C.points[a][coord];
    }
    if (sat != beta[coord])
        throw std::invalid_argument(
            "make_ufo: axis does not saturate beta at the coordinate");
    if (base.zero()) throw std::invalid_argument("make_ufo: zero base");
    if (base.dim() >= 0 && !is_cycle(base))
        throw std::invalid_argument("make_ufo: base is not a cycle");
    for (int v : chain_vertices(base))
        if (C.points[v][coord] != 0)
            throw std::invalid_argument(
                "make_ufo: base vertex touches the coordinate");

    UfoChain u;
    u.cfg = std::move(cfg);
    u.beta = std::move(beta);
    u.coord = coord;
    u.axis = std::move(axis);
    u.base = base;
    u.eta = join(Chain::simplex(u.axis), base);
    if (!supported_on(box_delta(u.cfg, u.beta), u.eta))
        throw std::invalid_argument("make_ufo: chain leaves the box of beta");
    // saturation makes the boundary drop one level automatically; verify
    MultiDegree below = u.beta;
    below[coord] -= 1;
    if (!supported_on(box_delta(u.cfg, below), boundary(u.eta)))
        throw std::invalid_argument(
            "make_ufo: boundary fails to drop below beta at the coordinate");
    return u;
}

UfoDecomposition decompose_ufos(const ConfigPtr& cfg, const MultiDegree& beta,
                                int coord, const Chain& eta) {
    if (!cfg) throw std::invalid_argument("decompose_ufos: null configuration");
    const auto& C = *cfg;
    if (coord < 0 || coord >= C.k())
        throw std::invalid_argument("decompose_ufos: coordinate out of range");
    if (beta[coord] < 1)
        throw std::invalid_argument(
            "decompose_ufos: beta must touch the coordinate");
    if (!supported_on(box_delta(cfg, beta), eta))
        throw std::invalid_argument(
            "decompose_ufos: chain leaves the box of beta");

    UfoDecomposition dec;
    std::map<Simplex, Chain> bases;
    for (const auto& [tau, c] : eta.terms()) {
        MultiDegree s = simplex_sum(C, tau);
        if (s[coord] < beta[coord]) {
            dec.remainder.add(tau, c);
            continue;
        }
        Simplex axis, rest;
        for (int v : tau)
            (C.points[v][coord] > 0 ? axis : rest).push_back(v);
        int sg = 0;
        join_simplex(axis, rest, sg);
        bases[axis].add(rest, c * sg);
    }
    for (auto& [axis, base] : bases) {
        if (base.dim() >= 0 && !is_cycle(base))
            throw std::invalid_argument(
                "decompose_ufos: the part over axis " +
                [&] {
                    std::ostringstream os;
                    for (int v : axis) os << v << " ";
                    return os.str();
                }() +
                "is not a cycle; the boundary of the chain does not fit below "
                "beta at the coordinate");
        dec.pieces.push_back(make_ufo(cfg, beta, coord, axis, base));
    }
    // exact round-trip guard
    Chain back = dec.remainder;
    for (const auto& p : dec.pieces) back += p.eta;
    if (!(back == eta))
        throw std::logic_error("decompose_ufos: round-trip failed");
    return dec;
}

FillCertificate fill_subc(const UfoChain& u, const Simplex& sigma) {
    const auto& C = *u.cfg;
    if (sigma.empty()) throw std::invalid_argument("fill_subc: empty simplex");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0 || sigma[i] >= C.m())
            throw std::invalid_argument("fill_subc: vertex out of range");
        if (i > 0 && sigma[i - 1] >= sigma[i])
            throw std::invalid_argument("fill_subc: simplex must be sorted");
        if (simplex_has(u.axis, sigma[i]))
            throw std::invalid_argument("fill_subc: simplex meets the axis");
    }
    MultiDegree w = vsub(u.beta, simplex_sum(C, u.axis));
    if (!leq(simplex_sum(C, sigma), w))
        throw std::invalid_argument(
            "fill_subc: simplex does not fit under beta - sum(axis)");
    if (!(u.base == boundary(Chain::simplex(sigma))))
        throw std::invalid_argument(
            "fill_subc: base is not the boundary of the simplex");

    MultiDegree target = u.beta;
    target[u.coord] -= 1;
    Chain expected = boundary(u.eta);
    Chain K = join(boundary(Chain::simplex(u.axis)), Chain::simplex(sigma));
    Chain bK = K.zero() ? Chain() : boundary(K);
    if (bK == expected) return certify_fill(u.cfg, K, expected, target, "subc");
    if (bK == -expected)
        return certify_fill(u.cfg, -K, expected, target, "subc");
    throw std::logic_error("fill_subc: boundary comparison failed");
}

FillCertificate fill_simple(const UfoChain& u, int l, int p) {
    const auto& C = *u.cfg;
    if (p < 1) throw std::invalid_argument("fill_simple: p must be >= 1");
    if (u.eta.dim() != p)
        throw std::invalid_argument("fill_simple: chain dimension must be p");
    if (l < 0 || l >= C.k() || l == u.coord)
        throw std::invalid_argument("fill_simple: bad target coordinate");
    Int deg = checked_degree(C, u.beta, "fill_simple");
    if (deg < p + 2)
        throw std::invalid_argument("fill_simple: deg beta must be >= p + 2");

    const int t = u.t();
    MultiDegree target = shifted(u.beta, l, u.coord);
    ComplexSpec tgt_spec = box_delta(u.cfg, target);
    Chain expected = boundary(u.eta);

    if (t == p + 1) {
        // base is a multiple of <>; cone the boundary over any vertex that
        // still fits under beta - sum(axis)
        MultiDegree w = vsub(u.beta, simplex_sum(C, u.axis));
        for (int x = 0; x < C.m(); ++x) {
            if (!leq(C.points[x], w)) continue;
            if (simplex_has(u.axis, x)) continue;
            Chain cand = join(Chain::simplex({x}), expected);
            if (!supported_on(tgt_spec, cand)) continue;
            return certify_fill(u.cfg, cand, expected, target, "cone");
        }
        throw std::runtime_error(
            "fill_simple: no cone vertex under " + fmt_vec(w) +
            " (deg beta too small for the configuration)");
    }

    if (t == 1) {
        // move the single axis vertex off the coordinate
        MultiDegree moved = C.points[u.axis[0]];
        moved[u.coord] -= 1;
        moved[l] += 1;
        int at = locate_point(C, moved);
        if (at < 0)
            throw std::runtime_error(
                "fill_simple: no configuration point at " + fmt_vec(moved) +
                "; the move needs the target coordinate in the block of the "
                "axis coordinate");
        if (chain_vertices(u.base).count(at)) {
            auto f = fill(expected, tgt_spec, p);
            if (!f)
                throw std::runtime_error(
                    "fill_simple: boundary does not bound under " +
                    fmt_vec(target));
            return certify_fill(u.cfg, *f, expected, target, "move-solver");
        }
        Chain cand = join(Chain::simplex({at}), u.base);
        return certify_fill(u.cfg, cand, expected, target, "move");
    }

    if (t != p)
        throw std::invalid_argument(
            "fill_simple: axis size must be p + 1, p, or 1");

    // t == p: base is a 0-cycle on vertices below w
    MultiDegree w = vsub(u.beta, simplex_sum(C, u.axis));
    Chain dchi = boundary(Chain::simplex(u.axis));

    if (deg >= p + 3) {
        // connect the base inside the box of w and push the whole edge chain
        auto g = fill(u.base, box_delta(u.cfg, w), 1);
        if (!g)
            throw std::runtime_error(
                "fill_simple: the box complex of " + fmt_vec(w) +
                " is disconnected where it must not be (H~_0 != 0)");
        Chain K = join(*g, dchi);
        Chain bK = K.zero() ? Chain() : boundary(K);
        if (bK == expected)
            return certify_fill(u.cfg, K, expected, target, "edge-fill");
        if (bK == -expected)
            return certify_fill(u.cfg, -K, expected, target, "edge-fill");
        throw std::logic_error("fill_simple: edge-fill boundary comparison failed");
    }

    // deg == p + 2: decompose the 0-cycle into vertex pairs, walk each pair
    // one block at a time and cone every elementary step
    if (!C.is_segre())
        throw std::invalid_argument(
            "fill_simple: the tight-degree case needs a Segre configuration");
    struct Step {
        int from, to;
        Rat amt;
    };
    std::vector<Step> steps;
    Chain rem = u.base;
    while (!rem.zero()) {
        int P = -1, Q = -1;
        Rat cp, cq;
        for (const auto& [s, c] : rem.terms()) {
            if (c > 0 && P < 0) {
                P = s[0];
                cp = c;
            }
            if (c < 0 && Q < 0) {
                Q = s[0];
                cq = c;
            }
            if (P >= 0 && Q >= 0) break;
        }
        if (P < 0 || Q < 0)
            throw std::logic_error("fill_simple: unbalanced 0-cycle");
        Rat nq = -cq;
        Rat amt = std::min(cp, nq);
        int cur = Q;
        while (cur != P) {
            const MultiDegree& pc = C.points[cur];
            const MultiDegree& pp = C.points[P];
            MultiDegree nxt = pc;
            for (std::size_t blk = 0; blk < C.blocks.size(); ++blk) {
                int off = C.block_offset((int)blk);
                bool diff = false;
                for (int i = off; i < off + C.blocks[blk]; ++i)
                    if (pc[i] != pp[i]) diff = true;
                if (!diff) continue;
                for (int i = off; i < off + C.blocks[blk]; ++i) nxt[i] = pp[i];
                break;
            }
            int ni = locate_point(C, nxt);
            if (ni < 0) throw std::logic_error("fill_simple: path point missing");
            steps.push_back({cur, ni, amt});
            cur = ni;
        }
        rem.add({P}, -amt);
        rem.add({Q}, amt);
    }

    Chain acc;
    bool used_solver = false;
    for (const auto& st : steps) {
        Chain piece;
        piece.add({st.to}, st.amt);
        piece.add({st.from}, -st.amt);
        Chain step_boundary = join(dchi, piece);
        Chain cand;
        bool found = false;
        for (int z = 0; z < C.m() && !found; ++z) {
            if (z == st.from || z == st.to || simplex_has(u.axis, z)) continue;
            Chain c2 = join(Chain::simplex({z}), step_boundary);
            if (!supported_on(tgt_spec, c2)) continue;
            cand = c2;
            found = true;
        }
        if (!found) {
            auto f = fill(step_boundary, tgt_spec, p);
            if (!f) {
                // a single step can land on a nontrivial class of the target
                // box even though the total boundary is trivial; fall back to
                // filling the whole boundary at once
                auto g = fill(expected, tgt_spec, p);
                if (!g)
                    throw std::runtime_error(
                        "fill_simple: the boundary does not bound under " +
                        fmt_vec(target));
                return certify_fill(u.cfg, *g, expected, target,
                                    "telescope+solver");
            }
            cand = *f;
            used_solver = true;
        }
        acc += cand;
    }
    return certify_fill(u.cfg, acc, expected, target,
                        used_solver ? "telescope+solver" : "telescope");
}

FillCertificate fill_ufo24(const UfoChain& u) {
    const auto& C = *u.cfg;
    if (!C.is_segre())
        throw std::invalid_argument("fill_ufo24: needs a Segre configuration");
    if (C.blocks.empty() || C.blocks[0] < 2 || C.blocks[0] > 4)
        throw std::invalid_argument(
            "fill_ufo24: first block must have size 2..4");
    if (u.coord != 1)
        throw std::invalid_argument(
            "fill_ufo24: the saturated coordinate must be coordinate 1");
    if (u.t() != 2 || u.eta.dim() != 3 || u.beta[1] != 2)
        throw std::invalid_argument(
            "fill_ufo24: needs two axis vertices, a 3-chain and beta[1] == 2");
    Int deg = checked_degree(C, u.beta, "fill_ufo24");
    if (deg < 5) throw std::invalid_argument("fill_ufo24: deg beta must be >= 5");

    const int a1 = u.axis[0], a2 = u.axis[1];
    const MultiDegree& pa1 = C.points[a1];
    const MultiDegree& pa2 = C.points[a2];
    MultiDegree w = vsub(vsub(u.beta, pa1), pa2);
    MultiDegree target = shifted(u.beta, 0, 1);
    ComplexSpec tgt_spec = box_delta(u.cfg, target);
    Chain expected = boundary(u.eta);

    auto solver_route = [&]() -> FillCertificate {
        auto f = fill(expected, tgt_spec, 3);
        if (!f)
            throw std::runtime_error(
                "fill_ufo24: boundary does not bound under " + fmt_vec(target));
        return certify_fill(u.cfg, *f, expected, target, "ufo24-solver");
    };

    int i_fat = -1;
    for (int i = 0; i < C.blocks[0]; ++i)
        if (i != 1 && u.beta[i] >= 2) {
            i_fat = i;
            break;
        }

    if (i_fat >= 0) {
        // break every edge saturating coordinate i_fat through a fresh vertex,
        // then slide both axis vertices off coordinate 1
        Chain cprime = u.base;
        std::vector<std::pair<Rat, FillCertificate>> corrections;
        std::vector<Simplex> saturated;
        for (const auto& [e, c] : cprime.terms())
            if (simplex_sum(C, e)[i_fat] == w[i_fat]) saturated.push_back(e);
        bool inner_solver = false;
        for (const auto& e : saturated) {
            Rat c = cprime.coeff(e);
            if (c == 0) continue;
            MultiDegree room = vsub(vsub(w, C.points[e[0]]), C.points[e[1]]);
            int P = -1;
            for (int x = 0; x < C.m(); ++x) {
                if (x == e[0] || x == e[1] || simplex_has(u.axis, x)) continue;
                if (!leq(C.points[x], room)) continue;
                P = x;
                break;
            }
            if (P < 0) return solver_route();
            Simplex tri = {P, e[0], e[1]};
            std::sort(tri.begin(), tri.end());
            Chain dtri = boundary(Chain::simplex(tri));
            Rat eps = dtri.coeff(e);
            if (eps == 0) throw std::logic_error("fill_ufo24: edge lost");
            Rat s = c / eps;
            UfoChain usub = make_ufo(u.cfg, u.beta, 1, u.axis, dtri);
            FillCertificate csub = fill_subc(usub, tri);
            if (csub.route.find("solver") != std::string::npos)
                inner_solver = true;
            corrections.emplace_back(s, std::move(csub));
            cprime -= dtri * s;
        }
        for (const auto& [e, c] : cprime.terms())
            if (simplex_sum(C, e)[i_fat] == w[i_fat])
                throw std::logic_error("fill_ufo24: saturated edge survived");

        MultiDegree mv1 = shifted(pa1, 0, 1);
        int at1 = locate_point(C, mv1);
        MultiDegree mv2 = shifted(pa2, i_fat, 1);
        int at2 = locate_point(C, mv2);
        if (at1 < 0 || at2 < 0) return solver_route();
        auto verts = chain_vertices(cprime);
        if (verts.count(at1) || verts.count(at2) || at1 == a2 || at2 == a1 ||
            at1 == at2)
            return solver_route();

        Chain lambda = join(join(Chain::simplex({a2}), Chain::simplex({at1})),
                            cprime);
        Chain K = join(join(Chain::simplex({a1}), Chain::simplex({at2})),
                       cprime) +
                  join(join(Chain::simplex({at2}), Chain::simplex({at1})),
                       cprime);
        Chain D = boundary(join(Chain::simplex(u.axis), cprime) + lambda);
        Chain bK = boundary(K);
        int eps2;
        if (bK == D)
            eps2 = 1;
        else if (bK == -D)
            eps2 = -1;
        else
            return solver_route();
        Chain out = K * eps2 - lambda;
        for (const auto& [s, cert] : corrections) out += cert.eta_tilde * s;
        return certify_fill(u.cfg, out, expected, target,
                            inner_solver ? "ufo24-case1+solver" : "ufo24-case1");
    }

    // no room in the first block: forced shape (block sizes 4, beta block 0 =
    // (1,2,1,1) up to the position of the 2, deg 5)
    if (C.blocks[0] != 4)
        throw std::invalid_argument("fill_ufo24: unreachable block shape");
    for (int i = 0; i < C.blocks[0]; ++i)
        if (i != 1 && u.beta[i] != 1)
            throw std::invalid_argument("fill_ufo24: unreachable beta shape");

    MultiDegree mv1 = shifted(pa1, 0, 1);
    MultiDegree mv2 = shifted(pa2, 0, 1);
    int at1 = locate_point(C, mv1);
    int at2 = locate_point(C, mv2);
    if (at1 < 0 || at2 < 0) return solver_route();
    auto verts = chain_vertices(u.base);
    if (verts.count(at1) || verts.count(at2) || at1 == at2)
        return solver_route();

    Chain lambda = join(join(Chain::simplex({a2}), Chain::simplex({at1})),
                        u.base);
    Chain K = join(join(Chain::simplex({a1}), Chain::simplex({at2})), u.base) +
              join(join(Chain::simplex({at2}), Chain::simplex({at1})), u.base);
    Chain D = boundary(u.eta + lambda);
    Chain bK = boundary(K);
    int eps2;
    if (bK == D)
        eps2 = 1;
    else if (bK == -D)
        eps2 = -1;
    else
        return solver_route();

    Chain K_good, K_bad;
    for (const auto& [tau, c] : K.terms()) {
        if (leq(simplex_sum(C, tau), target))
            K_good.add(tau, c);
        else
            K_bad.add(tau, c);
    }

    // every bad term is <at1, at2> * (an edge touching coordinate 0); group
    // them per touching vertex and fill each group as a three-vertex axis UFO
    // at coordinate 0
    std::map<int, Chain> groups;
    for (const auto& [tau, c] : K_bad.terms()) {
        if (!simplex_has(tau, at1) || !simplex_has(tau, at2))
            return solver_route();
        int V = -1, other = -1;
        for (int v : tau) {
            if (v == at1 || v == at2) continue;
            if (C.points[v][0] > 0) {
                if (V >= 0) return solver_route();
                V = v;
            } else {
                other = v;
            }
        }
        if (V < 0 || other < 0) return solver_route();
        Simplex front = {at1, at2, V};
        std::sort(front.begin(), front.end());
        int sg = 0;
        join_simplex(front, {other}, sg);
        groups[V].add({other}, c * sg);
    }

    MultiDegree beta_up = shifted(shifted(u.beta, 0, 1), 0, 1);
    Chain K_rep = K_good;
    bool inner_solver = false;
    for (auto& [V, BV] : groups) {
        if (!is_cycle(BV)) return solver_route();
        Simplex front = {at1, at2, V};
        std::sort(front.begin(), front.end());
        UfoChain usub = make_ufo(u.cfg, beta_up, 0, front, BV);
        FillCertificate csub = fill_simple(usub, 1, 3);
        if (csub.route.find("solver") != std::string::npos) inner_solver = true;
        K_rep += csub.eta_tilde;
    }

    Chain out = K_rep * eps2 - lambda;
    return certify_fill(u.cfg, out, expected, target,
                        inner_solver ? "ufo24-case2+solver" : "ufo24-case2");
}

FillCertificate push_boundary(const ConfigPtr& cfg, const MultiDegree& beta,
                              const Chain& eta, int p) {
    const auto& C = *cfg;
    if (p != 2 && p != 3)
        throw std::invalid_argument("push_boundary: p must be 2 or 3");
    if (!C.is_segre() || C.blocks[0] < 2)
        throw std::invalid_argument(
            "push_boundary: needs a Segre configuration with first block >= 2");
    if (C.blocks[0] > 4)
        throw std::invalid_argument(
            "push_boundary: first block must have size <= 4");
    if (eta.zero() || eta.dim() != p)
        throw std::invalid_argument("push_boundary: chain dimension must be p");
    Int deg = checked_degree(C, beta, "push_boundary");
    if (deg < p + 2)
        throw std::invalid_argument("push_boundary: deg beta must be >= p + 2");
    if (beta[1] < 1)
        throw std::invalid_argument("push_boundary: beta must touch coordinate 1");
    if (!supported_on(box_delta(cfg, beta), eta))
        throw std::invalid_argument("push_boundary: chain leaves the box of beta");
    {
        MultiDegree down = beta;
        down[1] -= 1;
        if (!supported_on(box_delta(cfg, down), boundary(eta)))
            throw std::invalid_argument(
                "push_boundary: boundary does not fit under beta - e_1");
    }

    UfoDecomposition dec = decompose_ufos(cfg, beta, 1, eta);
    Chain total = dec.remainder;
    std::string routes;
    for (const auto& piece : dec.pieces) {
        FillCertificate cert =
            (p == 3 && piece.t() == 2) ? fill_ufo24(piece)
                                       : fill_simple(piece, 0, p);
        total += cert.eta_tilde;
        if (!routes.empty()) routes += ",";
        routes += cert.route;
    }
    MultiDegree target = shifted(beta, 0, 1);
    return certify_fill(cfg, total, boundary(eta), target,
                        "push[" + routes + "]");
}

RetractResult step2_retract(const ConfigPtr& cfg, const MultiDegree& b,
                            const Chain& gamma, int p) {
    const auto& C = *cfg;
    if (p != 2 && p != 3)
        throw std::invalid_argument("step2_retract: p must be 2 or 3");
    if (!C.is_segre() || C.blocks[0] < 2 || C.blocks[0] > 4)
        throw std::invalid_argument(
            "step2_retract: needs a Segre configuration with first block 2..4");
    if (gamma.zero() || gamma.dim() != p - 1 || !is_cycle(gamma))
        throw std::invalid_argument("step2_retract: need a (p-1)-cycle");
    Int deg = checked_degree(C, b, "step2_retract");
    if (deg < p + 2)
        throw std::invalid_argument("step2_retract: deg b must be >= p + 2");
    if (!supported_on(box_delta(cfg, b), gamma))
        throw std::invalid_argument("step2_retract: cycle leaves the box of b");

    auto eta0 = fill(gamma, union_x(cfg, b), p);
    if (!eta0)
        throw std::runtime_error(
            "step2_retract: the cycle does not bound inside the union complex "
            "of " +
            fmt_vec(b));
    Chain eta = *eta0;
    int slides = 0;
    for (Int guard = 0; guard <= b[0] + 1; ++guard) {
        Int K = 0;
        for (const auto& [tau, c] : eta.terms())
            K = std::max(K, simplex_sum(C, tau)[1] - b[1]);
        if (K <= 0) break;
        MultiDegree betaK = shifted(b, 1, 0, K);
        Chain nu;
        for (const auto& [tau, c] : eta.terms())
            if (simplex_sum(C, tau)[1] - b[1] == K) nu.add(tau, c);
        FillCertificate cert = push_boundary(cfg, betaK, nu, p);
        eta = eta - nu + cert.eta_tilde;
        ++slides;
        if (!(boundary(eta) == gamma))
            throw std::logic_error("step2_retract: boundary drifted");
    }
    RetractResult out;
    out.cert = certify_fill(cfg, eta, gamma, b, "retract");
    out.slides = slides;
    return out;
}

PushResult step1_push(const ConfigPtr& cfg, const MultiDegree& b,
                      const Chain& gamma, int p) {
    const auto& C = *cfg;
    if (p < 2) throw std::invalid_argument("step1_push: p must be >= 2");
    if (!C.is_segre() || C.blocks[0] < 2)
        throw std::invalid_argument(
            "step1_push: needs a Segre configuration with first block >= 2");
    if ((int)b.size() != C.k())
        throw std::invalid_argument("step1_push: b has the wrong length");
    for (Int x : b)
        if (x < 0) throw std::invalid_argument("step1_push: negative b");
    if (gamma.zero() || gamma.dim() != p - 1 || !is_cycle(gamma))
        throw std::invalid_argument("step1_push: need a (p-1)-cycle");
    ComplexSpec X = union_x(cfg, b);
    if (!supported_on(X, gamma))
        throw std::invalid_argument(
            "step1_push: cycle leaves the union complex of b");

    std::vector<int> bad;
    for (int v : chain_vertices(gamma))
        if (C.points[v][0] > 0) bad.push_back(v);

    PushResult out;
    Chain cur = gamma;
    Chain W(p);
    for (int a : bad) {
        Chain mu = link_cycle(a, cur);
        if (mu.zero()) continue;
        MultiDegree moved = shifted(C.points[a], 1, 0);
        int at = locate_point(C, moved);
        if (at < 0)
            throw std::logic_error("step1_push: moved point missing");
        Chain mu2;  // the part of mu clear of the moved vertex
        for (const auto& [s, c] : mu.terms())
            if (!simplex_has(s, at)) mu2.add(s, c);
        Chain nxt = cur - join(Chain::simplex({a}), mu);
        if (!mu2.zero()) nxt += join(Chain::simplex({at}), mu2);
        Chain M = cur - nxt;

        bool done = false;
        if (mu2 == mu) {
            // slice the link into per-level cycles and cone each level with
            // the vertex pair (a, moved)
            MultiDegree c0 = vsub(b, C.points[a]);
            Chain rem = mu;
            std::vector<std::pair<Int, Chain>> thetas;
            bool peeled = true;
            for (Int guard = 0; guard <= c0[0] + 1 && !rem.zero(); ++guard) {
                Int E = 0;
                for (const auto& [tau, c] : rem.terms())
                    E = std::max(E, simplex_sum(C, tau)[1] - c0[1]);
                if (E <= 0) {
                    thetas.emplace_back(0, rem);
                    rem = Chain();
                    break;
                }
                Chain nuE;
                for (const auto& [tau, c] : rem.terms())
                    if (simplex_sum(C, tau)[1] - c0[1] == E) nuE.add(tau, c);
                MultiDegree low = shifted(c0, 1, 0, E);
                low[1] -= 1;
                Chain bnu = nuE.dim() >= 0 ? boundary(nuE) : Chain();
                auto sp = fill(bnu, box_delta(cfg, low), p - 2);
                if (!sp) {
                    peeled = false;
                    break;
                }
                Chain theta = nuE - *sp;
                thetas.emplace_back(E, theta);
                rem -= theta;
            }
            if (peeled && rem.zero()) {
                Chain wstep(p);
                bool ok = true;
                Chain front = Chain::simplex({a}) - Chain::simplex({at});
                for (const auto& [eps, theta] : thetas) {
                    if (theta.zero()) continue;
                    MultiDegree slice = shifted(c0, 1, 0, eps);
                    auto rho = fill(theta, box_delta(cfg, slice), p - 1,
                                    {a, at});
                    if (!rho) {
                        ok = false;
                        break;
                    }
                    wstep -= join(front, *rho);
                }
                if (ok) {
                    if (!(boundary(wstep) == M))
                        throw std::logic_error(
                            "step1_push: level construction drifted");
                    W += wstep;
                    out.routes.push_back("levels");
                    done = true;
                }
            }
        }
        if (!done) {
            auto f = fill(M, X, p);
            if (!f)
                throw std::runtime_error(
                    "step1_push: the move at vertex " + std::to_string(a) +
                    " does not bound inside the union complex of " +
                    fmt_vec(b));
            W += *f;
            out.routes.push_back(mu2 == mu ? "levels-solver"
                                           : "collision-solver");
        }
        cur = nxt;
    }

    for (int v : chain_vertices(cur))
        if (C.points[v][0] > 0)
            throw std::logic_error("step1_push: a vertex survived on "
                                   "coordinate 0");
    MultiDegree flat = b;
    flat[1] += flat[0];
    flat[0] = 0;
    if (!supported_on(box_delta(cfg, flat), cur))
        throw std::logic_error("step1_push: result leaves the flat box");
    Chain diff = gamma - cur;
    Chain bW = W.zero() ? Chain() : boundary(W);
    if (!(bW == diff))
        throw std::logic_error("step1_push: witness boundary mismatch");
    if (!supported_on(X, W))
        throw std::logic_error("step1_push: witness leaves the union complex");
    out.gamma_prime = cur;
    out.witness = W;
    return out;
}

}  // namespace segsyz
