#include "segsyz/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segsyz {

static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((__uint128_t)a * b % p);
}

static std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t PrimeSource::next() {
    std::uniform_int_distribution<std::uint64_t> dist(1ull << 30,
                                                      (1ull << 31) - 1);
    for (;;) {
        std::uint64_t c = dist(rng_) | 1;
        if (is_prime_u64(c)) return c;
    }
}

// value of a rational mod p, or false when p divides the denominator
static bool rat_modp(const Rat& v, std::uint64_t p, std::uint64_t& out) {
    BigInt num = numerator(v) % (long long)p;
    if (num < 0) num += (long long)p;
    BigInt den = denominator(v) % (long long)p;
    if (den == 0) return false;
    std::uint64_t n = num.convert_to<std::uint64_t>();
    std::uint64_t d = den.convert_to<std::uint64_t>();
    out = mulmod(n, powmod(d, p - 2, p), p);
    return true;
}

// nullopt signals a prime dividing some denominator
static std::optional<int> rank_modp(const SparseMatrix& m, std::uint64_t p) {
    std::map<int, std::map<int, std::uint64_t>> pivots;  // leading col -> row
    int rank = 0;
    for (const auto& rowv : m.row_data) {
        std::map<int, std::uint64_t> row;
        for (const auto& [c, v] : rowv) {
            std::uint64_t mv;
            if (!rat_modp(v, p, mv)) return std::nullopt;
            if (mv) row[c] = mv;
        }
        while (!row.empty()) {
            int c = row.begin()->first;
            auto pit = pivots.find(c);
            if (pit == pivots.end()) {
                pivots.emplace(c, std::move(row));
                ++rank;
                break;
            }
            const auto& prow = pit->second;
            std::uint64_t f =
                mulmod(row.begin()->second, powmod(prow.begin()->second, p - 2, p), p);
            for (const auto& [cc, vv] : prow) {
                std::uint64_t sub = mulmod(f, vv, p);
                auto it = row.find(cc);
                std::uint64_t cur = (it == row.end()) ? 0 : it->second;
                std::uint64_t nv = (cur + p - sub) % p;
                if (nv == 0) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[cc] = nv;
                }
            }
        }
    }
    return rank;
}

int rank_exact(const SparseMatrix& m) {
    std::map<int, std::map<int, Rat>> pivots;
    int rank = 0;
    for (const auto& rowv : m.row_data) {
        std::map<int, Rat> row(rowv.begin(), rowv.end());
        for (auto it = row.begin(); it != row.end();)
            it = (it->second == 0) ? row.erase(it) : std::next(it);
        while (!row.empty()) {
            int c = row.begin()->first;
            auto pit = pivots.find(c);
            if (pit == pivots.end()) {
                pivots.emplace(c, std::move(row));
                ++rank;
                break;
            }
            const auto& prow = pit->second;
            Rat f = row.begin()->second / prow.begin()->second;
            for (const auto& [cc, vv] : prow) {
                auto it = row.find(cc);
                if (it == row.end()) {
                    Rat nv = -f * vv;
                    if (nv != 0) row[cc] = nv;
                } else {
                    it->second -= f * vv;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
    }
    return rank;
}

int rank(const SparseMatrix& m, PrimeSource& primes, RankStats* stats) {
    if (m.rows == 0 || m.cols == 0) {
        if (stats) *stats = RankStats{};
        return 0;
    }
    RankStats st;
    std::optional<int> r1, r2;
    while (!r1) {
        st.prime1 = primes.next();
        r1 = rank_modp(m, st.prime1);
    }
    do {
        st.prime2 = primes.next();
    } while (st.prime2 == st.prime1);
    r2 = rank_modp(m, st.prime2);
    int result;
    if (r2 && *r1 == *r2) {
        result = *r1;
    } else {
        st.exact_fallback = true;
        result = rank_exact(m);
    }
    if (stats) *stats = st;
    return result;
}

std::optional<std::vector<std::pair<int, Rat>>> solve_exact(
    const SparseMatrix& a, const std::vector<Rat>& rhs,
    const std::vector<char>* forbidden_cols) {
    if ((int)rhs.size() != a.rows)
        throw std::invalid_argument("rhs length mismatch");
    const int RHS = a.cols;  // augmented column index
    std::map<int, std::map<int, Rat>> pivots;
    for (int r = 0; r < a.rows; ++r) {
        std::map<int, Rat> row;
        for (const auto& [c, v] : a.row_data[r]) {
            if (forbidden_cols && (*forbidden_cols)[c]) continue;
            if (v != 0) row[c] = v;
        }
        if (rhs[r] != 0) row[RHS] = rhs[r];
        while (!row.empty()) {
            int c = row.begin()->first;
            if (c == RHS) return std::nullopt;  // 0 = nonzero: inconsistent
            auto pit = pivots.find(c);
            if (pit == pivots.end()) {
                pivots.emplace(c, std::move(row));
                break;
            }
            const auto& prow = pit->second;
            Rat f = row.begin()->second / prow.begin()->second;
            for (const auto& [cc, vv] : prow) {
                auto it = row.find(cc);
                if (it == row.end()) {
                    Rat nv = -f * vv;
                    if (nv != 0) row[cc] = nv;
                } else {
                    it->second -= f * vv;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
    }
    // back-substitution, free variables set to zero
    std::map<int, Rat> x;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& row = it->second;
        Rat acc = 0;
        auto rit = row.find(RHS);
        if (rit != row.end()) acc = rit->second;
        for (const auto& [c, v] : row) {
            if (c == it->first || c == RHS) continue;
            auto xit = x.find(c);
            if (xit != x.end()) acc -= v * xit->second;
        }
        Rat val = acc / row.begin()->second;
        if (val != 0) x[it->first] = val;
    }
    return std::vector<std::pair<int, Rat>>(x.begin(), x.end());
}

std::vector<std::vector<std::pair<int, Rat>>> kernel_basis_exact(
    const SparseMatrix& m) {
    std::map<int, std::map<int, Rat>> pivots;
    for (const auto& rowv : m.row_data) {
        std::map<int, Rat> row(rowv.begin(), rowv.end());
        for (auto it = row.begin(); it != row.end();)
            it = (it->second == 0) ? row.erase(it) : std::next(it);
        while (!row.empty()) {
            int c = row.begin()->first;
            auto pit = pivots.find(c);
            if (pit == pivots.end()) {
                pivots.emplace(c, std::move(row));
                break;
            }
            const auto& prow = pit->second;
            Rat f = row.begin()->second / prow.begin()->second;
            for (const auto& [cc, vv] : prow) {
                auto it = row.find(cc);
                if (it == row.end()) {
                    Rat nv = -f * vv;
                    if (nv != 0) row[cc] = nv;
                } else {
                    it->second -= f * vv;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
    }
    // one basis vector per free column: set it to 1, back-substitute the rest
    std::vector<std::vector<std::pair<int, Rat>>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (pivots.count(f)) continue;
        std::map<int, Rat> x;
        x[f] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const auto& row = it->second;
            Rat acc = 0;
            for (const auto& [c, v] : row) {
                if (c == it->first) continue;
                auto xit = x.find(c);
                if (xit != x.end()) acc -= v * xit->second;
            }
            Rat val = acc / row.begin()->second;
            if (val != 0) x[it->first] = val;
        }
        basis.emplace_back(x.begin(), x.end());
    }
    return basis;
}

}  // namespace segsyz
