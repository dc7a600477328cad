#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "segsyz/rational.hpp"

namespace segsyz {

// Rows stored sparse as (column, value), columns strictly increasing.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Rat>>> row_data;

    void init(int r, int c) {
        rows = r;
        cols = c;
        row_data.assign(r, {});
    }
    long nnz() const {
        long n = 0;
        for (const auto& r : row_data) n += (long)r.size();
        return n;
    }
};

struct RankOptions {
    std::uint64_t seed = 0x5eed5eedULL;  // fixed default: deterministic runs
};

struct RankStats {
    std::uint64_t prime1 = 0;
    std::uint64_t prime2 = 0;
    bool exact_fallback = false;
};

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(std::uint64_t n);

// Draws random primes in [2^30, 2^31) from a seeded generator.
class PrimeSource {
  public:
    explicit PrimeSource(std::uint64_t seed) : rng_(seed) {}
    std::uint64_t next();

  private:
    std::mt19937_64 rng_;
};

// Rank by elimination at two independent random primes; on disagreement (or a
// prime dividing a denominator) falls back to exact rational elimination.
int rank(const SparseMatrix& m, PrimeSource& primes, RankStats* stats = nullptr);

int rank_exact(const SparseMatrix& m);

// Exact solve A x = rhs; returns a solution (sparse, as (row-index of x, value))
// or nullopt when the system is inconsistent (certified: the elimination
// compares rank(A) with rank([A | rhs])).
// forbidden_cols restricts the support of the solution away from those columns.
std::optional<std::vector<std::pair<int, Rat>>> solve_exact(
    const SparseMatrix& a, const std::vector<Rat>& rhs,
    const std::vector<char>* forbidden_cols = nullptr);

// Exact basis of ker(m), one sparse column vector per free column of the
// reduced echelon form.
std::vector<std::vector<std::pair<int, Rat>>> kernel_basis_exact(
    const SparseMatrix& m);

}  // namespace segsyz
