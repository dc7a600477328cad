#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "segsyz/config.hpp"
#include "segsyz/matrix.hpp"

namespace segsyz {

// Persistent store of computed ranks, keyed by (descriptor, t, j, b).
// On disk: one JSON object per line in <dir>/ranks.jsonl, together with which
// primes produced the rank and whether the exact fallback ran. Only nonzero
// ranks are stored; a miss means "not computed yet", never "zero". Puts are
// idempotent; corrupt lines are skipped with a warning on stderr.
class RankCache {
  public:
    // empty dir = disabled cache (all gets miss, puts are dropped)
    explicit RankCache(std::string dir);

    bool enabled() const { return !dir_.empty(); }
    std::optional<long> get(const std::string& descriptor, Int t, int j,
                            const MultiDegree& b);
    void put(const std::string& descriptor, Int t, int j, const MultiDegree& b,
             long rank_value, const std::vector<RankStats>& stats = {});
    long size() const;
    void clear();
    std::string path() const;

  private:
    using Key = std::tuple<std::string, Int, int, MultiDegree>;
    std::string dir_;
    std::map<Key, long> entries_;
    mutable std::mutex mu_;
    void load();
};

}  // namespace segsyz
