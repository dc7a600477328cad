#include "segsyz/cache.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace segsyz {

RankCache::RankCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    load();
}

std::string RankCache::path() const {
    if (dir_.empty()) return {};
    return (std::filesystem::path(dir_) / "ranks.jsonl").string();
}

void RankCache::load() {
    std::ifstream in(path());
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        bool ok = !j.is_discarded() && j.is_object() && j.contains("d") && j.contains("t") &&
                  j.contains("j") && j.contains("b") && j.contains("rank") &&
                  j["d"].is_string() && j["t"].is_number_integer() && j["j"].is_number_integer() &&
                  j["b"].is_array() && j["rank"].is_number_integer();
        if (!ok) {
            std::cerr << "cache: skipping corrupt line " << lineno << " in " << path() << "\n";
            continue;
        }
        Key k{j["d"].get<std::string>(), j["t"].get<Int>(), j["j"].get<int>(),
              j["b"].get<MultiDegree>()};
        entries_[k] = j["rank"].get<long>();
    }
}

std::optional<long> RankCache::get(const std::string& descriptor, Int t, int j,
                                   const MultiDegree& b) {
    if (dir_.empty()) return std::nullopt;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(Key{descriptor, t, j, b});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void RankCache::put(const std::string& descriptor, Int t, int j, const MultiDegree& b,
                    long rank_value, const std::vector<RankStats>& stats) {
    if (dir_.empty()) return;
    if (rank_value < 1) return; // zeros are recomputed, not stored
    std::lock_guard<std::mutex> lock(mu_);
    Key k{descriptor, t, j, b};
    auto it = entries_.find(k);
    if (it != entries_.end()) return; // idempotent, first write wins
    entries_[k] = rank_value;
    nlohmann::json out;
    out["d"] = descriptor;
    out["t"] = t;
    out["j"] = j;
    out["b"] = b;
    out["rank"] = rank_value;
    std::vector<std::uint64_t> primes;
    bool exact = false;
    for (const auto& s : stats) {
        if (s.prime1) primes.push_back(s.prime1);
        if (s.prime2) primes.push_back(s.prime2);
        exact = exact || s.exact_fallback;
    }
    if (!primes.empty()) {
        out["primes"] = primes;
        out["exact"] = exact;
    }
    std::ofstream f(path(), std::ios::app);
    f << out.dump() << "\n";
}

long RankCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return (long)entries_.size();
}

void RankCache::clear() {
    if (dir_.empty()) return;
    std::lock_guard<std::mutex> lock(mu_);
    entries_.clear();
    std::error_code ec;
    std::filesystem::remove(path(), ec);
}

} // namespace segsyz
