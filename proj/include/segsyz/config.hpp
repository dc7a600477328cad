#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "segsyz/rational.hpp"

namespace segsyz {

using Int = std::int64_t;
using MultiDegree = std::vector<Int>;

// A finite point configuration A = {a_1,...,a_m} in N^k together with a
// grading vector omega satisfying omega . a_i = 1 for every point.
// For Segre configurations the coordinates split into d blocks of sizes
// n_i + 1; each point is a concatenation of one unit vector per block and
// omega = (1/d,...,1/d).
struct PointConfiguration {
    std::vector<MultiDegree> points;
    std::vector<Rat> omega;
    // block sizes (n_i + 1) when the configuration is a Segre product,
    // empty otherwise
    std::vector<int> blocks;
    std::string descriptor;

    int k() const { return points.empty() ? 0 : (int)points[0].size(); }
    int m() const { return (int)points.size(); }
    bool is_segre() const { return !blocks.empty(); }
    // block index of a coordinate (Segre only)
    int block_of(int coord) const;
    // offset of the first coordinate of a block
    int block_offset(int blk) const;
};

using ConfigPtr = std::shared_ptr<const PointConfiguration>;

struct SegreParams {
    std::vector<int> dims;  // n_1,...,n_d, each >= 1
};

ConfigPtr build_segre(const SegreParams& params);
// points = exponent vectors of degree a in n+1 variables, omega = (1/a,...)
ConfigPtr build_veronese(int n, int a);

// "segre:1,1,1" or "veronese:2,3"
ConfigPtr parse_descriptor(const std::string& descriptor);

// b . omega
Rat degree(const PointConfiguration& cfg, const MultiDegree& b);
// b . omega, which must be a nonnegative integer
Int degree_int(const PointConfiguration& cfg, const MultiDegree& b);

// whether b lies in the monoid N.A generated by the points
bool is_in_monoid(const PointConfiguration& cfg, const MultiDegree& b);

// all b in N.A of degree t, lexicographically ordered
std::vector<MultiDegree> enumerate_multidegrees(const PointConfiguration& cfg,
                                                Int t);

// replace each n_i by min(n_i, p); Segre only
SegreParams cap_dimensions(const SegreParams& params, int p);

}  // namespace segsyz
