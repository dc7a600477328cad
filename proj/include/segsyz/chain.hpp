#pragma once

#include <map>
#include <vector>

#include "segsyz/rational.hpp"

namespace segsyz {

// Vertices are point indices into a configuration; a simplex is a strictly
// increasing tuple of them. The empty tuple is the augmentation simplex of
// dimension -1.
using Simplex = std::vector<int>;

// Formal rational combination of simplexes of one dimension.
//
// Sign conventions used throughout (the source material leaves them open, so
// one fixed choice is used everywhere):
//   boundary:  d<v_0..v_j> = sum_i (-1)^i <..v^_i..>,  d<v> = <>   (reduced)
//   join:      sorted-merge with the shuffle sign, i.e. (-1)^#inversions
//              between the two sorted tuples
// These satisfy d(x*y) = dx*y + (-1)^(dim x + 1) x*dy, in particular
// d(a*c) = c - a*dc for a vertex a.
class Chain {
  public:
    Chain() : dim_(-2) {}  // zero chain of indeterminate dimension
    explicit Chain(int dim) : dim_(dim) {}

    static Chain simplex(const Simplex& s, const Rat& c = 1);

    int dim() const { return dim_; }
    bool zero() const { return terms_.empty(); }
    const std::map<Simplex, Rat>& terms() const { return terms_; }

    // adds c * s, erasing the term if the coefficient cancels
    void add(const Simplex& s, const Rat& c);
    Rat coeff(const Simplex& s) const;

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator-() const;
    Chain operator*(const Rat& c) const;
    bool operator==(const Chain& o) const;

  private:
    int dim_;
    std::map<Simplex, Rat> terms_;
};

// join of disjoint sorted simplexes; sign as documented above.
// Throws if the vertex sets intersect.
Simplex join_simplex(const Simplex& a, const Simplex& b, int& sign);
Chain join(const Chain& a, const Chain& b);

// reduced boundary; defined for dim >= 0
Chain boundary(const Chain& c);

bool is_cycle(const Chain& c);

// The link cycle mu_{a,gamma}: the unique chain with
// <a> * mu = (sum of the terms of gamma containing a).
// gamma must be a cycle; then mu is a cycle too.
Chain link_cycle(int a, const Chain& gamma);

// (<a> - <atilde>) * mu_{a,gamma}
Chain alpha(int a, int atilde, const Chain& gamma);

}  // namespace segsyz
