#include "segsyz/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace segsyz {

static void check_sorted(const Simplex& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i])
            throw std::invalid_argument("simplex vertices must be strictly increasing");
}

Chain Chain::simplex(const Simplex& s, const Rat& c) {
    check_sorted(s);
    Chain out((int)s.size() - 1);
    if (c != 0) out.terms_[s] = c;
    return out;
}

void Chain::add(const Simplex& s, const Rat& c) {
    if (c == 0) return;
    check_sorted(s);
    // an empty chain is the zero of every dimension, so it takes the
    // dimension of the first term added (even after cancelling to zero)
    if (terms_.empty()) dim_ = (int)s.size() - 1;
    if ((int)s.size() - 1 != dim_)
        throw std::invalid_argument("mixed-dimension chain");
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Chain::coeff(const Simplex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rat(0) : it->second;
}

Chain& Chain::operator+=(const Chain& o) {
    if (!o.zero() && !zero() && dim_ != o.dim_)
        throw std::invalid_argument("dimension mismatch in chain sum");
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    if (!o.zero() && !zero() && dim_ != o.dim_)
        throw std::invalid_argument("dimension mismatch in chain sum");
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    r += o;
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    r -= o;
    return r;
}

Chain Chain::operator-() const {
    Chain r(dim_);
    for (const auto& [s, c] : terms_) r.terms_[s] = -c;
    return r;
}

Chain Chain::operator*(const Rat& c) const {
    Chain r(dim_);
    if (c == 0) return r;
    for (const auto& [s, cc] : terms_) r.terms_[s] = cc * c;
    return r;
}

bool Chain::operator==(const Chain& o) const {
    if (zero() && o.zero()) return true;
    return dim_ == o.dim_ && terms_ == o.terms_;
}

Simplex join_simplex(const Simplex& a, const Simplex& b, int& sign) {
    Simplex out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            throw std::invalid_argument("join of simplexes sharing a vertex");
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += (long)(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = (inversions % 2 == 0) ? 1 : -1;
    return out;
}

Chain join(const Chain& a, const Chain& b) {
    if (a.zero() || b.zero()) {
        Chain r;
        if (!a.zero() || !b.zero())
            r = Chain(a.zero() ? b.dim() : a.dim());
        return r;
    }
    Chain out(a.dim() + b.dim() + 1);
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            int sign;
            Simplex s = join_simplex(sa, sb, sign);
            out.add(s, ca * cb * sign);
        }
    }
    return out;
}

Chain boundary(const Chain& c) {
    if (c.zero()) return Chain();
    if (c.dim() < 0)
        throw std::invalid_argument("boundary of a dim<0 chain");
    Chain out(c.dim() - 1);
    for (const auto& [s, coeff] : c.terms()) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (size_t i = 0; i < s.size(); ++i) {
            face.assign(s.begin(), s.end());
            face.erase(face.begin() + i);
            out.add(face, (i % 2 == 0) ? coeff : -coeff);
        }
    }
    return out;
}

bool is_cycle(const Chain& c) {
    if (c.zero()) return true;
    if (c.dim() < 0) return false;  // augmentation multiples are not cycles
    return boundary(c).zero();
}

Chain link_cycle(int a, const Chain& gamma) {
    if (!is_cycle(gamma))
        throw std::invalid_argument("link_cycle needs a cycle");
    Chain mu(gamma.zero() ? -2 : gamma.dim() - 1);
    for (const auto& [s, c] : gamma.terms()) {
        auto it = std::find(s.begin(), s.end(), a);
        if (it == s.end()) continue;
        int pos = (int)(it - s.begin());
        Simplex rest;
        rest.reserve(s.size() - 1);
        rest.assign(s.begin(), s.end());
        rest.erase(rest.begin() + pos);
        // s = <a> * rest up to the shuffle sign (-1)^pos
        mu.add(rest, (pos % 2 == 0) ? c : -c);
    }
    return mu;
}

Chain alpha(int a, int atilde, const Chain& gamma) {
    Chain mu = link_cycle(a, gamma);
    if (mu.zero()) return Chain();
    Chain front(0);
    front.add({a}, 1);
    front.add({atilde}, -1);
    return join(front, mu);
}

}  // namespace segsyz
