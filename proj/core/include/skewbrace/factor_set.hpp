#pragma once

#include "skewbrace/brace.hpp"

#include <optional>
#include <string>

namespace skb {

// Brace factor set (2-cocycle) with values in Z/m, written additively: a pair
// of n x n tables with zero borders satisfying
//   FS3: a(y,z) - a(x+y,z) + a(x,y+z) - a(x,y) = 0
//   FS4: u(y,z) - u(x∘y,z) + u(x,y∘z) - u(x,y) = 0
//   FS5: a(y,z) - a(x∘y,λ_x(z)) + a(x,λ_x(z)) = u(x,y) - u(x,y+z) + u(x,z)
struct BraceFactorSet {
    BraceRef brace;
    i64 modulus = 1;
    std::vector<i64> alpha, mu; // row-major n x n

    int n() const { return brace->n(); }
    i64 a(int x, int y) const { return alpha[static_cast<size_t>(x) * n() + y]; }
    i64 u(int x, int y) const { return mu[static_cast<size_t>(x) * n() + y]; }
    i64& a(int x, int y) { return alpha[static_cast<size_t>(x) * n() + y]; }
    i64& u(int x, int y) { return mu[static_cast<size_t>(x) * n() + y]; }

    struct Violation {
        std::string condition; // "FS1".."FS5"
        int x, y, z;
    };
    std::optional<Violation> validate() const;
    void require_valid() const; // throws validation_error("InvalidCocycle")

    BraceFactorSet operator+(const BraceFactorSet& o) const;
    BraceFactorSet operator-(const BraceFactorSet& o) const;
    BraceFactorSet scaled(i64 c) const;
};

BraceFactorSet zero_factor_set(BraceRef Q, i64 m);
// The pair (∂₊h, ∂∘h) for h indexed by elements of Q with h[0] = 0.
BraceFactorSet coboundary_pair(BraceRef Q, i64 m, const ivec& h);

// Group 2-cocycle with values in Z/m: zero borders and
// f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0.
struct GroupFactorSet {
    GroupTable group;
    i64 modulus = 1;
    std::vector<i64> f;

    int n() const { return group.n; }
    i64 at(int x, int y) const { return f[static_cast<size_t>(x) * n() + y]; }
    i64& at(int x, int y) { return f[static_cast<size_t>(x) * n() + y]; }

    std::optional<BraceFactorSet::Violation> validate() const;
    void require_valid() const;
};

GroupFactorSet group_coboundary(GroupTable g, i64 m, const ivec& h);

} // namespace skb
