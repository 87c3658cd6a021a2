#include "skewbrace/factor_set.hpp"
#include "skewbrace/errors.hpp"

namespace skb {

using detail::mod_reduce;

std::optional<BraceFactorSet::Violation> BraceFactorSet::validate() const {
    const SkewBrace& Q = *brace;
    int nn = n();
    if (static_cast<int>(alpha.size()) != nn * nn || static_cast<int>(mu.size()) != nn * nn)
        return Violation{"FS1", -1, -1, -1};
    i64 m = modulus;
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y) {
            if (a(x, y) < 0 || a(x, y) >= m || u(x, y) < 0 || u(x, y) >= m)
                return Violation{"FS1", x, y, -1};
        }
    for (int x = 0; x < nn; ++x) {
        if (a(0, x) != 0 || a(x, 0) != 0) return Violation{"FS1", x, -1, -1};
        if (u(0, x) != 0 || u(x, 0) != 0) return Violation{"FS2", x, -1, -1};
    }
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y)
            for (int z = 0; z < nn; ++z) {
                if (mod_reduce(a(y, z) - a(Q.add.op(x, y), z) + a(x, Q.add.op(y, z)) -
                                   a(x, y),
                               m) != 0)
                    return Violation{"FS3", x, y, z};
                if (mod_reduce(u(y, z) - u(Q.circ.op(x, y), z) + u(x, Q.circ.op(y, z)) -
                                   u(x, y),
                               m) != 0)
                    return Violation{"FS4", x, y, z};
                int lz = Q.lambda(x, z);
                if (mod_reduce(a(y, z) - a(Q.circ.op(x, y), lz) + a(x, lz) - u(x, y) +
                                   u(x, Q.add.op(y, z)) - u(x, z),
                               m) != 0)
                    return Violation{"FS5", x, y, z};
            }
    return std::nullopt;
}

void BraceFactorSet::require_valid() const {
    if (auto v = validate())
        throw validation_error("InvalidCocycle",
                               "factor set violates " + v->condition, {v->x, v->y, v->z});
}

BraceFactorSet BraceFactorSet::operator+(const BraceFactorSet& o) const {
    BraceFactorSet r = *this;
    for (size_t i = 0; i < alpha.size(); ++i) {
        r.alpha[i] = mod_reduce(alpha[i] + o.alpha[i], modulus);
        r.mu[i] = mod_reduce(mu[i] + o.mu[i], modulus);
    }
    return r;
}

BraceFactorSet BraceFactorSet::operator-(const BraceFactorSet& o) const {
    BraceFactorSet r = *this;
    for (size_t i = 0; i < alpha.size(); ++i) {
        r.alpha[i] = mod_reduce(alpha[i] - o.alpha[i], modulus);
        r.mu[i] = mod_reduce(mu[i] - o.mu[i], modulus);
    }
    return r;
}

BraceFactorSet BraceFactorSet::scaled(i64 c) const {
    BraceFactorSet r = *this;
    for (size_t i = 0; i < alpha.size(); ++i) {
        r.alpha[i] = mod_reduce(alpha[i] * c, modulus);
        r.mu[i] = mod_reduce(mu[i] * c, modulus);
    }
    return r;
}

BraceFactorSet zero_factor_set(BraceRef Q, i64 m) {
    BraceFactorSet fs;
    fs.modulus = m;
    int n = Q->n();
    fs.brace = std::move(Q);
    fs.alpha.assign(static_cast<size_t>(n) * n, 0);
    fs.mu.assign(static_cast<size_t>(n) * n, 0);
    return fs;
}

BraceFactorSet coboundary_pair(BraceRef Q, i64 m, const ivec& h) {
    const SkewBrace& q = *Q;
    BraceFactorSet fs = zero_factor_set(Q, m);
    int n = q.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            fs.a(x, y) = mod_reduce(h[y] - h[q.add.op(x, y)] + h[x], m);
            fs.u(x, y) = mod_reduce(h[y] - h[q.circ.op(x, y)] + h[x], m);
        }
    return fs;
}

std::optional<BraceFactorSet::Violation> GroupFactorSet::validate() const {
    int nn = n();
    if (static_cast<int>(f.size()) != nn * nn)
        return BraceFactorSet::Violation{"FS1", -1, -1, -1};
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y)
            if (at(x, y) < 0 || at(x, y) >= modulus)
                return BraceFactorSet::Violation{"FS1", x, y, -1};
    for (int x = 0; x < nn; ++x)
        if (at(0, x) != 0 || at(x, 0) != 0)
            return BraceFactorSet::Violation{"FS1", x, -1, -1};
    for (int x = 0; x < nn; ++x)
        for (int y = 0; y < nn; ++y)
            for (int z = 0; z < nn; ++z)
                if (mod_reduce(at(y, z) - at(group.op(x, y), z) + at(x, group.op(y, z)) -
                                   at(x, y),
                               modulus) != 0)
                    return BraceFactorSet::Violation{"FS3", x, y, z};
    return std::nullopt;
}

void GroupFactorSet::require_valid() const {
    if (auto v = validate())
        throw validation_error("InvalidCocycle",
                               "group factor set violates " + v->condition,
                               {v->x, v->y, v->z});
}

GroupFactorSet group_coboundary(GroupTable g, i64 m, const ivec& h) {
    GroupFactorSet fs;
    fs.modulus = m;
    int n = g.n;
    fs.f.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            fs.f[static_cast<size_t>(x) * n + y] = mod_reduce(h[y] - h[g.op(x, y)] + h[x], m);
    fs.group = std::move(g);
    return fs;
}

} // namespace skb
