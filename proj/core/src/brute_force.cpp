#include "skewbrace/brute_force.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/factor_set.hpp"
#include "skewbrace/group_table.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skb::oracle {

using detail::mod_reduce;

namespace {

bool satisfies_conditions(const SkewBrace& Q, i64 m, const std::vector<i64>& a,
                          const std::vector<i64>& u) {
    int n = Q.n();
    auto A = [&](int x, int y) { return a[static_cast<size_t>(x) * n + y]; };
    auto U = [&](int x, int y) { return u[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (mod_reduce(A(y, z) - A(Q.add.op(x, y), z) + A(x, Q.add.op(y, z)) -
                                   A(x, y),
                               m) != 0)
                    return false;
                if (mod_reduce(U(y, z) - U(Q.circ.op(x, y), z) + U(x, Q.circ.op(y, z)) -
                                   U(x, y),
                               m) != 0)
                    return false;
                int lz = Q.lambda(x, z);
                if (mod_reduce(A(y, z) - A(Q.circ.op(x, y), lz) + A(x, lz) - U(x, y) +
                                   U(x, Q.add.op(y, z)) - U(x, z),
                               m) != 0)
                    return false;
            }
    return true;
}

} // namespace

BruteH2 brute_force_h2b(const BraceRef& Q, i64 m) {
    int n = Q->n();
    if (n > 4) throw too_large_error("brute-force oracle is limited to order <= 4");
    int cells = 2 * (n - 1) * (n - 1);
    bigint states = 1;
    for (int i = 0; i < cells; ++i) states *= m;
    if (states > (1 << 24)) throw too_large_error("brute-force oracle state space too large");

    BruteH2 out;
    if (m == 1 || cells == 0) return out;

    // all factor sets, packed as interior-alpha followed by interior-mu
    auto unpack = [&](const ivec& v, std::vector<i64>& a, std::vector<i64>& u) {
        a.assign(static_cast<size_t>(n) * n, 0);
        u.assign(static_cast<size_t>(n) * n, 0);
        int pos = 0;
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y) a[static_cast<size_t>(x) * n + y] = v[pos++];
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y) u[static_cast<size_t>(x) * n + y] = v[pos++];
    };

    std::set<ivec> cocycles;
    {
        ivec v(cells, 0);
        std::vector<i64> a, u;
        for (;;) {
            unpack(v, a, u);
            if (satisfies_conditions(*Q, m, a, u)) cocycles.insert(v);
            int i = cells - 1;
            while (i >= 0 && ++v[i] == m) v[i--] = 0;
            if (i < 0) break;
        }
    }
    out.z_order = cocycles.size();

    std::set<ivec> coboundaries;
    {
        ivec h(n, 0);
        for (;;) {
            ivec v(cells);
            int pos = 0;
            for (int x = 1; x < n; ++x)
                for (int y = 1; y < n; ++y)
                    v[pos++] = mod_reduce(h[y] - h[Q->add.op(x, y)] + h[x], m);
            for (int x = 1; x < n; ++x)
                for (int y = 1; y < n; ++y)
                    v[pos++] = mod_reduce(h[y] - h[Q->circ.op(x, y)] + h[x], m);
            coboundaries.insert(v);
            int i = n - 1;
            while (i >= 1 && ++h[i] == m) h[i--] = 0;
            if (i < 1) break;
        }
    }
    out.b_order = coboundaries.size();
    for (const auto& b : coboundaries)
        if (!cocycles.count(b))
            throw inconsistency_error("a coboundary fails the factor-set conditions");

    // cosets of the coboundaries: canonical form = lexicographically smallest
    // member of v + B
    auto canon = [&](const ivec& v) {
        ivec best;
        for (const auto& b : coboundaries) {
            ivec w(cells);
            for (int i = 0; i < cells; ++i) w[i] = (v[i] + b[i]) % m;
            if (best.empty() || w < best) best = w;
        }
        return best;
    };
    std::map<ivec, int> coset_index;
    std::vector<ivec> reps;
    for (const auto& v : cocycles) {
        ivec c = canon(v);
        if (!coset_index.count(c)) {
            coset_index[c] = static_cast<int>(reps.size());
            reps.push_back(c);
        }
    }
    out.h_order = reps.size();

    // the quotient as an abelian Cayley table; identity must be index 0
    int hn = static_cast<int>(reps.size());
    std::swap(reps[0], reps[coset_index[canon(ivec(cells, 0))]]);
    coset_index.clear();
    for (int i = 0; i < hn; ++i) coset_index[reps[i]] = i;
    std::vector<int> tab(static_cast<size_t>(hn) * hn);
    for (int i = 0; i < hn; ++i)
        for (int j = 0; j < hn; ++j) {
            ivec s(cells);
            for (int t = 0; t < cells; ++t) s[t] = (reps[i][t] + reps[j][t]) % m;
            tab[static_cast<size_t>(i) * hn + j] = coset_index.at(canon(s));
        }
    GroupTable g = validate_group(hn, tab, "oracle quotient");
    out.invariant_factors = abelian_structure(g).group.factors;
    return out;
}

} // namespace skb::oracle
