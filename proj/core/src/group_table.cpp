#include "skewbrace/group_table.hpp"
#include "skewbrace/errors.hpp"

#include <algorithm>
#include <numeric>

namespace skb {

using detail::lcm_i64;
using detail::mod_reduce;

int GroupTable::power(int a, i64 e) const {
    int r = 0;
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    for (i64 i = 0; i < e; ++i) r = op(r, a);
    return r;
}

int GroupTable::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = op(x, a);
        ++k;
    }
    return k;
}

bool GroupTable::abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

GroupTable GroupTable::opposite() const {
    GroupTable g;
    g.n = n;
    g.tab.resize(tab.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.tab[static_cast<size_t>(a) * n + b] = op(b, a);
    g.inv = inv;
    return g;
}

GroupTable validate_group(int n, const std::vector<int>& table, const std::string& which) {
    if (n < 1) throw validation_error("NotAGroup", which + ": empty table");
    if (n > kMaxOrder)
        throw too_large_error("group order " + std::to_string(n) + " exceeds " +
                              std::to_string(kMaxOrder));
    if (static_cast<int>(table.size()) != n * n)
        throw validation_error("NotAGroup", which + ": table size is not n*n");
    for (int v : table)
        if (v < 0 || v >= n)
            throw validation_error("NotAGroup", which + ": entry out of range");
    for (int a = 0; a < n; ++a) {
        if (table[static_cast<size_t>(0) * n + a] != a || table[static_cast<size_t>(a) * n + 0] != a)
            throw validation_error("IdentityMismatch",
                                   which + ": element 0 is not a two-sided identity",
                                   {a, -1, -1});
    }
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = table[static_cast<size_t>(a) * n + b];
            if (seen[v])
                throw validation_error("NotAGroup", which + ": row is not a permutation",
                                       {a, b, -1});
            seen[v] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = table[static_cast<size_t>(b) * n + a];
            if (seen[v])
                throw validation_error("NotAGroup", which + ": column is not a permutation",
                                       {b, a, -1});
            seen[v] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = table[static_cast<size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                if (table[static_cast<size_t>(ab) * n + c] !=
                    table[static_cast<size_t>(a) * n + table[static_cast<size_t>(b) * n + c]])
                    throw validation_error("NotAGroup", which + ": associativity fails",
                                           {a, b, c});
            }
        }
    GroupTable g;
    g.n = n;
    g.tab.resize(table.size());
    for (size_t i = 0; i < table.size(); ++i) g.tab[i] = static_cast<std::uint8_t>(table[i]);
    g.inv.resize(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.op(a, b) == 0) {
                g.inv[a] = static_cast<std::uint8_t>(b);
                break;
            }
    return g;
}

GroupTable cyclic_group(int n) {
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return validate_group(n, t, "cyclic");
}

GroupTable klein_group() {
    std::vector<int> t(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[static_cast<size_t>(a) * 4 + b] = a ^ b;
    return validate_group(4, t, "klein");
}

GroupTable symmetric3_group() {
    // permutations of {0,1,2} in lexicographic order of their images;
    // composition (p*q)(x) = p(q(x))
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int* im) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == im[0] && perms[i][1] == im[1] && perms[i][2] == im[2]) return i;
        return -1;
    };
    std::vector<int> t(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int im[3];
            for (int x = 0; x < 3; ++x) im[x] = perms[a][perms[b][x]];
            t[static_cast<size_t>(a) * 6 + b] = find(im);
        }
    return validate_group(6, t, "s3");
}

GroupTable quaternion_group() {
    // 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
    auto neg = [](int x) { return x ^ 1; };
    auto mul = [&](int a, int b) -> int {
        if (a < 2) return a == 0 ? b : neg(b);
        if (b < 2) return b == 0 ? a : neg(a);
        int ua = a >> 1, ub = b >> 1; // 1=i, 2=j, 3=k
        int sign = (a & 1) ^ (b & 1);
        if (ua == ub) return sign ? 0 : 1; // i*i = -1
        // i*j=k, j*k=i, k*i=j; reversed order flips the sign
        int uc = 6 - ua - ub;
        bool cyclic = (ub - ua + 3) % 3 == 1;
        if (!cyclic) sign ^= 1;
        return (uc << 1) | sign;
    };
    std::vector<int> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[static_cast<size_t>(a) * 8 + b] = mul(a, b);
    return validate_group(8, t, "quaternion");
}

GroupTable dihedral_group(int order) {
    if (order < 2 || order % 2 != 0)
        throw validation_error("InvalidParameters", "dihedral order must be even and >= 2");
    int n = order / 2;
    // element (a, b) = r^a s^b with index a + n*b; s r = r^{-1} s
    auto idx = [&](int a, int b) { return a + n * b; };
    std::vector<int> t(static_cast<size_t>(order) * order);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    int ra = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
                    t[static_cast<size_t>(idx(a, b)) * order + idx(c, d)] = idx(ra, b ^ d);
                }
    return validate_group(order, t, "dihedral");
}

std::vector<int> group_center(const GroupTable& g) {
    std::vector<int> z;
    for (int a = 0; a < g.n; ++a) {
        bool central = true;
        for (int b = 0; b < g.n && central; ++b)
            if (g.op(a, b) != g.op(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> subgroup_closure(const GroupTable& g, std::vector<int> seeds) {
    std::vector<char> in(g.n, 0);
    in[0] = 1;
    std::vector<int> queue{0};
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int s : seeds) {
            int y = g.op(x, s);
            if (!in[y]) {
                in[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> out;
    for (int a = 0; a < g.n; ++a)
        if (in[a]) out.push_back(a);
    return out;
}

std::vector<int> group_commutator_subgroup(const GroupTable& g) {
    std::vector<int> comms;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            comms.push_back(g.op(g.op(g.op(a, b), g.inverse(a)), g.inverse(b)));
    return subgroup_closure(g, std::move(comms));
}

bool is_cyclic_group(const GroupTable& g) {
    for (int a = 0; a < g.n; ++a)
        if (g.element_order(a) == g.n) return true;
    return false;
}

GroupTable quotient_group(const GroupTable& g, const std::vector<int>& normal_sub,
                          std::vector<int>* coset_of_out) {
    std::vector<char> in(g.n, 0);
    for (int x : normal_sub) in[x] = 1;
    if (!in[0]) throw inconsistency_error("quotient_group: subgroup misses identity");
    for (int x : normal_sub)
        for (int y : normal_sub)
            if (!in[g.op(x, y)]) throw inconsistency_error("quotient_group: not a subgroup");
    for (int a = 0; a < g.n; ++a)
        for (int x : normal_sub)
            if (!in[g.op(g.op(a, x), g.inverse(a))])
                throw inconsistency_error("quotient_group: subgroup not normal");
    std::vector<int> coset_of(g.n, -1), reps;
    for (int x = 0; x < g.n; ++x) {
        if (coset_of[x] != -1) continue;
        int q = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int i : normal_sub) coset_of[g.op(x, i)] = q;
    }
    int m = static_cast<int>(reps.size());
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t[static_cast<size_t>(i) * m + j] = coset_of[g.op(reps[i], reps[j])];
    GroupTable q = validate_group(m, t, "quotient");
    if (coset_of_out) *coset_of_out = std::move(coset_of);
    return q;
}

AbelianStructure abelian_structure(const GroupTable& g) {
    if (!g.abelian())
        throw validation_error("InvalidParameters", "abelian_structure needs an abelian table");
    // greedy generators, largest element order first
    std::vector<int> by_order(g.n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::vector<int> ord(g.n);
    for (int a = 0; a < g.n; ++a) ord[a] = g.element_order(a);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int a, int b) { return ord[a] > ord[b]; });
    std::vector<int> gens;
    std::vector<char> covered(g.n, 0);
    covered[0] = 1;
    int ncov = 1;
    for (int e : by_order) {
        if (covered[e]) continue;
        gens.push_back(e);
        auto cl = subgroup_closure(g, gens);
        std::fill(covered.begin(), covered.end(), 0);
        for (int x : cl) covered[x] = 1;
        ncov = static_cast<int>(cl.size());
        if (ncov == g.n) break;
    }
    int r = static_cast<int>(gens.size());
    AbelianStructure out;
    if (r == 0) { // trivial group
        out.group = FinAbGroup::from_factors({});
        out.elem_coords.assign(g.n, ivec{});
        return out;
    }
    // label every element with an exponent vector over the generators
    i64 m = 1;
    std::vector<i64> gord(r);
    for (int i = 0; i < r; ++i) {
        gord[i] = ord[gens[i]];
        m = lcm_i64(m, gord[i]);
    }
    std::vector<ivec> label(g.n);
    std::vector<char> seen(g.n, 0);
    label[0] = ivec(r, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int i = 0; i < r; ++i) {
            int y = g.op(x, gens[i]);
            if (!seen[y]) {
                label[y] = label[x];
                label[y][i] = (label[y][i] + 1) % gord[i];
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }
    // relations: every Cayley edge defect plus the generator orders
    std::vector<ivec> rels;
    for (int i = 0; i < r; ++i) {
        ivec rel(r, 0);
        rel[i] = gord[i];
        rels.push_back(std::move(rel));
    }
    for (int x = 0; x < g.n; ++x)
        for (int i = 0; i < r; ++i) {
            int y = g.op(x, gens[i]);
            ivec rel(r);
            bool nz = false;
            for (int j = 0; j < r; ++j) {
                rel[j] = label[x][j] - label[y][j] + (j == i ? 1 : 0);
                if (rel[j] != 0) nz = true;
            }
            if (nz) rels.push_back(std::move(rel));
        }
    std::vector<ivec> units(r);
    for (int i = 0; i < r; ++i) {
        units[i] = ivec(r, 0);
        units[i][i] = 1;
    }
    out.group = quotient_structure(m, units, rels, r);
    if (out.group.order() != g.n)
        throw inconsistency_error("abelian structure order mismatch");
    out.elem_coords.resize(g.n);
    for (int x = 0; x < g.n; ++x) {
        auto c = out.group.solver->coords(label[x]);
        if (!c) throw inconsistency_error("abelian structure coordinate failure");
        out.elem_coords[x] = *c;
    }
    // realize each invariant-factor generator as a group element
    for (int k = 0; k < out.group.rank(); ++k) {
        int e = 0;
        for (int i = 0; i < r; ++i) {
            int p = g.power(gens[i], out.group.gens[k][i]);
            e = g.op(e, p);
        }
        ivec expect(out.group.rank(), 0);
        expect[k] = 1;
        if (out.elem_coords[e] != expect)
            throw inconsistency_error("abelian structure witness mismatch");
        out.witnesses.push_back(e);
    }
    return out;
}

} // namespace skb
