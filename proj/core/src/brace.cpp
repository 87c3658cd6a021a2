#include "skewbrace/brace.hpp"
#include "skewbrace/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace skb {

BraceRef share(SkewBrace b) { return std::make_shared<const SkewBrace>(std::move(b)); }

namespace {

SkewBrace finish_brace(GroupTable add, GroupTable circ) {
    int n = add.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = circ.op(a, add.op(b, c));
                int rhs = add.op(add.op(circ.op(a, b), add.inverse(a)), circ.op(a, c));
                if (lhs != rhs)
                    throw validation_error("BraceLawViolation",
                                           "a∘(b+c) != a∘b - a + a∘c", {a, b, c});
            }
    SkewBrace br;
    br.add = std::move(add);
    br.circ = std::move(circ);
    br.lambda_tab.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            br.lambda_tab[static_cast<size_t>(a) * n + b] =
                static_cast<std::uint8_t>(br.add.op(br.neg(a), br.circ.op(a, b)));
    return br;
}

std::vector<int> to_int_table(const GroupTable& g) {
    return std::vector<int>(g.tab.begin(), g.tab.end());
}

} // namespace

SkewBrace validate_brace(const std::vector<int>& add_table,
                         const std::vector<int>& circ_table) {
    size_t sz = add_table.size();
    int n = 0;
    while (static_cast<size_t>(n) * n < sz) ++n;
    if (static_cast<size_t>(n) * n != sz || circ_table.size() != sz)
        throw validation_error("NotAGroup", "tables must be square and equally sized");
    GroupTable add = validate_group(n, add_table, "add");
    GroupTable circ = validate_group(n, circ_table, "circ");
    return finish_brace(std::move(add), std::move(circ));
}

SkewBrace validate_brace(GroupTable add, GroupTable circ) {
    if (add.n != circ.n)
        throw validation_error("NotAGroup", "tables have different orders");
    GroupTable a = validate_group(add.n, to_int_table(add), "add");
    GroupTable c = validate_group(circ.n, to_int_table(circ), "circ");
    return finish_brace(std::move(a), std::move(c));
}

SkewBrace make_trivial(const GroupTable& g) { return finish_brace(g, g); }

SkewBrace make_almost_trivial(const GroupTable& g) {
    return finish_brace(g, g.opposite());
}

SkewBrace make_c_nd(int n, int d) {
    if (n < 1 || d < 1 || n % d != 0)
        throw validation_error("InvalidParameters", "need d | n");
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (prime && d % p != 0)
            throw validation_error("InvalidParameters",
                                   "every prime divisor of n must divide d");
    }
    GroupTable add = cyclic_group(n);
    std::vector<int> circ(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            circ[static_cast<size_t>(x) * n + y] = (x + y + (static_cast<i64>(d) * x * y) % n) % n;
    return finish_brace(std::move(add), validate_group(n, circ, "circ"));
}

SkewBrace make_b_p(int p) {
    bool prime = p >= 2;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
    if (!prime) throw validation_error("NotPrime", "p must be prime");
    if (p * p > kMaxOrder) throw too_large_error("order p^2 exceeds the table cap");
    int n = p * p;
    auto idx = [&](int a, int b) { return a * p + b; };
    std::vector<int> add(static_cast<size_t>(n) * n), circ(static_cast<size_t>(n) * n);
    for (int x1 = 0; x1 < p; ++x1)
        for (int x2 = 0; x2 < p; ++x2)
            for (int y1 = 0; y1 < p; ++y1)
                for (int y2 = 0; y2 < p; ++y2) {
                    add[static_cast<size_t>(idx(x1, x2)) * n + idx(y1, y2)] =
                        idx((x1 + y1) % p, (x2 + y2) % p);
                    circ[static_cast<size_t>(idx(x1, x2)) * n + idx(y1, y2)] =
                        idx((x1 + y1 + x2 * y2) % p, (x2 + y2) % p);
                }
    return finish_brace(validate_group(n, add, "add"), validate_group(n, circ, "circ"));
}

SkewBrace direct_product(const SkewBrace& A, const SkewBrace& B) {
    int na = A.n(), nb = B.n();
    if (na * nb > kMaxOrder)
        throw too_large_error("product order exceeds the table cap");
    int n = na * nb;
    auto idx = [&](int a, int b) { return a * nb + b; };
    std::vector<int> add(static_cast<size_t>(n) * n), circ(static_cast<size_t>(n) * n);
    for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < na; ++a2)
                for (int b2 = 0; b2 < nb; ++b2) {
                    add[static_cast<size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
                        idx(A.add.op(a1, a2), B.add.op(b1, b2));
                    circ[static_cast<size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
                        idx(A.circ.op(a1, a2), B.circ.op(b1, b2));
                }
    return finish_brace(validate_group(n, add, "add"), validate_group(n, circ, "circ"));
}

SkewBrace opposite_brace(const SkewBrace& A) {
    return finish_brace(A.add.opposite(), A.circ);
}

bool BraceMorphism::bijective() const {
    std::vector<char> seen(target->n(), 0);
    for (int v : map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return source->n() == target->n();
}

BraceMorphism make_morphism(BraceRef source, BraceRef target, std::vector<int> map) {
    int n = source->n();
    if (static_cast<int>(map.size()) != n)
        throw validation_error("InvalidParameters", "morphism map has wrong length");
    if (map[0] != 0)
        throw validation_error("IdentityMismatch", "morphism must send 0 to 0");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (map[source->add.op(a, b)] != target->add.op(map[a], map[b]))
                throw validation_error("NotAMorphism", "additive law not preserved",
                                       {a, b, -1});
            if (map[source->circ.op(a, b)] != target->circ.op(map[a], map[b]))
                throw validation_error("NotAMorphism", "circle law not preserved",
                                       {a, b, -1});
        }
    return BraceMorphism{std::move(source), std::move(target), std::move(map)};
}

bool Ideal::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool Ideal::certify(std::string* why) const {
    const SkewBrace& A = *parent;
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<char> in(A.n(), 0);
    for (int x : members) in[x] = 1;
    if (!in[0]) return fail("missing identity");
    for (int x : members)
        for (int y : members)
            if (!in[A.add.op(x, y)]) return fail("not an additive subgroup");
    for (int a = 0; a < A.n(); ++a)
        for (int x : members) {
            if (!in[A.add.op(A.add.op(a, x), A.neg(a))]) return fail("not normal in (A,+)");
            if (!in[A.circ.op(A.circ.op(a, x), A.cinv(a))]) return fail("not normal in (A,∘)");
            if (!in[A.lambda(a, x)]) return fail("not lambda-stable");
        }
    return true;
}

Ideal make_ideal(BraceRef parent, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Ideal I{std::move(parent), std::move(members)};
    std::string why;
    if (!I.certify(&why)) throw validation_error("NotAnIdeal", why);
    return I;
}

std::vector<int> lambda_permutation(const SkewBrace& A, int a) {
    std::vector<int> p(A.n());
    for (int b = 0; b < A.n(); ++b) p[b] = A.lambda(a, b);
    return p;
}

namespace {

std::vector<int> additive_closure(const SkewBrace& A, const std::vector<int>& seeds) {
    return subgroup_closure(A.add, seeds);
}

} // namespace

Ideal commutator_ideal(const BraceRef& A) {
    const SkewBrace& a = *A;
    std::vector<char> seen(a.n(), 0);
    std::vector<int> seeds;
    for (int x = 0; x < a.n(); ++x)
        for (int y = 0; y < a.n(); ++y) {
            int c = a.add_comm(x, y);
            int s = a.star(x, y);
            if (!seen[c]) {
                seen[c] = 1;
                seeds.push_back(c);
            }
            if (!seen[s]) {
                seen[s] = 1;
                seeds.push_back(s);
            }
        }
    Ideal I{A, additive_closure(a, seeds)};
    std::string why;
    if (!I.certify(&why))
        throw inconsistency_error("commutator ideal failed certification: " + why);
    return I;
}

Ideal socle(const BraceRef& A) {
    const SkewBrace& a = *A;
    std::vector<int> members;
    for (int x = 0; x < a.n(); ++x) {
        bool id_lambda = true;
        for (int b = 0; b < a.n() && id_lambda; ++b)
            if (a.lambda(x, b) != b) id_lambda = false;
        if (!id_lambda) continue;
        bool central = true;
        for (int b = 0; b < a.n() && central; ++b)
            if (a.add.op(x, b) != a.add.op(b, x)) central = false;
        if (central) members.push_back(x);
    }
    Ideal I{A, std::move(members)};
    std::string why;
    if (!I.certify(&why)) throw inconsistency_error("socle failed certification: " + why);
    return I;
}

Ideal annihilator(const BraceRef& A) {
    const SkewBrace& a = *A;
    Ideal soc = socle(A);
    std::vector<int> members;
    for (int x : soc.members) {
        bool central = true;
        for (int b = 0; b < a.n() && central; ++b)
            if (a.circ.op(x, b) != a.circ.op(b, x)) central = false;
        if (central) members.push_back(x);
    }
    Ideal I{A, std::move(members)};
    std::string why;
    if (!I.certify(&why))
        throw inconsistency_error("annihilator failed certification: " + why);
    return I;
}

QuotientBrace quotient_brace(const BraceRef& A, const Ideal& I) {
    const SkewBrace& a = *A;
    std::string why;
    if (I.parent.get() != A.get() || !I.certify(&why))
        throw validation_error("NotAnIdeal", why.empty() ? "ideal of another brace" : why);
    int n = a.n();
    std::vector<int> coset_of(n, -1), reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] != -1) continue;
        int q = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int i : I.members) coset_of[a.add.op(x, i)] = q;
    }
    int m = static_cast<int>(reps.size());
    std::vector<int> qadd(static_cast<size_t>(m) * m), qcirc(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            qadd[static_cast<size_t>(i) * m + j] = coset_of[a.add.op(reps[i], reps[j])];
            qcirc[static_cast<size_t>(i) * m + j] = coset_of[a.circ.op(reps[i], reps[j])];
        }
    QuotientBrace out;
    out.quotient = share(validate_brace(qadd, qcirc));
    out.coset_rep = std::move(reps);
    out.coset_of = coset_of;
    out.projection = make_morphism(A, out.quotient, std::move(coset_of));
    return out;
}

Abelianization abelianization(const BraceRef& A) {
    Abelianization out;
    out.derived = commutator_ideal(A);
    QuotientBrace q = quotient_brace(A, out.derived);
    if (!q.quotient->add.abelian() || q.quotient->add.tab != q.quotient->circ.tab)
        throw inconsistency_error("abelianization quotient is not a trivial abelian brace");
    AbelianStructure st = abelian_structure(q.quotient->add);
    out.group = std::move(st.group);
    out.coords.resize(A->n());
    for (int x = 0; x < A->n(); ++x) out.coords[x] = st.elem_coords[q.coset_of[x]];
    out.witnesses.resize(st.witnesses.size());
    for (size_t k = 0; k < st.witnesses.size(); ++k)
        out.witnesses[k] = q.coset_rep[st.witnesses[k]];
    return out;
}

BicyclicReport is_bicyclic(const SkewBrace& A) {
    BicyclicReport r;
    r.bicyclic = is_cyclic_group(A.add) && is_cyclic_group(A.circ);
    if (A.add.abelian()) r.add_factors = abelian_structure(A.add).group.factors;
    if (A.circ.abelian()) r.circ_factors = abelian_structure(A.circ).group.factors;
    return r;
}

namespace {

struct IsoSearch {
    const SkewBrace& A;
    const SkewBrace& B;
    const std::function<bool(const std::vector<int>&)>& visit;
    int n;
    std::vector<std::pair<int, int>> inv_a, inv_b; // (add order, circ order)
    std::vector<int> gens;                         // additive generators of A
    std::vector<std::vector<int>> stage_elems;     // BFS additions per stage
    std::vector<std::pair<int, int>> defn;         // element -> (parent, gen stage)
    std::vector<int> fmap;
    std::vector<char> used;
    bool stopped = false;

    IsoSearch(const SkewBrace& a, const SkewBrace& b,
              const std::function<bool(const std::vector<int>&)>& v)
        : A(a), B(b), visit(v), n(a.n()) {}

    bool prefilter() {
        if (A.n() != B.n()) return false;
        inv_a.resize(n);
        inv_b.resize(n);
        for (int x = 0; x < n; ++x) {
            inv_a[x] = {A.add.element_order(x), A.circ.element_order(x)};
            inv_b[x] = {B.add.element_order(x), B.circ.element_order(x)};
        }
        auto sa = inv_a, sb = inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
        if (A.add.abelian() != B.add.abelian() || A.circ.abelian() != B.circ.abelian())
            return false;
        if (A.add.abelian() &&
            abelian_structure(A.add).group.factors != abelian_structure(B.add).group.factors)
            return false;
        if (A.circ.abelian() &&
            abelian_structure(A.circ).group.factors != abelian_structure(B.circ).group.factors)
            return false;
        return true;
    }

    void build_words() {
        std::vector<char> in(n, 0);
        in[0] = 1;
        defn.assign(n, {-1, -1});
        int covered = 1;
        for (int x = 1; x < n && covered < n; ++x) {
            if (in[x]) continue;
            gens.push_back(x);
            int stage = static_cast<int>(gens.size()) - 1;
            // close the current set under +g for the new generator set
            std::vector<int> added;
            std::vector<int> queue;
            for (int e = 0; e < n; ++e)
                if (in[e]) queue.push_back(e);
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int e = queue[qi];
                for (int gi = 0; gi <= stage; ++gi) {
                    int y = A.add.op(e, gens[gi]);
                    if (!in[y]) {
                        in[y] = 1;
                        defn[y] = {e, gi};
                        queue.push_back(y);
                        added.push_back(y);
                        ++covered;
                    }
                }
            }
            stage_elems.push_back(std::move(added));
        }
    }

    bool extend_stage(int stage, std::vector<int>& assigned) {
        for (int e : stage_elems[stage]) {
            auto [parent, gi] = defn[e];
            int img = B.add.op(fmap[parent], fmap[gens[gi]]);
            if (fmap[e] != -1) {
                if (fmap[e] != img) return false;
                continue;
            }
            if (used[img]) return false;
            if (inv_a[e] != inv_b[img]) return false;
            fmap[e] = img;
            used[img] = 1;
            assigned.push_back(e);
        }
        return true;
    }

    bool full_check() const {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (fmap[A.add.op(x, y)] != B.add.op(fmap[x], fmap[y])) return false;
                if (fmap[A.circ.op(x, y)] != B.circ.op(fmap[x], fmap[y])) return false;
            }
        return true;
    }

    void dfs(int stage) {
        if (stopped) return;
        if (stage == static_cast<int>(gens.size())) {
            if (full_check() && !visit(fmap)) stopped = true;
            return;
        }
        int g = gens[stage];
        for (int cand = 0; cand < n && !stopped; ++cand) {
            if (used[cand] || inv_b[cand] != inv_a[g]) continue;
            fmap[g] = cand;
            used[cand] = 1;
            std::vector<int> assigned{g};
            if (extend_stage(stage, assigned)) dfs(stage + 1);
            for (int e : assigned) {
                used[fmap[e]] = 0;
                fmap[e] = -1;
            }
        }
    }

    void run() {
        if (!prefilter()) return;
        build_words();
        fmap.assign(n, -1);
        used.assign(n, 0);
        fmap[0] = 0;
        used[0] = 1;
        dfs(0);
    }
};

} // namespace

void for_each_isomorphism(const BraceRef& A, const BraceRef& B,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    IsoSearch s(*A, *B, visit);
    s.run();
}

std::optional<BraceMorphism> find_isomorphism(const BraceRef& A, const BraceRef& B) {
    std::optional<std::vector<int>> found;
    for_each_isomorphism(A, B, [&](const std::vector<int>& f) {
        found = f;
        return false;
    });
    if (!found) return std::nullopt;
    return make_morphism(A, B, std::move(*found));
}

} // namespace skb
