#include "skewbrace/cohomology.hpp"
#include "skewbrace/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>

namespace skb {

using detail::mod_reduce;

namespace {

using SparseRow = std::vector<std::pair<int, i64>>;

void check_modulus(i64 m) {
    if (m < 1) throw validation_error("InvalidParameters", "modulus must be >= 1");
    if (m > (i64(1) << 31)) throw too_large_error("modulus exceeds 2^31");
}

// FS3/FS4/FS5 rows for all triples, in (condition-kind, x, y, z) order.
// Border entries are fixed to zero by FS1/FS2 and never emitted.
void emit_brace_rows(const SkewBrace& Q, const CocycleLayout& L,
                     const std::function<void(const SparseRow&)>& sink) {
    int n = Q.n();
    SparseRow row;
    auto alpha = [&](int x, int y, i64 c) {
        if (x != 0 && y != 0) row.emplace_back(L.idx_alpha(x, y), c);
    };
    auto mu = [&](int x, int y, i64 c) {
        if (x != 0 && y != 0) row.emplace_back(L.idx_mu(x, y), c);
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                row.clear();
                alpha(y, z, 1);
                alpha(Q.add.op(x, y), z, -1);
                alpha(x, Q.add.op(y, z), 1);
                alpha(x, y, -1);
                sink(row);
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                row.clear();
                mu(y, z, 1);
                mu(Q.circ.op(x, y), z, -1);
                mu(x, Q.circ.op(y, z), 1);
                mu(x, y, -1);
                sink(row);
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                row.clear();
                int lz = Q.lambda(x, z);
                alpha(y, z, 1);
                alpha(Q.circ.op(x, y), lz, -1);
                alpha(x, lz, 1);
                mu(x, y, -1);
                mu(x, Q.add.op(y, z), 1);
                mu(x, z, -1);
                sink(row);
            }
}

void emit_group_rows(const GroupTable& G, const CocycleLayout& L,
                     const std::function<void(const SparseRow&)>& sink) {
    int n = G.n;
    SparseRow row;
    auto f = [&](int x, int y, i64 c) {
        if (x != 0 && y != 0) row.emplace_back(L.idx_alpha(x, y), c);
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                row.clear();
                f(y, z, 1);
                f(G.op(x, y), z, -1);
                f(x, G.op(y, z), 1);
                f(x, y, -1);
                sink(row);
            }
}

// Columns of the coboundary map: one per free value h(w), w = 1..n-1.
std::vector<ivec> brace_coboundary_columns(const SkewBrace& Q, const CocycleLayout& L,
                                           i64 m) {
    int n = Q.n();
    std::vector<ivec> cols;
    for (int w = 1; w < n; ++w) {
        ivec h(n, 0);
        h[w] = 1;
        ivec col(L.unknowns(), 0);
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y) {
                col[L.idx_alpha(x, y)] = mod_reduce(h[y] - h[Q.add.op(x, y)] + h[x], m);
                col[L.idx_mu(x, y)] = mod_reduce(h[y] - h[Q.circ.op(x, y)] + h[x], m);
            }
        cols.push_back(std::move(col));
    }
    return cols;
}

std::vector<ivec> group_coboundary_columns(const GroupTable& G, const CocycleLayout& L,
                                           i64 m) {
    int n = G.n;
    std::vector<ivec> cols;
    for (int w = 1; w < n; ++w) {
        ivec h(n, 0);
        h[w] = 1;
        ivec col(L.unknowns(), 0);
        for (int x = 1; x < n; ++x)
            for (int y = 1; y < n; ++y)
                col[L.idx_alpha(x, y)] = mod_reduce(h[y] - h[G.op(x, y)] + h[x], m);
        cols.push_back(std::move(col));
    }
    return cols;
}

IntMatrix materialize(const std::vector<ivec>& rows, int cols) {
    IntMatrix C(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) C.at(static_cast<int>(i), j) = rows[i][j];
    return C;
}

} // namespace

ivec CocycleLayout::pack(const BraceFactorSet& fs) const {
    ivec v(unknowns(), 0);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            v[idx_alpha(x, y)] = fs.a(x, y);
            v[idx_mu(x, y)] = fs.u(x, y);
        }
    return v;
}

ivec CocycleLayout::pack_group(const GroupFactorSet& fs) const {
    ivec v(unknowns(), 0);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) v[idx_alpha(x, y)] = fs.at(x, y);
    return v;
}

BraceFactorSet CocycleLayout::unpack(BraceRef Q, i64 m, const ivec& v) const {
    BraceFactorSet fs = zero_factor_set(std::move(Q), m);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            fs.a(x, y) = mod_reduce(v[idx_alpha(x, y)], m);
            fs.u(x, y) = mod_reduce(v[idx_mu(x, y)], m);
        }
    return fs;
}

GroupFactorSet CocycleLayout::unpack_group(const GroupTable& G, i64 m, const ivec& v) const {
    GroupFactorSet fs;
    fs.group = G;
    fs.modulus = m;
    fs.f.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) fs.at(x, y) = mod_reduce(v[idx_alpha(x, y)], m);
    return fs;
}

CocycleSystem assemble_brace_cocycle_system(const BraceRef& Q, i64 m,
                                            const CohomologyBudget& budget) {
    check_modulus(m);
    CocycleLayout L{Q->n(), true};
    if (L.unknowns() > budget.max_unknowns)
        throw too_large_error("cocycle system exceeds the unknown budget");
    i64 nrows = 3 * static_cast<i64>(Q->n()) * Q->n() * Q->n();
    if (nrows * L.unknowns() > (i64(16) << 20))
        throw too_large_error("cocycle system too large to materialize");
    std::vector<ivec> rows;
    rows.reserve(nrows);
    emit_brace_rows(*Q, L, [&](const SparseRow& r) {
        ivec dense(L.unknowns(), 0);
        for (auto& [j, c] : r) dense[j] = mod_reduce(dense[j] + c, m);
        rows.push_back(std::move(dense));
    });
    CocycleSystem out;
    out.layout = L;
    out.C = materialize(rows, L.unknowns());
    auto dc = brace_coboundary_columns(*Q, L, m);
    out.D = IntMatrix(L.unknowns(), static_cast<int>(dc.size()));
    for (int j = 0; j < out.D.cols; ++j)
        for (int i = 0; i < out.D.rows; ++i) out.D.at(i, j) = dc[j][i];
    return out;
}

CocycleSystem assemble_group_cocycle_system(const GroupTable& G, i64 m,
                                            const CohomologyBudget& budget) {
    check_modulus(m);
    CocycleLayout L{G.n, false};
    if (L.unknowns() > budget.max_unknowns)
        throw too_large_error("cocycle system exceeds the unknown budget");
    i64 nrows = static_cast<i64>(G.n) * G.n * G.n;
    if (nrows * std::max(L.unknowns(), 1) > (i64(16) << 20))
        throw too_large_error("cocycle system too large to materialize");
    std::vector<ivec> rows;
    rows.reserve(nrows);
    emit_group_rows(G, L, [&](const SparseRow& r) {
        ivec dense(L.unknowns(), 0);
        for (auto& [j, c] : r) dense[j] = mod_reduce(dense[j] + c, m);
        rows.push_back(std::move(dense));
    });
    CocycleSystem out;
    out.layout = L;
    out.C = materialize(rows, L.unknowns());
    auto dc = group_coboundary_columns(G, L, m);
    out.D = IntMatrix(L.unknowns(), static_cast<int>(dc.size()));
    for (int j = 0; j < out.D.cols; ++j)
        for (int i = 0; i < out.D.rows; ++i) out.D.at(i, j) = dc[j][i];
    return out;
}

namespace {

CohomologyGroup h2_pipeline(bool brace_kind, BraceRef Q, const GroupTable& G, i64 m,
                            const CohomologyBudget& budget) {
    check_modulus(m);
    CohomologyGroup H;
    H.brace_kind = brace_kind;
    H.Q = std::move(Q);
    H.G = G;
    H.modulus = m;
    int n = brace_kind ? H.Q->n() : G.n;
    H.layout = CocycleLayout{n, brace_kind};
    int k = H.layout.unknowns();
    if (k > budget.max_unknowns)
        throw too_large_error("cocycle system exceeds the unknown budget");
    if (m == 1 || k == 0) {
        H.structure = quotient_structure(m, {}, {}, k);
        return H;
    }
    ModularRowEchelon ech(k, m);
    // the triple loops emit many repeated rows; insert each distinct row once
    std::unordered_set<std::string> seen;
    std::map<int, i64> canon;
    auto sink = [&](const SparseRow& r) {
        canon.clear();
        for (auto& [j, c] : r) {
            i64 v = mod_reduce(canon.count(j) ? canon[j] + c : c, m);
            if (v == 0)
                canon.erase(j);
            else
                canon[j] = v;
        }
        if (canon.empty()) return;
        std::string key;
        key.reserve(canon.size() * 12);
        for (auto& [j, v] : canon) {
            key.append(reinterpret_cast<const char*>(&j), sizeof j);
            key.append(reinterpret_cast<const char*>(&v), sizeof v);
        }
        if (!seen.insert(std::move(key)).second) return;
        ech.insert_sparse(r);
    };
    if (brace_kind)
        emit_brace_rows(*H.Q, H.layout, sink);
    else
        emit_group_rows(G, H.layout, sink);
    std::vector<ivec> sol = solution_lattice_from_echelon(ech);
    std::vector<ivec> dcols = brace_kind ? brace_coboundary_columns(*H.Q, H.layout, m)
                                         : group_coboundary_columns(G, H.layout, m);
    H.structure = quotient_structure(m, sol, dcols, k);
    for (const auto& w : H.structure.gens) {
        if (brace_kind) {
            BraceFactorSet fs = H.layout.unpack(H.Q, m, w);
            if (fs.validate())
                throw inconsistency_error("cohomology generator fails the cocycle conditions");
            H.generators.push_back(std::move(fs));
        } else {
            GroupFactorSet fs = H.layout.unpack_group(G, m, w);
            if (fs.validate())
                throw inconsistency_error("cohomology generator fails the cocycle conditions");
            H.group_generators.push_back(std::move(fs));
        }
    }
    return H;
}

} // namespace

CohomologyGroup h2b(const BraceRef& Q, i64 m, const CohomologyBudget& budget) {
    return h2_pipeline(true, Q, GroupTable{}, m, budget);
}

CohomologyGroup group_h2(const GroupTable& G, i64 m, const CohomologyBudget& budget) {
    return h2_pipeline(false, nullptr, G, m, budget);
}

ivec CohomologyGroup::class_coords_vec(const ivec& packed) const {
    auto c = structure.solver->coords(packed);
    if (!c) throw inconsistency_error("cocycle vector is outside the solution span");
    return *c;
}

ivec CohomologyGroup::class_coords(const BraceFactorSet& fs) const {
    if (!brace_kind) throw validation_error("MismatchedData", "group cohomology expected");
    if (fs.modulus != modulus)
        throw validation_error("ModulusMismatch", "factor set has a different modulus");
    if (fs.brace->add.tab != Q->add.tab || fs.brace->circ.tab != Q->circ.tab)
        throw validation_error("MismatchedData", "factor set over a different brace");
    fs.require_valid();
    return class_coords_vec(layout.pack(fs));
}

ivec CohomologyGroup::class_coords(const GroupFactorSet& fs) const {
    if (brace_kind) throw validation_error("MismatchedData", "brace cohomology expected");
    if (fs.modulus != modulus)
        throw validation_error("ModulusMismatch", "factor set has a different modulus");
    if (fs.group.tab != G.tab)
        throw validation_error("MismatchedData", "factor set over a different group");
    fs.require_valid();
    return class_coords_vec(layout.pack_group(fs));
}

ivec CohomologyGroup::rep_vector(const ivec& coords) const {
    int k = layout.unknowns();
    ivec v(k, 0);
    if (coords.size() != structure.gens.size())
        throw validation_error("MismatchedData", "coordinate length mismatch");
    for (size_t i = 0; i < coords.size(); ++i) {
        const ivec& g = structure.gens[i];
        for (int j = 0; j < k; ++j)
            v[j] = mod_reduce(v[j] + mod_reduce(coords[i], modulus) * g[j], modulus);
    }
    return v;
}

BraceFactorSet CohomologyGroup::rep_factor_set(const ivec& coords) const {
    return layout.unpack(Q, modulus, rep_vector(coords));
}

GroupFactorSet CohomologyGroup::rep_group_factor_set(const ivec& coords) const {
    return layout.unpack_group(G, modulus, rep_vector(coords));
}

namespace {

// (c(y) - c(op(x,y)) + c(x)) / e with c an integer lift of an order-e
// character; the numerator is always 0 or e.
i64 connecting_entry(i64 cy, i64 cxy, i64 cx, i64 e) {
    i64 num = cy - cxy + cx;
    if (num % e != 0) throw inconsistency_error("connecting numerator not divisible");
    i64 q = num / e;
    if (q < 0 || q > 1) throw inconsistency_error("connecting quotient out of range");
    return q;
}

FinAbGroup span_of_coords(const std::vector<i64>& factors,
                          const std::vector<ivec>& coords) {
    if (factors.empty()) return FinAbGroup{};
    CyclicSpace space{factors};
    i64 L = space.embed_modulus();
    std::vector<ivec> emb;
    emb.reserve(coords.size());
    for (const auto& c : coords) emb.push_back(space.embed(c));
    return subgroup_span(L, emb, static_cast<int>(factors.size()));
}

} // namespace

ConnectingImage connecting_image(const CohomologyGroup& H) {
    ConnectingImage out;
    i64 m = H.modulus;
    if (H.brace_kind) {
        Abelianization ab = abelianization(H.Q);
        const SkewBrace& Q = *H.Q;
        int n = Q.n();
        for (int i = 0; i < ab.group.rank(); ++i) {
            i64 e = ab.group.factors[i];
            BraceFactorSet fs = zero_factor_set(H.Q, m);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    i64 cx = ab.coords[x][i], cy = ab.coords[y][i];
                    fs.a(x, y) = mod_reduce(
                        connecting_entry(cy, ab.coords[Q.add.op(x, y)][i], cx, e), m);
                    fs.u(x, y) = mod_reduce(
                        connecting_entry(cy, ab.coords[Q.circ.op(x, y)][i], cx, e), m);
                }
            fs.require_valid();
            out.class_coords.push_back(H.class_coords(fs));
            out.cocycles.push_back(std::move(fs));
        }
    } else {
        const GroupTable& G = H.G;
        std::vector<int> coset_of;
        GroupTable ab_table = quotient_group(G, group_commutator_subgroup(G), &coset_of);
        AbelianStructure st = abelian_structure(ab_table);
        int n = G.n;
        for (int i = 0; i < st.group.rank(); ++i) {
            i64 e = st.group.factors[i];
            GroupFactorSet fs;
            fs.group = G;
            fs.modulus = m;
            fs.f.assign(static_cast<size_t>(n) * n, 0);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    i64 cx = st.elem_coords[coset_of[x]][i];
                    i64 cy = st.elem_coords[coset_of[y]][i];
                    i64 cxy = st.elem_coords[coset_of[G.op(x, y)]][i];
                    fs.at(x, y) = mod_reduce(connecting_entry(cy, cxy, cx, e), m);
                }
            fs.require_valid();
            out.class_coords.push_back(H.class_coords(fs));
            out.group_cocycles.push_back(std::move(fs));
        }
    }
    out.span = span_of_coords(H.factors(), out.class_coords);
    return out;
}

ivec MultiplierResult::coords_from_h(const ivec& h_coords) const {
    if (group.trivial()) return {};
    CyclicSpace space{h.factors()};
    auto c = to_m->coords(space.embed(h_coords));
    if (!c) throw inconsistency_error("class outside the multiplier quotient");
    return *c;
}

ivec MultiplierResult::class_coords(const BraceFactorSet& fs) const {
    return coords_from_h(h.class_coords(fs));
}

ivec MultiplierResult::class_coords(const GroupFactorSet& fs) const {
    return coords_from_h(h.class_coords(fs));
}

namespace {

MultiplierResult multiplier_pipeline(bool brace_kind, const BraceRef& Q,
                                     const GroupTable& G, const CohomologyBudget& budget) {
    int n = brace_kind ? Q->n() : G.n;
    i64 m = static_cast<i64>(n) * n;
    MultiplierResult out;
    out.modulus = m;
    out.h = brace_kind ? h2b(Q, m, budget) : group_h2(G, m, budget);
    out.t = connecting_image(out.h);

    const std::vector<i64>& hf = out.h.factors();
    int r = static_cast<int>(hf.size());
    if (r == 0) {
        out.group = FinAbGroup{};
        return out;
    }
    CyclicSpace space{hf};
    i64 L = space.embed_modulus();
    std::vector<ivec> full;
    for (int i = 0; i < r; ++i) {
        ivec u(r, 0);
        u[i] = 1;
        full.push_back(space.embed(u));
    }
    std::vector<ivec> tgens;
    for (const auto& c : out.t.class_coords) tgens.push_back(space.embed(c));
    FinAbGroup M0 = quotient_structure(L, full, tgens, r);
    out.to_m = M0.solver;
    out.group.factors = M0.factors;

    // generator representatives; for braces, shift by connecting classes and
    // coboundaries so every entry lies in (m/d) * Z/m
    std::vector<ivec> tvecs;
    std::vector<ivec> dcols;
    if (brace_kind) {
        for (const auto& fs : out.t.cocycles) tvecs.push_back(out.h.layout.pack(fs));
        dcols = brace_coboundary_columns(*Q, out.h.layout, m);
    }
    for (int j = 0; j < M0.rank(); ++j) {
        ivec hcoords(r);
        for (int i = 0; i < r; ++i) {
            i64 scale = L / hf[i];
            if (M0.gens[j][i] % scale != 0)
                throw inconsistency_error("multiplier witness fails to unembed");
            hcoords[i] = M0.gens[j][i] / scale;
        }
        ivec rep = out.h.rep_vector(hcoords);
        i64 d = M0.factors[j];
        if (brace_kind) {
            i64 s = m / d;
            if (m % d != 0) throw inconsistency_error("multiplier factor does not divide m");
            if (s > 1) {
                std::vector<ivec> cols;
                for (const auto& t : tvecs) cols.push_back(t);
                for (const auto& c : dcols) cols.push_back(c);
                int k = out.h.layout.unknowns();
                CongruenceSolver solver(cols, k, s);
                ivec target(k);
                for (int i = 0; i < k; ++i) target[i] = mod_reduce(rep[i], s);
                auto w = solver.solve(target);
                if (!w)
                    throw inconsistency_error("no torsion representative for a multiplier generator");
                for (size_t cidx = 0; cidx < cols.size(); ++cidx) {
                    i64 coef = (*w)[cidx];
                    if (coef == 0) continue;
                    for (int i = 0; i < k; ++i)
                        rep[i] = mod_reduce(rep[i] - coef * cols[cidx][i], m);
                }
                for (int i = 0; i < k; ++i)
                    if (rep[i] % s != 0)
                        throw inconsistency_error("torsion representative misses (m/d)Z");
            }
            BraceFactorSet fs = out.h.layout.unpack(Q, m, rep);
            fs.require_valid();
            ivec check = out.coords_from_h(out.h.class_coords_vec(rep));
            ivec expect(M0.rank(), 0);
            expect[j] = 1;
            if (check != expect)
                throw inconsistency_error("multiplier generator class drifted");
            out.generators.push_back(std::move(fs));
        } else {
            GroupFactorSet fs = out.h.layout.unpack_group(G, m, rep);
            fs.require_valid();
            out.group_generators.push_back(std::move(fs));
        }
    }
    return out;
}

} // namespace

MultiplierResult schur_multiplier(const BraceRef& Q, const CohomologyBudget& budget) {
    return multiplier_pipeline(true, Q, GroupTable{}, budget);
}

MultiplierResult group_schur_multiplier(const GroupTable& G, const CohomologyBudget& budget) {
    return multiplier_pipeline(false, nullptr, G, budget);
}

DeltaContext make_delta_context(const BraceRef& Q, i64 m, const CohomologyBudget& budget) {
    DeltaContext ctx;
    ctx.Q = Q;
    ctx.modulus = m;
    ctx.hb = h2b(Q, m, budget);
    ctx.h_add = group_h2(Q->add, m, budget);
    ctx.h_circ = group_h2(Q->circ, m, budget);
    return ctx;
}

std::pair<ivec, ivec> delta_maps(const DeltaContext& ctx, const ivec& class_coords) {
    BraceFactorSet fs = ctx.hb.rep_factor_set(class_coords);
    GroupFactorSet fa;
    fa.group = ctx.Q->add;
    fa.modulus = ctx.modulus;
    fa.f = fs.alpha;
    GroupFactorSet fm;
    fm.group = ctx.Q->circ;
    fm.modulus = ctx.modulus;
    fm.f = fs.mu;
    return {ctx.h_add.class_coords(fa), ctx.h_circ.class_coords(fm)};
}

namespace {

FinAbGroup quotient_of_span(const std::vector<i64>& factors,
                            const std::vector<ivec>& gens,
                            const std::vector<ivec>& sub) {
    if (factors.empty()) return FinAbGroup{};
    CyclicSpace space{factors};
    i64 L = space.embed_modulus();
    std::vector<ivec> g, h;
    for (const auto& c : gens) g.push_back(space.embed(c));
    for (const auto& c : sub) {
        g.push_back(space.embed(c)); // sub lies inside the span; keep G complete
        h.push_back(space.embed(c));
    }
    FinAbGroup q = quotient_structure(L, g, h, static_cast<int>(factors.size()));
    return FinAbGroup::from_factors(q.factors);
}

} // namespace

DeltaKernels delta_kernels(const BraceRef& Q, const CohomologyBudget& budget) {
    MultiplierResult mb = schur_multiplier(Q, budget);
    MultiplierResult ma = group_schur_multiplier(Q->add, budget);
    MultiplierResult mc = group_schur_multiplier(Q->circ, budget);
    const std::vector<i64>& hf = mb.h.factors();
    int r = static_cast<int>(hf.size());
    DeltaKernels out;
    if (r == 0) return out;

    std::vector<ivec> rows_plus, rows_circ, rows_full;
    for (int i = 0; i < r; ++i) {
        const BraceFactorSet& fs = mb.h.generators[i];
        GroupFactorSet fa;
        fa.group = Q->add;
        fa.modulus = mb.modulus;
        fa.f = fs.alpha;
        GroupFactorSet fm;
        fm.group = Q->circ;
        fm.modulus = mb.modulus;
        fm.f = fs.mu;
        ivec pa = ma.class_coords(fa);
        ivec pc = mc.class_coords(fm);
        ivec both = pa;
        both.insert(both.end(), pc.begin(), pc.end());
        rows_plus.push_back(std::move(pa));
        rows_circ.push_back(std::move(pc));
        rows_full.push_back(std::move(both));
    }
    std::vector<i64> dst_full = ma.group.factors;
    dst_full.insert(dst_full.end(), mc.group.factors.begin(), mc.group.factors.end());

    auto kernel_mod_t = [&](const std::vector<i64>& dst, const std::vector<ivec>& rows) {
        std::vector<ivec> u = kernel_generators(hf, dst, rows);
        return quotient_of_span(hf, u, mb.t.class_coords);
    };
    out.s_full = kernel_mod_t(dst_full, rows_full);
    out.s_plus = kernel_mod_t(ma.group.factors, rows_plus);
    out.s_circ = kernel_mod_t(mc.group.factors, rows_circ);
    return out;
}

ivec inflate_class(const CohomologyGroup& HQ, const CohomologyGroup& HB,
                   const BraceMorphism& pi, const ivec& class_coords) {
    if (HQ.modulus != HB.modulus)
        throw validation_error("ModulusMismatch", "inflation needs matching moduli");
    if (!HQ.brace_kind || !HB.brace_kind)
        throw validation_error("MismatchedData", "inflation is defined for brace classes");
    if (pi.source->add.tab != HB.Q->add.tab || pi.source->circ.tab != HB.Q->circ.tab ||
        pi.target->add.tab != HQ.Q->add.tab || pi.target->circ.tab != HQ.Q->circ.tab)
        throw validation_error("MismatchedData", "projection does not match the cohomologies");
    std::vector<char> hit(pi.target->n(), 0);
    for (int v : pi.map) hit[v] = 1;
    for (char c : hit)
        if (!c) throw validation_error("NotSurjective", "projection is not surjective");
    BraceFactorSet rep = HQ.rep_factor_set(class_coords);
    BraceFactorSet pulled = zero_factor_set(HB.Q, HB.modulus);
    int nb = HB.Q->n();
    for (int x = 0; x < nb; ++x)
        for (int y = 0; y < nb; ++y) {
            pulled.a(x, y) = rep.a(pi.map[x], pi.map[y]);
            pulled.u(x, y) = rep.u(pi.map[x], pi.map[y]);
        }
    return HB.class_coords(pulled);
}

} // namespace skb
