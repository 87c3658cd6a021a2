#include "skewbrace/abelian.hpp"
#include "skewbrace/errors.hpp"

#include <algorithm>
#include <limits>

namespace skb {

using detail::gcd_i64;
using detail::lcm_i64;
using detail::mod_reduce;

bigint FinAbGroup::order() const {
    bigint o = 1;
    for (i64 d : factors) o *= d;
    return o;
}

std::vector<i64> canonical_invariant_factors(std::vector<i64> cyclic_orders) {
    std::erase_if(cyclic_orders, [](i64 d) { return d == 1; });
    for (i64 d : cyclic_orders)
        if (d < 1) throw validation_error("InvalidParameters", "cyclic order must be >= 1");
    if (cyclic_orders.empty()) return {};
    int n = static_cast<int>(cyclic_orders.size());
    IntMatrix diag(n, n);
    for (int i = 0; i < n; ++i) diag.at(i, i) = cyclic_orders[i];
    SmithDecomposition snf = smith_normal_form(diag);
    std::vector<i64> out;
    for (int i = 0; i < n; ++i) {
        bigint d = snf.S.at(i, i);
        if (d > std::numeric_limits<i64>::max())
            throw too_large_error("invariant factor exceeds 64 bits");
        i64 v = static_cast<i64>(d);
        if (v > 1) out.push_back(v);
    }
    return out;
}

FinAbGroup FinAbGroup::from_factors(std::vector<i64> cyclic_orders) {
    FinAbGroup g;
    g.factors = canonical_invariant_factors(std::move(cyclic_orders));
    return g;
}

FinAbGroup quotient_structure(i64 m, const std::vector<ivec>& gens_G,
                              const std::vector<ivec>& gens_H, int N) {
    if (m < 1) throw validation_error("InvalidParameters", "modulus must be >= 1");
    FinAbGroup out;
    out.ambient_modulus = m;
    auto solver = std::make_shared<QuotientSolver>();
    solver->m_ = m;
    solver->N_ = N;
    solver->s_ = static_cast<int>(gens_G.size());
    if (m == 1 || gens_G.empty()) {
        // span(G) is trivial mod 1; with no generators every H must be 0
        for (size_t j = 0; j < gens_H.size(); ++j) {
            const ivec& h = gens_H[j];
            for (i64 x : h)
                if (mod_reduce(x, m) != 0)
                    throw validation_error("NotInSpan", "generator outside span",
                                           {static_cast<int>(j), -1, -1});
        }
        out.solver = solver;
        return out;
    }

    int s = solver->s_;
    for (const auto& g : gens_G)
        if (static_cast<int>(g.size()) != N)
            throw validation_error("InvalidParameters", "generator dimension mismatch");
    solver->gcols_.resize(s);
    for (int j = 0; j < s; ++j) {
        solver->gcols_[j].resize(N);
        for (int i = 0; i < N; ++i) solver->gcols_[j][i] = mod_reduce(gens_G[j][i], m);
    }
    solver->gsolve_ = CongruenceSolver(solver->gcols_, N, m);

    // Relation lattice of the G generators: {x : G x == 0 (mod m)}, read off
    // the Smith form of G; m*e_i is adjoined explicitly below.
    std::vector<ivec> grows(N, ivec(s));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < s; ++j) grows[i][j] = solver->gcols_[j][i];
    detail::SnfMod snfG = detail::snf_mod(grows, N, s, m, false);

    std::vector<ivec> lat_cols; // columns of the relation matrix [X | R | mI]
    for (size_t j = 0; j < gens_H.size(); ++j) {
        ivec h(N);
        for (int i = 0; i < N; ++i) h[i] = mod_reduce(gens_H[j][i], m);
        auto x = solver->gsolve_.solve(h);
        if (!x)
            throw validation_error("NotInSpan", "generator outside span",
                                   {static_cast<int>(j), -1, -1});
        lat_cols.push_back(*x);
    }
    int nmin = std::min(N, s);
    for (int i = 0; i < s; ++i) {
        ivec col(s, 0);
        if (i < nmin) {
            i64 g = gcd_i64(snfG.diag_mod[i], m);
            if (g == 0) g = m;
            i64 t = m / g;
            for (int row = 0; row < s; ++row) {
                __int128 v = static_cast<__int128>(t) * snfG.v[row][i];
                col[row] = static_cast<i64>(((v % m) + m) % m);
            }
        } else {
            for (int row = 0; row < s; ++row) col[row] = snfG.v[row][i];
        }
        lat_cols.push_back(std::move(col));
    }
    for (int i = 0; i < s; ++i) {
        ivec col(s, 0);
        col[i] = m; // adjoin m*e_i so the relation lattice has full rank
        lat_cols.push_back(std::move(col));
    }

    int cols = static_cast<int>(lat_cols.size());
    std::vector<ivec> lrows(s, ivec(cols));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < cols; ++j) lrows[i][j] = lat_cols[j][i];
    detail::SnfMod snfL = detail::snf_mod(lrows, s, cols, m, true);

    solver->dall_.resize(s);
    for (int i = 0; i < s; ++i) {
        // The quotient is m-torsion, so every invariant factor divides m.
        if (snfL.diag[i] <= 0 || m % snfL.diag[i] != 0)
            throw inconsistency_error("quotient invariant factor does not divide the modulus");
        solver->dall_[i] = static_cast<i64>(snfL.diag[i]);
    }
    solver->ul_ = std::move(snfL.u);
    for (int i = 0; i < s; ++i)
        if (solver->dall_[i] > 1) solver->nontrivial_.push_back(i);

    for (int idx : solver->nontrivial_) {
        out.factors.push_back(solver->dall_[idx]);
        ivec w(N);
        for (int row = 0; row < N; ++row) {
            __int128 acc = 0;
            for (int j = 0; j < s; ++j)
                acc += static_cast<__int128>(solver->gcols_[j][row]) * snfL.uinv[j][idx];
            w[row] = static_cast<i64>(((acc % m) + m) % m);
        }
        out.gens.push_back(std::move(w));
    }
    out.solver = solver;
    return out;
}

std::optional<ivec> QuotientSolver::coords_in_span(const ivec& ambient) const {
    if (s_ == 0 || m_ == 1) {
        for (i64 x : ambient)
            if (mod_reduce(x, m_) != 0) return std::nullopt;
        return ivec{};
    }
    ivec a(N_);
    for (int i = 0; i < N_; ++i) a[i] = mod_reduce(ambient[i], m_);
    return gsolve_.solve(a);
}

std::optional<ivec> QuotientSolver::coords(const ivec& ambient) const {
    auto x = coords_in_span(ambient);
    if (!x) return std::nullopt;
    ivec out;
    out.reserve(nontrivial_.size());
    for (int idx : nontrivial_) {
        __int128 acc = 0;
        for (int j = 0; j < s_; ++j) acc += static_cast<__int128>(ul_[idx][j]) * (*x)[j];
        i64 d = dall_[idx];
        out.push_back(static_cast<i64>(((acc % d) + d) % d));
    }
    return out;
}

FinAbGroup subgroup_span(i64 m, const std::vector<ivec>& vectors, int N) {
    return quotient_structure(m, vectors, {}, N);
}

bigint HomGroup::order() const {
    bigint o = 1;
    for (i64 g : cyclic_factors) o *= g;
    return o;
}

HomGroup hom_generators(const FinAbGroup& A, const FinAbGroup& B) {
    HomGroup h;
    h.src_factors = A.factors;
    h.dst_factors = B.factors;
    for (int i = 0; i < A.rank(); ++i)
        for (int j = 0; j < B.rank(); ++j) {
            i64 g = gcd_i64(A.factors[i], B.factors[j]);
            if (g > 1) {
                h.index.emplace_back(i, j);
                h.cyclic_factors.push_back(g);
            }
        }
    h.structure = FinAbGroup::from_factors(h.cyclic_factors);
    return h;
}

ivec HomGroup::apply(const ivec& c, const ivec& x) const {
    ivec y(dst_factors.size(), 0);
    for (size_t t = 0; t < index.size(); ++t) {
        auto [i, j] = index[t];
        i64 e = dst_factors[j];
        i64 scale = e / cyclic_factors[t];
        __int128 v = static_cast<__int128>(c[t]) * scale % e * x[i];
        y[j] = static_cast<i64>((((y[j] + v) % e) + e) % e);
    }
    return y;
}

std::vector<ivec> HomGroup::generator_matrix(int t) const {
    std::vector<ivec> images(src_factors.size(), ivec(dst_factors.size(), 0));
    auto [i, j] = index[t];
    images[i][j] = dst_factors[j] / cyclic_factors[t];
    return images;
}

std::optional<ivec> HomGroup::coords_of_matrix(const std::vector<ivec>& images) const {
    // A matrix is a valid hom iff entry (i, j) is a multiple of e_j / gcd.
    for (size_t i = 0; i < src_factors.size(); ++i)
        for (size_t j = 0; j < dst_factors.size(); ++j) {
            i64 e = dst_factors[j];
            i64 g = gcd_i64(src_factors[i], e);
            i64 v = mod_reduce(images[i][j], e);
            if (v % (e / g) != 0) return std::nullopt;
        }
    ivec c(index.size());
    for (size_t t = 0; t < index.size(); ++t) {
        auto [i, j] = index[t];
        i64 e = dst_factors[j];
        i64 v = mod_reduce(images[i][j], e);
        c[t] = (v / (e / cyclic_factors[t])) % cyclic_factors[t];
    }
    return c;
}

FinAbGroup tensor_product(const FinAbGroup& A, const FinAbGroup& B) {
    std::vector<i64> parts;
    for (i64 d : A.factors)
        for (i64 e : B.factors) parts.push_back(gcd_i64(d, e));
    return FinAbGroup::from_factors(std::move(parts));
}

i64 CyclicSpace::embed_modulus() const {
    i64 L = 1;
    for (i64 f : mods) {
        L = lcm_i64(L, f);
        if (L > (i64(1) << 31)) throw too_large_error("cyclic space modulus too large");
    }
    return L;
}

ivec CyclicSpace::embed(const ivec& coords) const {
    i64 L = embed_modulus();
    ivec e(mods.size());
    for (size_t i = 0; i < mods.size(); ++i)
        e[i] = mod_reduce(coords[i], mods[i]) * (L / mods[i]);
    return e;
}

ivec CyclicSpace::reduce(const ivec& coords) const {
    ivec r(mods.size());
    for (size_t i = 0; i < mods.size(); ++i) r[i] = mod_reduce(coords[i], mods[i]);
    return r;
}

Subgroup make_subgroup(const std::vector<i64>& mods, const std::vector<ivec>& gens) {
    Subgroup s;
    s.space.mods = mods;
    for (const auto& g : gens) s.gens.push_back(s.space.reduce(g));
    i64 L = s.space.embed_modulus();
    std::vector<ivec> embedded;
    embedded.reserve(gens.size());
    for (const auto& g : s.gens) embedded.push_back(s.space.embed(g));
    int r = static_cast<int>(mods.size());
    s.structure = subgroup_span(L, embedded, r);
    s.members = std::make_shared<CongruenceSolver>(embedded, r, L);
    return s;
}

bool Subgroup::contains(const ivec& coords) const {
    ivec e = space.embed(coords);
    if (!members) {
        for (i64 x : e)
            if (x != 0) return false;
        return true;
    }
    return members->solve(e).has_value();
}

bool subgroup_contains(const Subgroup& a, const Subgroup& b) {
    for (const auto& g : b.gens)
        if (!a.contains(g)) return false;
    return true;
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
    return a.order() == b.order() && subgroup_contains(a, b);
}

std::vector<ivec> kernel_generators(const std::vector<i64>& src,
                                    const std::vector<i64>& dst,
                                    const std::vector<ivec>& images) {
    int s = static_cast<int>(src.size());
    if (s == 0) return {};
    if (dst.empty()) {
        std::vector<ivec> gens;
        for (int i = 0; i < s; ++i) {
            ivec e(s, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        return gens;
    }
    i64 L = 1;
    for (i64 f : src) L = lcm_i64(L, f);
    for (i64 f : dst) L = lcm_i64(L, f);
    if (L > (i64(1) << 31)) throw too_large_error("kernel modulus too large");
    std::vector<ivec> rows;
    for (size_t j = 0; j < dst.size(); ++j) {
        ivec row(s);
        i64 scale = L / dst[j];
        for (int i = 0; i < s; ++i) {
            __int128 v = static_cast<__int128>(scale) * mod_reduce(images[i][j], dst[j]);
            row[i] = static_cast<i64>(((v % L) + L) % L);
        }
        rows.push_back(std::move(row));
    }
    std::vector<ivec> sol = solution_lattice_rows(rows, s, L);
    std::vector<ivec> out;
    for (auto& g : sol) {
        ivec red(s);
        bool nonzero = false;
        for (int i = 0; i < s; ++i) {
            red[i] = mod_reduce(g[i], src[i]);
            if (red[i] != 0) nonzero = true;
        }
        if (nonzero) out.push_back(std::move(red));
    }
    return out;
}

} // namespace skb
