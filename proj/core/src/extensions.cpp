#include "skewbrace/extensions.hpp"
#include "skewbrace/errors.hpp"

#include <algorithm>
#include <map>

namespace skb {

using detail::gcd_i64;
using detail::mod_reduce;

namespace {

int mixed_radix_index(const std::vector<i64>& factors, const ivec& coords) {
    int idx = 0;
    for (size_t i = 0; i < factors.size(); ++i)
        idx = idx * static_cast<int>(factors[i]) + static_cast<int>(mod_reduce(coords[i], factors[i]));
    return idx;
}

ivec mixed_radix_coords(const std::vector<i64>& factors, int index) {
    ivec c(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
        c[i] = index % factors[i];
        index /= static_cast<int>(factors[i]);
    }
    return c;
}

i64 factors_order_i64(const std::vector<i64>& factors) {
    bigint o = 1;
    for (i64 d : factors) o *= d;
    if (o > kMaxOrder * bigint(kMaxOrder)) throw too_large_error("group order too large");
    return static_cast<i64>(o);
}

Subgroup coords_span(const std::vector<i64>& factors, const std::vector<ivec>& coords) {
    return make_subgroup(factors, coords);
}

// Sub-brace on an ideal: members re-indexed by their sorted position.
struct SubBrace {
    BraceRef brace;
    std::vector<int> members;      // sub index -> parent element
    std::vector<int> parent_index; // parent element -> sub index (-1 outside)
};

SubBrace sub_brace(const BraceRef& A, const std::vector<int>& members) {
    SubBrace s;
    s.members = members;
    s.parent_index.assign(A->n(), -1);
    for (size_t i = 0; i < members.size(); ++i) s.parent_index[members[i]] = static_cast<int>(i);
    int m = static_cast<int>(members.size());
    std::vector<int> add(static_cast<size_t>(m) * m), circ(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int a = A->add.op(members[i], members[j]);
            int c = A->circ.op(members[i], members[j]);
            if (s.parent_index[a] < 0 || s.parent_index[c] < 0)
                throw inconsistency_error("sub-brace members are not closed");
            add[static_cast<size_t>(i) * m + j] = s.parent_index[a];
            circ[static_cast<size_t>(i) * m + j] = s.parent_index[c];
        }
    s.brace = share(validate_brace(add, circ));
    return s;
}

} // namespace

int AnnihilatorExtension::k_order() const { return factors_order_i64(K.factors); }

ivec AnnihilatorExtension::k_coords(int index) const {
    return mixed_radix_coords(K.factors, index);
}

int AnnihilatorExtension::k_index(const ivec& coords) const {
    return mixed_radix_index(K.factors, coords);
}

AnnihilatorExtension build_extension(const FinAbGroup& K,
                                     std::vector<BraceFactorSet> cocycle,
                                     const BraceRef& Q) {
    int r = K.rank();
    if (static_cast<int>(cocycle.size()) != r)
        throw validation_error("MismatchedData", "one cocycle component per K factor expected");
    int nq = Q->n();
    for (int i = 0; i < r; ++i) {
        BraceFactorSet& fs = cocycle[i];
        if (fs.brace->add.tab != Q->add.tab || fs.brace->circ.tab != Q->circ.tab)
            throw validation_error("MismatchedData", "cocycle over a different brace");
        if (fs.modulus != K.factors[i])
            throw validation_error("ValueOutsideK",
                                   "component modulus must equal the K factor");
        for (i64 v : fs.alpha)
            if (v < 0 || v >= K.factors[i])
                throw validation_error("ValueOutsideK", "alpha value outside K");
        for (i64 v : fs.mu)
            if (v < 0 || v >= K.factors[i])
                throw validation_error("ValueOutsideK", "mu value outside K");
        fs.require_valid();
    }
    i64 korder = factors_order_i64(K.factors);
    if (korder * nq > kMaxOrder)
        throw too_large_error("extension order exceeds the table cap");
    int kn = static_cast<int>(korder);
    int n = kn * nq;

    std::vector<ivec> kc(kn);
    for (int k = 0; k < kn; ++k) kc[k] = mixed_radix_coords(K.factors, k);
    auto kadd = [&](const ivec& a, const ivec& b, const ivec& off) {
        ivec c(r);
        for (int i = 0; i < r; ++i) c[i] = mod_reduce(a[i] + b[i] + off[i], K.factors[i]);
        return mixed_radix_index(K.factors, c);
    };

    std::vector<int> add(static_cast<size_t>(n) * n), circ(static_cast<size_t>(n) * n);
    ivec offa(r), offm(r);
    for (int k1 = 0; k1 < kn; ++k1)
        for (int x = 0; x < nq; ++x)
            for (int k2 = 0; k2 < kn; ++k2)
                for (int y = 0; y < nq; ++y) {
                    for (int i = 0; i < r; ++i) {
                        offa[i] = cocycle[i].a(x, y);
                        offm[i] = cocycle[i].u(x, y);
                    }
                    int e1 = k1 * nq + x, e2 = k2 * nq + y;
                    add[static_cast<size_t>(e1) * n + e2] =
                        kadd(kc[k1], kc[k2], offa) * nq + Q->add.op(x, y);
                    circ[static_cast<size_t>(e1) * n + e2] =
                        kadd(kc[k1], kc[k2], offm) * nq + Q->circ.op(x, y);
                }

    AnnihilatorExtension ext;
    ext.K = K;
    ext.Q = Q;
    ext.cocycle = std::move(cocycle);
    ext.E = share(validate_brace(add, circ));
    ext.iota.resize(kn);
    for (int k = 0; k < kn; ++k) ext.iota[k] = k * nq;
    ext.pi.resize(n);
    for (int e = 0; e < n; ++e) ext.pi[e] = e % nq;
    ext.t.resize(nq);
    for (int x = 0; x < nq; ++x) ext.t[x] = x;

    Ideal ann = annihilator(ext.E);
    for (int k = 0; k < kn; ++k)
        if (!ann.contains(ext.iota[k]))
            throw inconsistency_error("iota(K) escapes the annihilator of E");
    return ext;
}

AnnihilatorExtension extension_from_ideal(const BraceRef& E,
                                          const std::vector<int>& k_members) {
    return extension_from_ideal(E, k_members, {});
}

AnnihilatorExtension extension_from_ideal(const BraceRef& E,
                                          const std::vector<int>& k_members,
                                          const std::vector<int>& transversal) {
    Ideal KI = make_ideal(E, k_members);
    Ideal ann = annihilator(E);
    for (int x : KI.members)
        if (!ann.contains(x))
            throw validation_error("NotAnnihilatorContained",
                                   "K is not inside Ann(E)", {x, -1, -1});
    SubBrace ksub = sub_brace(E, KI.members);
    if (!ksub.brace->add.abelian())
        throw inconsistency_error("annihilator-contained ideal must be abelian");
    AbelianStructure kst = abelian_structure(ksub.brace->add);

    QuotientBrace qb = quotient_brace(E, KI);
    int nq = qb.quotient->n();
    std::vector<int> t = transversal.empty() ? qb.coset_rep : transversal;
    if (static_cast<int>(t.size()) != nq || t[0] != 0)
        throw validation_error("InvalidParameters", "transversal must fix 0 and index Q");
    for (int x = 0; x < nq; ++x)
        if (qb.coset_of[t[x]] != x)
            throw validation_error("InvalidParameters", "transversal does not split pi",
                                   {x, -1, -1});

    AnnihilatorExtension ext;
    ext.K.factors = kst.group.factors;
    ext.Q = qb.quotient;
    ext.E = E;
    ext.pi = qb.coset_of;
    ext.t = t;
    int r = ext.K.rank();
    i64 korder = factors_order_i64(ext.K.factors);
    ext.iota.assign(static_cast<size_t>(korder), -1);
    for (size_t mi = 0; mi < KI.members.size(); ++mi) {
        int idx = mixed_radix_index(ext.K.factors, kst.elem_coords[mi]);
        ext.iota[idx] = KI.members[mi];
    }
    for (int v : ext.iota)
        if (v < 0) throw inconsistency_error("K coordinate enumeration is not onto");

    auto k_coords_of_element = [&](int e) -> ivec {
        int mi = ksub.parent_index[e];
        if (mi < 0)
            throw inconsistency_error("factor set value escapes K");
        return kst.elem_coords[mi];
    };
    for (int i = 0; i < r; ++i)
        ext.cocycle.push_back(zero_factor_set(ext.Q, ext.K.factors[i]));
    const SkewBrace& e = *E;
    for (int x = 0; x < nq; ++x)
        for (int y = 0; y < nq; ++y) {
            int axy = e.add.op(e.add.op(t[x], t[y]), e.neg(t[qb.quotient->add.op(x, y)]));
            int mxy = e.circ.op(e.circ.op(t[x], t[y]), e.cinv(t[qb.quotient->circ.op(x, y)]));
            ivec ca = k_coords_of_element(axy), cm = k_coords_of_element(mxy);
            for (int i = 0; i < r; ++i) {
                ext.cocycle[i].a(x, y) = ca[i];
                ext.cocycle[i].u(x, y) = cm[i];
            }
        }
    for (auto& fs : ext.cocycle) fs.require_valid();
    return ext;
}

std::vector<BraceFactorSet> extension_cocycle(const BraceRef& E,
                                              const std::vector<int>& k_members,
                                              const std::vector<int>& transversal) {
    return extension_from_ideal(E, k_members, transversal).cocycle;
}

namespace {

int ext_element(const AnnihilatorExtension& ext, int k_index, int q) {
    return ext.E->add.op(ext.iota[k_index], ext.t[q]);
}

} // namespace

Ideal ann_of_extension(const AnnihilatorExtension& ext) {
    Ideal direct = annihilator(ext.E);
    Ideal annQ = annihilator(ext.Q);
    int r = ext.K.rank();
    int nq = ext.Q->n();
    std::vector<int> members;
    for (int q : annQ.members) {
        bool ok = true;
        for (int x = 0; x < nq && ok; ++x)
            for (int i = 0; i < r && ok; ++i) {
                const BraceFactorSet& fs = ext.cocycle[i];
                if (fs.a(q, x) != fs.a(x, q) || fs.a(x, q) != fs.u(q, x) ||
                    fs.u(q, x) != fs.u(x, q))
                    ok = false;
            }
        if (!ok) continue;
        for (int k = 0; k < ext.k_order(); ++k) members.push_back(ext_element(ext, k, q));
    }
    std::sort(members.begin(), members.end());
    if (members != direct.members) {
        size_t i = 0;
        while (i < members.size() && i < direct.members.size() &&
               members[i] == direct.members[i])
            ++i;
        int w = i < members.size() ? members[i] : direct.members[i];
        throw inconsistency_error("annihilator criterion disagrees with the tables at element " +
                                  std::to_string(w));
    }
    return direct;
}

Ideal derived_of_extension(const AnnihilatorExtension& ext) {
    Ideal direct = commutator_ideal(ext.E);
    const SkewBrace& Q = *ext.Q;
    int r = ext.K.rank();
    int nq = Q.n();
    std::vector<int> gens;
    ivec kc(r);
    for (int q = 0; q < nq; ++q)
        for (int x = 0; x < nq; ++x) {
            int nq_ = Q.neg(q), nx = Q.neg(x);
            int qx = Q.add.op(q, x);
            int qxmq = Q.add.op(qx, nq_);
            for (int i = 0; i < r; ++i) {
                const BraceFactorSet& fs = ext.cocycle[i];
                kc[i] = mod_reduce(fs.a(q, x) - fs.a(q, nq_) - fs.a(x, nx) +
                                       fs.a(qx, nq_) + fs.a(qxmq, nx),
                                   ext.K.factors[i]);
            }
            gens.push_back(ext_element(ext, ext.k_index(kc), Q.add_comm(q, x)));
            int qcx = Q.circ.op(q, x);
            int mqqcx = Q.add.op(nq_, qcx);
            for (int i = 0; i < r; ++i) {
                const BraceFactorSet& fs = ext.cocycle[i];
                kc[i] = mod_reduce(-fs.a(q, nq_) - fs.a(x, nx) + fs.u(q, x) +
                                       fs.a(nq_, qcx) + fs.a(mqqcx, nx),
                                   ext.K.factors[i]);
            }
            gens.push_back(ext_element(ext, ext.k_index(kc), Q.star(q, x)));
        }
    std::vector<int> members = subgroup_closure(ext.E->add, gens);
    if (members != direct.members) {
        size_t i = 0;
        while (i < members.size() && i < direct.members.size() &&
               members[i] == direct.members[i])
            ++i;
        int w = i < members.size() ? members[i] : direct.members[i];
        throw inconsistency_error("derived-subbrace formulas disagree with the tables at element " +
                                  std::to_string(w));
    }
    return direct;
}

ivec transgression(const AnnihilatorExtension& ext, const CohomologyGroup& H,
                   const ivec& phi_values) {
    if (!H.brace_kind || H.Q->add.tab != ext.Q->add.tab || H.Q->circ.tab != ext.Q->circ.tab)
        throw validation_error("MismatchedData", "cohomology group over a different brace");
    i64 m = H.modulus;
    int r = ext.K.rank();
    if (static_cast<int>(phi_values.size()) != r)
        throw validation_error("MismatchedData", "one character value per K generator");
    for (int i = 0; i < r; ++i)
        if (mod_reduce(phi_values[i] * ext.K.factors[i], m) != 0)
            throw validation_error("ModulusMismatch",
                                   "character value order incompatible with K");
    BraceFactorSet fs = zero_factor_set(H.Q, m);
    int nq = ext.Q->n();
    for (int x = 0; x < nq; ++x)
        for (int y = 0; y < nq; ++y) {
            i64 va = 0, vm = 0;
            for (int i = 0; i < r; ++i) {
                va = mod_reduce(va + ext.cocycle[i].a(x, y) * phi_values[i], m);
                vm = mod_reduce(vm + ext.cocycle[i].u(x, y) * phi_values[i], m);
            }
            fs.a(x, y) = va;
            fs.u(x, y) = vm;
        }
    fs.require_valid();
    return H.class_coords(fs);
}

ivec RestrictionMap::apply(const ivec& hom_e_coords) const {
    ivec out(hom_k.index.size(), 0);
    for (size_t t = 0; t < rows.size(); ++t)
        for (size_t j = 0; j < out.size(); ++j)
            out[j] = mod_reduce(out[j] + hom_e_coords[t] * rows[t][j],
                                hom_k.cyclic_factors[j]);
    return out;
}

RestrictionMap restriction(const AnnihilatorExtension& ext, i64 m) {
    RestrictionMap res;
    FinAbGroup Zm = FinAbGroup::from_factors({m});
    Abelianization abE = abelianization(ext.E);
    res.hom_e = hom_generators(abE.group, Zm);
    res.hom_k = hom_generators(ext.K, Zm);
    for (size_t t = 0; t < res.hom_e.index.size(); ++t) {
        ivec unit(res.hom_e.index.size(), 0);
        unit[t] = 1;
        std::vector<ivec> images(ext.K.rank());
        for (int i = 0; i < ext.K.rank(); ++i) {
            ivec ki(ext.K.rank(), 0);
            ki[i] = 1;
            int e = ext.iota[ext.k_index(ki)];
            images[i] = res.hom_e.apply(unit, abE.coords[e]);
        }
        auto c = res.hom_k.coords_of_matrix(images);
        if (!c) throw inconsistency_error("restricted character is not a homomorphism");
        res.rows.push_back(std::move(*c));
    }
    return res;
}

namespace {

// Transgression images of the dual generators of Hom(K, Z/m) in M-coordinates.
std::vector<ivec> transgression_images(const AnnihilatorExtension& ext,
                                       const MultiplierResult& M) {
    std::vector<ivec> images;
    i64 m = M.modulus;
    for (int i = 0; i < ext.K.rank(); ++i) {
        i64 g = gcd_i64(ext.K.factors[i], m);
        ivec phi(ext.K.rank(), 0);
        phi[i] = m / g;
        images.push_back(M.coords_from_h(transgression(ext, M.h, phi)));
    }
    return images;
}

bigint hom_to_zm_order(const std::vector<i64>& factors, i64 m) {
    bigint o = 1;
    for (i64 d : factors) o *= gcd_i64(d, m);
    return o;
}

} // namespace

CoverCertificate is_schur_cover(const AnnihilatorExtension& ext,
                                const CohomologyBudget& budget) {
    MultiplierResult M = schur_multiplier(ext.Q, budget);
    CoverCertificate cert;
    cert.multiplier = M.group.factors;
    cert.order_matches = ext.K.order() == M.group.order();
    Ideal derived = commutator_ideal(ext.E);
    cert.k_inside_derived = true;
    for (int k = 0; k < ext.k_order(); ++k)
        if (!derived.contains(ext.iota[k])) {
            cert.k_inside_derived = false;
            break;
        }
    Subgroup span = coords_span(M.group.factors, transgression_images(ext, M));
    cert.transgression_bijective = span.order() == M.group.order() &&
                                   hom_to_zm_order(ext.K.factors, M.modulus) ==
                                       M.group.order();
    return cert;
}

AnnihilatorExtension build_schur_cover(const BraceRef& Q, const CohomologyBudget& budget) {
    MultiplierResult M = schur_multiplier(Q, budget);
    FinAbGroup K;
    K.factors = M.group.factors;
    std::vector<BraceFactorSet> comps;
    int nq = Q->n();
    for (int j = 0; j < K.rank(); ++j) {
        i64 d = K.factors[j];
        i64 s = M.modulus / d;
        BraceFactorSet comp = zero_factor_set(Q, d);
        const BraceFactorSet& rep = M.generators[j];
        for (int x = 0; x < nq; ++x)
            for (int y = 0; y < nq; ++y) {
                comp.a(x, y) = rep.a(x, y) / s;
                comp.u(x, y) = rep.u(x, y) / s;
            }
        comps.push_back(std::move(comp));
    }
    AnnihilatorExtension ext = build_extension(K, std::move(comps), Q);
    if (!is_schur_cover(ext, budget).is_cover())
        throw inconsistency_error("constructed extension fails the cover certificate");
    return ext;
}

bigint cover_count_bound(const BraceRef& Q, const CohomologyBudget& budget) {
    MultiplierResult M = schur_multiplier(Q, budget);
    Abelianization ab = abelianization(Q);
    bigint bound = 1;
    for (i64 ni : ab.group.factors)
        for (i64 mj : M.group.factors) bound *= gcd_i64(ni, mj);
    return bound;
}

CoverList enumerate_covers(const BraceRef& Q, const CohomologyBudget& budget) {
    MultiplierResult M = schur_multiplier(Q, budget);
    CoverList out;
    {
        Abelianization ab = abelianization(Q);
        out.bound = 1;
        for (i64 ni : ab.group.factors)
            for (i64 mj : M.group.factors) out.bound *= gcd_i64(ni, mj);
    }
    FinAbGroup K;
    K.factors = M.group.factors;
    int r = K.rank();
    std::vector<CohomologyGroup> his;
    bigint total = 1;
    for (int i = 0; i < r; ++i) {
        his.push_back(h2b(Q, K.factors[i], budget));
        total *= his.back().order();
    }
    out.classes_scanned = total;
    if (total > budget.max_classes)
        throw too_large_error("class count " + total.str() + " exceeds the budget");

    // odometer over the class coordinates of every component
    std::vector<ivec> coords(r);
    for (int i = 0; i < r; ++i) coords[i].assign(his[i].factors().size(), 0);
    auto advance = [&]() -> bool {
        for (int i = r - 1; i >= 0; --i) {
            const std::vector<i64>& fs = his[i].factors();
            for (int j = static_cast<int>(fs.size()) - 1; j >= 0; --j) {
                if (++coords[i][j] < fs[j]) return true;
                coords[i][j] = 0;
            }
        }
        return false;
    };

    std::vector<BraceRef> reps;
    bool more = true;
    while (more) {
        std::vector<BraceFactorSet> comps;
        comps.reserve(r);
        for (int i = 0; i < r; ++i) comps.push_back(his[i].rep_factor_set(coords[i]));
        AnnihilatorExtension ext = build_extension(K, std::move(comps), Q);
        Subgroup span = coords_span(M.group.factors, transgression_images(ext, M));
        if (span.order() == M.group.order()) {
            bool known = false;
            for (const auto& repb : reps)
                if (find_isomorphism(repb, ext.E)) {
                    known = true;
                    break;
                }
            if (!known) reps.push_back(ext.E);
        }
        more = advance();
        if (r == 0) break; // single empty tuple
    }
    out.covers = std::move(reps);
    if (bigint(out.covers.size()) > out.bound)
        throw inconsistency_error("observed cover count exceeds the bound");
    return out;
}

std::optional<IsoclinismWitness> isoclinism_test(const BraceRef& A, const BraceRef& B) {
    Ideal annA = annihilator(A), annB = annihilator(B);
    Ideal derA = commutator_ideal(A), derB = commutator_ideal(B);
    if (annA.members.size() != annB.members.size()) return std::nullopt;
    if (derA.members.size() != derB.members.size()) return std::nullopt;

    QuotientBrace qa = quotient_brace(A, annA);
    QuotientBrace qb = quotient_brace(B, annB);
    SubBrace da = sub_brace(A, derA.members);
    SubBrace db = sub_brace(B, derB.members);
    int nq = qa.quotient->n();
    int nd = static_cast<int>(da.members.size());

    // pairing tables with values re-indexed into the derived sub-braces
    auto pairing = [&](const BraceRef& X, const QuotientBrace& q, const SubBrace& d,
                       bool star) {
        std::vector<int> tab(static_cast<size_t>(q.quotient->n()) * q.quotient->n());
        for (int i = 0; i < q.quotient->n(); ++i)
            for (int j = 0; j < q.quotient->n(); ++j) {
                int a = q.coset_rep[i], b = q.coset_rep[j];
                int v = star ? X->star(a, b) : X->add_comm(a, b);
                int s = d.parent_index[v];
                if (s < 0) throw inconsistency_error("pairing value escapes the derived ideal");
                tab[static_cast<size_t>(i) * q.quotient->n() + j] = s;
            }
        return tab;
    };
    std::vector<int> pa_plus = pairing(A, qa, da, false), pa_star = pairing(A, qa, da, true);
    std::vector<int> pb_plus = pairing(B, qb, db, false), pb_star = pairing(B, qb, db, true);

    std::optional<IsoclinismWitness> found;
    for_each_isomorphism(qa.quotient, qb.quotient, [&](const std::vector<int>& xi) {
        // theta is forced on all pairing values
        std::vector<int> theta(nd, -1);
        theta[0] = 0;
        auto force = [&](int src, int dst) {
            if (theta[src] == -1) {
                theta[src] = dst;
                return true;
            }
            return theta[src] == dst;
        };
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j) {
                size_t p = static_cast<size_t>(i) * nq + j;
                size_t q = static_cast<size_t>(xi[i]) * nq + xi[j];
                if (!force(pa_plus[p], pb_plus[q]) || !force(pa_star[p], pb_star[q]))
                    return true; // keep searching
            }
        // extend additively from the forced generators across all of A'
        std::vector<int> gens;
        for (int s = 0; s < nd; ++s)
            if (theta[s] != -1 && s != 0) gens.push_back(s);
        std::vector<int> order;
        {
            std::vector<char> seen(nd, 0);
            seen[0] = 1;
            std::vector<int> queue{0};
            for (size_t qi = 0; qi < queue.size(); ++qi)
                for (int g : gens) {
                    int y = da.brace->add.op(queue[qi], g);
                    if (!seen[y]) {
                        seen[y] = 1;
                        theta[y] = theta[y] == -1
                                       ? db.brace->add.op(theta[queue[qi]], theta[g])
                                       : theta[y];
                        if (theta[y] != db.brace->add.op(theta[queue[qi]], theta[g]))
                            return true;
                        queue.push_back(y);
                    }
                }
            if (static_cast<int>(queue.size()) != nd) return true; // gens fail to span
        }
        std::vector<char> used(nd, 0);
        for (int v : theta) {
            if (v < 0 || used[v]) return true;
            used[v] = 1;
        }
        for (int x = 0; x < nd; ++x)
            for (int y = 0; y < nd; ++y) {
                if (theta[da.brace->add.op(x, y)] != db.brace->add.op(theta[x], theta[y]))
                    return true;
                if (theta[da.brace->circ.op(x, y)] != db.brace->circ.op(theta[x], theta[y]))
                    return true;
            }
        // recheck the forced diagram equalities under the final theta
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j) {
                size_t p = static_cast<size_t>(i) * nq + j;
                size_t q = static_cast<size_t>(xi[i]) * nq + xi[j];
                if (theta[pa_plus[p]] != pb_plus[q] || theta[pa_star[p]] != pb_star[q])
                    return true;
            }
        IsoclinismWitness w;
        w.qa = qa;
        w.qb = qb;
        w.xi = make_morphism(qa.quotient, qb.quotient, xi);
        w.da = da.brace;
        w.db = db.brace;
        w.da_members = da.members;
        w.db_members = db.members;
        w.theta = make_morphism(da.brace, db.brace, theta);
        found = std::move(w);
        return false; // stop
    });
    return found;
}

bool extension_equivalent(const AnnihilatorExtension& a, const AnnihilatorExtension& b,
                          const CohomologyBudget& budget) {
    if (a.Q->add.tab != b.Q->add.tab || a.Q->circ.tab != b.Q->circ.tab)
        throw validation_error("MismatchedData", "extensions over different braces");
    if (a.K.factors != b.K.factors)
        throw validation_error("MismatchedData", "extensions with different kernels");
    for (int i = 0; i < a.K.rank(); ++i) {
        CohomologyGroup H = h2b(a.Q, a.K.factors[i], budget);
        ivec coords = H.class_coords(a.cocycle[i] - b.cocycle[i]);
        for (i64 c : coords)
            if (c != 0) return false;
    }
    return true;
}

HSReport hochschild_serre_check(const AnnihilatorExtension& ext, i64 m,
                                const CohomologyBudget& budget) {
    HSReport rep;
    FinAbGroup Zm = FinAbGroup::from_factors({m});
    Abelianization abQ = abelianization(ext.Q);
    Abelianization abB = abelianization(ext.E);
    HomGroup homQ = hom_generators(abQ.group, Zm);
    RestrictionMap rmap = restriction(ext, m);
    const HomGroup& homB = rmap.hom_e;
    const HomGroup& homK = rmap.hom_k;
    rep.hom_q_order = homQ.order();
    rep.hom_b_order = homB.order();
    rep.hom_k_order = homK.order();

    int tq = static_cast<int>(homQ.index.size());
    int tk = static_cast<int>(homK.index.size());

    // Inf: Hom(Q,A) -> Hom(B,A), composition with pi
    std::vector<ivec> inf_rows;
    for (int t = 0; t < tq; ++t) {
        ivec unit(tq, 0);
        unit[t] = 1;
        std::vector<ivec> images(abB.group.rank());
        for (int j = 0; j < abB.group.rank(); ++j) {
            int b = abB.witnesses[j];
            images[j] = homQ.apply(unit, abQ.coords[ext.pi[b]]);
        }
        auto c = homB.coords_of_matrix(images);
        if (!c) throw inconsistency_error("inflated character is not a homomorphism");
        inf_rows.push_back(std::move(*c));
    }

    // Res: Hom(B,A) -> Hom(K,A), restriction along iota
    const std::vector<ivec>& res_rows = rmap.rows;

    // Tra: Hom(K,A) -> H²_b(Q,A)
    CohomologyGroup HQ = h2b(ext.Q, m, budget);
    rep.h2_order = HQ.order();
    std::vector<ivec> tra_rows;
    for (int t = 0; t < tk; ++t) {
        ivec unit(tk, 0);
        unit[t] = 1;
        ivec phi(ext.K.rank(), 0);
        for (int i = 0; i < ext.K.rank(); ++i) {
            ivec ki(ext.K.rank(), 0);
            ki[i] = 1;
            ivec v = homK.apply(unit, ki);
            phi[i] = v.empty() ? 0 : v[0];
        }
        tra_rows.push_back(transgression(ext, HQ, phi));
    }

    // Inf: H²_b(Q,A) -> H²_b(B,A)
    CohomologyGroup HB = h2b(ext.E, m, budget);
    BraceMorphism pim = make_morphism(ext.E, ext.Q, ext.pi);
    std::vector<ivec> inf2_rows;
    for (int t = 0; t < static_cast<int>(HQ.factors().size()); ++t) {
        ivec unit(HQ.factors().size(), 0);
        unit[t] = 1;
        inf2_rows.push_back(inflate_class(HQ, HB, pim, unit));
    }

    auto span_order = [&](const std::vector<i64>& mods, const std::vector<ivec>& gens) {
        return coords_span(mods, gens).order();
    };

    // exactness at Hom(Q,A): Inf injective
    std::vector<ivec> ker_inf1 =
        kernel_generators(homQ.cyclic_factors, homB.cyclic_factors, inf_rows);
    rep.exact_at_hom_q = span_order(homQ.cyclic_factors, ker_inf1) == 1;

    // exactness at Hom(B,A): Im Inf = Ker Res
    Subgroup im_inf = coords_span(homB.cyclic_factors, inf_rows);
    Subgroup ker_res = coords_span(
        homB.cyclic_factors,
        kernel_generators(homB.cyclic_factors, homK.cyclic_factors, res_rows));
    rep.im_inf_order = im_inf.order();
    rep.ker_res_order = ker_res.order();
    rep.exact_at_hom_b = subgroup_equal(ker_res, im_inf);

    // exactness at Hom(K,A): Im Res = Ker Tra
    Subgroup im_res = coords_span(homK.cyclic_factors, res_rows);
    Subgroup ker_tra = coords_span(
        homK.cyclic_factors, kernel_generators(homK.cyclic_factors, HQ.factors(), tra_rows));
    rep.im_res_order = im_res.order();
    rep.ker_tra_order = ker_tra.order();
    rep.exact_at_hom_k = subgroup_equal(ker_tra, im_res);

    // exactness at H²_b(Q,A): Im Tra = Ker Inf
    Subgroup im_tra = coords_span(HQ.factors(), tra_rows);
    Subgroup ker_inf2 = coords_span(
        HQ.factors(), kernel_generators(HQ.factors(), HB.factors(), inf2_rows));
    rep.im_tra_order = im_tra.order();
    rep.ker_inf_order = ker_inf2.order();
    rep.exact_at_h2 = subgroup_equal(ker_inf2, im_tra);

    return rep;
}

} // namespace skb
