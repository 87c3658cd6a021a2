#pragma once

#include "skewbrace/cohomology.hpp"

namespace skb {

// Annihilator extension 0 -> K -> E -> Q -> 0 with iota(K) inside Ann(E).
// The cocycle is stored componentwise: one factor set with modulus d_i per
// invariant factor of K, matching the decomposition K = ⊕ Z/d_i. When built
// from a cocycle, E lives on pairs (k, x) flattened as k*|Q| + x and the
// canonical transversal is t(x) = (0, x).
struct AnnihilatorExtension {
    FinAbGroup K;
    BraceRef Q;
    std::vector<BraceFactorSet> cocycle;
    BraceRef E;
    std::vector<int> iota; // K element index (mixed radix over factors) -> E
    std::vector<int> pi;   // E -> Q
    std::vector<int> t;    // Q -> E, t[0] = 0

    int k_order() const;
    ivec k_coords(int index) const;
    int k_index(const ivec& coords) const;
};

// K x_(α,μ) Q from a componentwise cocycle. Verifies the cocycle against Q
// (InvalidCocycle), the value ranges (ValueOutsideK) and the annihilator
// containment of iota(K).
AnnihilatorExtension build_extension(const FinAbGroup& K,
                                     std::vector<BraceFactorSet> cocycle,
                                     const BraceRef& Q);

// Reads an extension off an existing brace: K = an abelian ideal inside
// Ann(E), Q = E/K with canonical representatives. The transversal defaults
// to the canonical coset representatives; a custom one must satisfy
// pi(t(x)) = x and t(0) = 0.
AnnihilatorExtension extension_from_ideal(const BraceRef& E,
                                          const std::vector<int>& k_members);
AnnihilatorExtension extension_from_ideal(const BraceRef& E,
                                          const std::vector<int>& k_members,
                                          const std::vector<int>& transversal);

// alpha(x,y) = t(x)+t(y)-t(x+y), mu(x,y) = t(x)∘t(y)∘t(x∘y)' in K-coordinates.
std::vector<BraceFactorSet> extension_cocycle(const BraceRef& E,
                                              const std::vector<int>& k_members,
                                              const std::vector<int>& transversal);

// Ann(E) computed from the tables and from the cocycle criterion
// {(k,q) : q in Ann Q, α(q,·)=α(·,q)=μ(q,·)=μ(·,q)}; both must agree.
Ideal ann_of_extension(const AnnihilatorExtension& ext);

// E' computed from the explicit generator formulas of the extension and from
// the commutator ideal of E; both must agree.
Ideal derived_of_extension(const AnnihilatorExtension& ext);

// Class of (φα, φμ) in H, for the character of K with the given values on
// the K generators (phi_values[i] = φ(gen_i) in Z/m).
ivec transgression(const AnnihilatorExtension& ext, const CohomologyGroup& H,
                   const ivec& phi_values);

// Hom(E, Z/m) -> Hom(K, Z/m) by composition with iota; Hom(E, Z/m) is
// identified with Hom(E/E', Z/m).
struct RestrictionMap {
    HomGroup hom_e, hom_k;
    std::vector<ivec> rows; // hom_k coordinates of the hom_e generators
    ivec apply(const ivec& hom_e_coords) const;
};
RestrictionMap restriction(const AnnihilatorExtension& ext, i64 m);

struct CoverCertificate {
    bool k_inside_derived = false;
    bool order_matches = false;
    bool transgression_bijective = false;
    std::vector<i64> multiplier;
    bool is_cover() const {
        return k_inside_derived && order_matches && transgression_bijective;
    }
};
CoverCertificate is_schur_cover(const AnnihilatorExtension& ext,
                                const CohomologyBudget& budget = {});

// Cover construction: decompose M_b(Q), take d_i-torsion representatives,
// set K = ⊕ Z/d_i and build the product cocycle.
AnnihilatorExtension build_schur_cover(const BraceRef& Q,
                                       const CohomologyBudget& budget = {});

// Product of gcd(n_i, m_j) over the invariant factors of Q/Q' and M_b(Q).
bigint cover_count_bound(const BraceRef& Q, const CohomologyBudget& budget = {});

struct CoverList {
    std::vector<BraceRef> covers; // pairwise non-isomorphic, canonical order
    bigint bound = 0;
    bigint classes_scanned = 0;
};
CoverList enumerate_covers(const BraceRef& Q, const CohomologyBudget& budget = {});

struct IsoclinismWitness {
    QuotientBrace qa, qb; // A/Ann A and B/Ann B
    BraceMorphism xi;     // qa.quotient -> qb.quotient
    BraceRef da, db;      // A' and B' as braces
    std::vector<int> da_members, db_members;
    BraceMorphism theta;  // da -> db
};
std::optional<IsoclinismWitness> isoclinism_test(const BraceRef& A, const BraceRef& B);

// True iff the difference cocycle is a coboundary in every component.
bool extension_equivalent(const AnnihilatorExtension& a, const AnnihilatorExtension& b,
                          const CohomologyBudget& budget = {});

struct HSReport {
    bool exact_at_hom_q = false, exact_at_hom_b = false, exact_at_hom_k = false,
         exact_at_h2 = false;
    bigint hom_q_order = 1, hom_b_order = 1, hom_k_order = 1, h2_order = 1;
    bigint im_inf_order = 1, ker_res_order = 1;
    bigint im_res_order = 1, ker_tra_order = 1;
    bigint im_tra_order = 1, ker_inf_order = 1;
    bool all_exact() const {
        return exact_at_hom_q && exact_at_hom_b && exact_at_hom_k && exact_at_h2;
    }
};
// Exactness of 0 -> Hom(Q,A) -> Hom(B,A) -> Hom(K,A) -> H²_b(Q,A) -> H²_b(B,A)
// for A = Z/m.
HSReport hochschild_serre_check(const AnnihilatorExtension& ext, i64 m,
                                const CohomologyBudget& budget = {});

} // namespace skb
