#pragma once

#include "skewbrace/abelian.hpp"
#include "skewbrace/factor_set.hpp"

#include <utility>

namespace skb {

struct CohomologyBudget {
    int max_unknowns = 4096;      // caps the linear-system size
    i64 max_classes = 1'000'000;  // caps exhaustive class iteration
};

// Layout of the unknown vector: interior alpha entries row-major, then
// interior mu entries row-major (borders are fixed to 0 by FS1/FS2).
struct CocycleLayout {
    int n = 0;
    bool brace = true;

    int block() const { return (n - 1) * (n - 1); }
    int unknowns() const { return (brace ? 2 : 1) * block(); }
    int idx_alpha(int x, int y) const { return (x - 1) * (n - 1) + (y - 1); }
    int idx_mu(int x, int y) const { return block() + idx_alpha(x, y); }

    ivec pack(const BraceFactorSet& fs) const;
    ivec pack_group(const GroupFactorSet& fs) const;
    BraceFactorSet unpack(BraceRef Q, i64 m, const ivec& v) const;
    GroupFactorSet unpack_group(const GroupTable& G, i64 m, const ivec& v) const;
};

// The raw linear system: C stacks the FS3/FS4/FS5 rows for all triples in
// (condition-kind, x, y, z) order; D maps the n-1 free values of h (h(0)=0)
// to the packed coboundary (∂₊h, ∂∘h).
struct CocycleSystem {
    CocycleLayout layout;
    IntMatrix C, D;
};
CocycleSystem assemble_brace_cocycle_system(const BraceRef& Q, i64 m,
                                            const CohomologyBudget& budget = {});
CocycleSystem assemble_group_cocycle_system(const GroupTable& G, i64 m,
                                            const CohomologyBudget& budget = {});

// H² of a brace datum (Q, Z/m) or of a group, with generator representatives
// and a coordinate solver for arbitrary cocycles.
struct CohomologyGroup {
    bool brace_kind = true;
    BraceRef Q;
    GroupTable G;
    i64 modulus = 1;
    CocycleLayout layout;
    FinAbGroup structure; // ambient = packed cocycle space (Z/m)^k
    std::vector<BraceFactorSet> generators;
    std::vector<GroupFactorSet> group_generators;

    bigint order() const { return structure.order(); }
    const std::vector<i64>& factors() const { return structure.factors; }

    // Class coordinates of a validated cocycle (throws InvalidCocycle or
    // ModulusMismatch as appropriate).
    ivec class_coords(const BraceFactorSet& fs) const;
    ivec class_coords(const GroupFactorSet& fs) const;
    ivec class_coords_vec(const ivec& packed) const;
    // Representative cocycle vector of the class with given coordinates.
    ivec rep_vector(const ivec& coords) const;
    BraceFactorSet rep_factor_set(const ivec& coords) const;
    GroupFactorSet rep_group_factor_set(const ivec& coords) const;
};

CohomologyGroup h2b(const BraceRef& Q, i64 m, const CohomologyBudget& budget = {});
CohomologyGroup group_h2(const GroupTable& G, i64 m, const CohomologyBudget& budget = {});

// The kernel of H²(., Z/m) -> H²(., C×): one class per invariant factor of
// the abelianization, built from an integer lift c of each generator
// character via (c(y) - c(x+y) + c(x)) / e.
struct ConnectingImage {
    std::vector<BraceFactorSet> cocycles;      // brace kind
    std::vector<GroupFactorSet> group_cocycles; // group kind
    std::vector<ivec> class_coords;            // coordinates in the given H²
    FinAbGroup span;                           // structure of the spanned subgroup
};
ConnectingImage connecting_image(const CohomologyGroup& H);

// Schur multiplier computed as H²(Q, Z/|Q|²) / connecting image. Generator i
// carries a torsion representative with entries in (m/d_i) * Z/m.
struct MultiplierResult {
    FinAbGroup group;
    i64 modulus = 1; // |Q|²
    CohomologyGroup h;
    ConnectingImage t;
    std::vector<BraceFactorSet> generators;
    std::vector<GroupFactorSet> group_generators;

    ivec coords_from_h(const ivec& h_coords) const;
    ivec class_coords(const BraceFactorSet& fs) const;
    ivec class_coords(const GroupFactorSet& fs) const;

    std::shared_ptr<const QuotientSolver> to_m; // embedded H-coords -> M
};

MultiplierResult schur_multiplier(const BraceRef& Q, const CohomologyBudget& budget = {});
MultiplierResult group_schur_multiplier(const GroupTable& G,
                                        const CohomologyBudget& budget = {});

// δ, δ₊, δ∘ of a class of h2b(Q, m) as coordinates in H²(Q₊, Z/m) and
// H²(Q∘, Z/m).
struct DeltaContext {
    BraceRef Q;
    i64 modulus = 1;
    CohomologyGroup hb, h_add, h_circ;
};
DeltaContext make_delta_context(const BraceRef& Q, i64 m,
                                const CohomologyBudget& budget = {});
std::pair<ivec, ivec> delta_maps(const DeltaContext& ctx, const ivec& class_coords);

// Kernels of δ, δ₊, δ∘ at the C×-level: a class is in the kernel iff its
// δ-image lies in the group connecting image; the result is that subgroup of
// h2b(Q, |Q|²) modulo the brace connecting image.
struct DeltaKernels {
    FinAbGroup s_full;  // ker δ
    FinAbGroup s_plus;  // ker δ₊
    FinAbGroup s_circ;  // ker δ∘
};
DeltaKernels delta_kernels(const BraceRef& Q, const CohomologyBudget& budget = {});

// Pulls a class back along a surjective brace morphism pi: B -> Q.
// HQ and HB must share the modulus.
ivec inflate_class(const CohomologyGroup& HQ, const CohomologyGroup& HB,
                   const BraceMorphism& pi, const ivec& class_coords);

} // namespace skb
