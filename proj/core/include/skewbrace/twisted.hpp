#pragma once

#include "skewbrace/extensions.hpp"

namespace skb {

// Twisted skew brace algebra at the level of root-of-unity monomials:
// basis e_a with e_a · e_b = α(a,b) e_{a+b} and e_a ∘ e_b = μ(a,b) e_{a∘b},
// scalars written as exponents of a formal primitive m-th root of unity.
struct TwistedAlgebra {
    BraceFactorSet cocycle; // tables need not be valid (perturbations allowed)

    const SkewBrace& brace() const { return *cocycle.brace; }
    i64 modulus() const { return cocycle.modulus; }
};

TwistedAlgebra make_twisted_algebra(BraceFactorSet cocycle);

struct Monomial {
    i64 exponent = 0; // in Z/m
    int element = 0;
    bool operator==(const Monomial&) const = default;
};

enum class ProductMode { additive, circle };

Monomial monomial_product(const TwistedAlgebra& alg, const Monomial& x,
                          const Monomial& y, ProductMode mode);
Monomial monomial_inverse(const TwistedAlgebra& alg, const Monomial& x, ProductMode mode);
Monomial neutral_monomial();

// e_a ∘ (e_b · e_c) = (e_a ∘ e_b) · e_a^{-1} · (e_a ∘ e_c) on all basis
// triples; returns the first counterexample when the tables are perturbed.
struct RelationCheck {
    bool ok = true;
    int a = -1, b = -1, c = -1;
};
RelationCheck brace_alg_relation_check(const TwistedAlgebra& alg);

// Associativity of a monomial product on all basis triples (equivalent to
// FS3 resp. FS4 of the cocycle).
RelationCheck monomial_associativity_check(const TwistedAlgebra& alg, ProductMode mode);

// True iff the cocycle class vanishes in H²_b(A, Z/m).
bool linearizable(const TwistedAlgebra& alg, const CohomologyBudget& budget = {});

// True iff the transgression of the extension spans all of M_b(Q), i.e.
// every projective representation of Q lifts.
bool lifting_property_check(const AnnihilatorExtension& ext,
                            const CohomologyBudget& budget = {});

} // namespace skb
