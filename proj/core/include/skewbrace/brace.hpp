#pragma once

#include "skewbrace/group_table.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace skb {

struct SkewBrace;
using BraceRef = std::shared_ptr<const SkewBrace>;

// A finite skew brace: two group structures on {0,...,n-1} sharing the
// identity 0 and satisfying a∘(b+c) = a∘b - a + a∘c. Immutable after
// validation.
struct SkewBrace {
    GroupTable add;
    GroupTable circ;
    std::vector<std::uint8_t> lambda_tab; // lambda_tab[a*n+b] = -a + a∘b

    int n() const { return add.n; }
    int neg(int a) const { return add.inverse(a); }
    int cinv(int a) const { return circ.inverse(a); } // the circle inverse a'
    int lambda(int a, int b) const { return lambda_tab[static_cast<size_t>(a) * n() + b]; }
    int star(int a, int b) const { return add.op(add.op(neg(a), circ.op(a, b)), neg(b)); }
    int add_comm(int a, int b) const {
        return add.op(add.op(add.op(a, b), neg(a)), neg(b));
    }
};

BraceRef share(SkewBrace b);

// Validates both tables as groups ("add"/"circ") and the brace law; throws
// validation_error with the first violated axiom and a witness triple.
SkewBrace validate_brace(const std::vector<int>& add_table,
                         const std::vector<int>& circ_table);
SkewBrace validate_brace(GroupTable add, GroupTable circ);

SkewBrace make_trivial(const GroupTable& g);
SkewBrace make_almost_trivial(const GroupTable& g);
// Brace on Z/n with x∘y = x + y + dxy; requires d | n and every prime
// divisor of n dividing d.
SkewBrace make_c_nd(int n, int d);
// Brace on (Z/p)^2 with (x1,x2)∘(y1,y2) = (x1+y1+x2*y2, x2+y2); p prime.
SkewBrace make_b_p(int p);
// Componentwise tables on pairs flattened row-major (i*|B| + j).
SkewBrace direct_product(const SkewBrace& A, const SkewBrace& B);
// The brace (A, +op, ∘) with the opposite additive group.
SkewBrace opposite_brace(const SkewBrace& A);

struct BraceMorphism {
    BraceRef source, target;
    std::vector<int> map;
    bool bijective() const;
};
// Validates f(x+y) = f(x)+f(y), f(x∘y) = f(x)∘f(y), f(0) = 0.
BraceMorphism make_morphism(BraceRef source, BraceRef target, std::vector<int> map);

struct Ideal {
    BraceRef parent;
    std::vector<int> members; // sorted, contains 0
    bool contains(int x) const;
    // normal in (A,+), normal in (A,∘), lambda-stable
    bool certify(std::string* why = nullptr) const;
};
Ideal make_ideal(BraceRef parent, std::vector<int> members); // throws NotAnIdeal

std::vector<int> lambda_permutation(const SkewBrace& A, int a);

Ideal commutator_ideal(const BraceRef& A); // A' = <[A,A]_+ , A*A>_+
Ideal socle(const BraceRef& A);            // {a : lambda_a = id} ∩ Z(A,+)
Ideal annihilator(const BraceRef& A);      // Soc(A) ∩ Z(A,∘)

struct QuotientBrace {
    BraceRef quotient;
    BraceMorphism projection;
    std::vector<int> coset_rep; // quotient index -> canonical representative
    std::vector<int> coset_of;  // element -> quotient index
};
QuotientBrace quotient_brace(const BraceRef& A, const Ideal& I);

struct Abelianization {
    FinAbGroup group;
    std::vector<ivec> coords; // per element of A
    std::vector<int> witnesses;
    Ideal derived;
};
Abelianization abelianization(const BraceRef& A);

struct BicyclicReport {
    bool bicyclic = false;
    std::optional<std::vector<i64>> add_factors;  // when (A,+) abelian
    std::optional<std::vector<i64>> circ_factors; // when (A,∘) abelian
};
BicyclicReport is_bicyclic(const SkewBrace& A);

// Backtracking on additive generators with invariant prefilters; candidate
// images are matched by element orders in both groups. First-found morphism.
std::optional<BraceMorphism> find_isomorphism(const BraceRef& A, const BraceRef& B);

// Visits every isomorphism A -> B until the visitor returns false.
void for_each_isomorphism(const BraceRef& A, const BraceRef& B,
                          const std::function<bool(const std::vector<int>&)>& visit);

} // namespace skb
