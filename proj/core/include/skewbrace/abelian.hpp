#pragma once

#include "skewbrace/int_matrix.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace skb {

class QuotientSolver;

// A finite abelian group in invariant-factor form [d1,...,dk] with
// 1 < d1 | d2 | ... (empty list = trivial group). When the group arose as a
// subquotient of (Z/m)^N the generator witnesses and a coordinate solver are
// attached.
struct FinAbGroup {
    std::vector<i64> factors;
    i64 ambient_modulus = 0; // 0 for abstract groups
    std::vector<ivec> gens;  // ambient witnesses, one per factor
    std::shared_ptr<const QuotientSolver> solver;

    bigint order() const;
    i64 exponent() const { return factors.empty() ? 1 : factors.back(); }
    int rank() const { return static_cast<int>(factors.size()); }
    bool trivial() const { return factors.empty(); }

    static FinAbGroup from_factors(std::vector<i64> cyclic_orders);
};

// Canonical divisibility-chain form of ⊕ Z/c over a list of cyclic orders.
std::vector<i64> canonical_invariant_factors(std::vector<i64> cyclic_orders);

// Structure of span(gens_G)/span(gens_H) inside (Z/m)^N, with a solver from
// ambient elements of span(G) to quotient coordinates. Throws
// validation_error("NotInSpan") if some H generator is outside span(G).
FinAbGroup quotient_structure(i64 m, const std::vector<ivec>& gens_G,
                              const std::vector<ivec>& gens_H, int N);

FinAbGroup subgroup_span(i64 m, const std::vector<ivec>& vectors, int N);

class QuotientSolver {
public:
    // Coordinates of `ambient` as a Z-combination of the G generators;
    // nullopt when not in span(G).
    std::optional<ivec> coords_in_span(const ivec& ambient) const;
    // Quotient coordinates (length = number of invariant factors).
    std::optional<ivec> coords(const ivec& ambient) const;

    i64 modulus() const { return m_; }
    int ambient_dim() const { return N_; }

private:
    friend FinAbGroup quotient_structure(i64, const std::vector<ivec>&,
                                         const std::vector<ivec>&, int);
    i64 m_ = 1;
    int N_ = 0, s_ = 0;
    std::vector<ivec> gcols_;     // s columns in (Z/m)^N
    CongruenceSolver gsolve_;     // solves G x == a (mod m)
    std::vector<ivec> ul_;        // s x s, mod m
    std::vector<i64> dall_;       // all s diagonal entries of the relation SNF
    std::vector<int> nontrivial_; // positions with dall > 1
};

// Hom(A, B) = ⊕_{(i,j)} Z/gcd(d_i, e_j); homomorphisms are represented by
// coordinates over the index pairs with gcd > 1, or by matrices of B-coords
// of the images of A's generators.
struct HomGroup {
    std::vector<i64> src_factors, dst_factors;
    std::vector<std::pair<int, int>> index; // (i, j), row-major, gcd > 1 only
    std::vector<i64> cyclic_factors;        // gcd(d_i, e_j) per index entry
    FinAbGroup structure;                   // canonical invariant factors

    bigint order() const;
    // Value on the element of A with coordinates x, for the homomorphism
    // with coordinates c.
    ivec apply(const ivec& c, const ivec& x) const;
    // Image matrix of the generator homomorphism for index entry t.
    std::vector<ivec> generator_matrix(int t) const;
    // Coordinates of the homomorphism sending A generator i to the element
    // with coordinates images[i]; nullopt when this is not a valid hom.
    std::optional<ivec> coords_of_matrix(const std::vector<ivec>& images) const;
};

HomGroup hom_generators(const FinAbGroup& A, const FinAbGroup& B);

FinAbGroup tensor_product(const FinAbGroup& A, const FinAbGroup& B);

// Coordinate space ⊕ Z/f_i (the f_i need not form a chain); embedded into
// (Z/L)^r with L = lcm(f_i) for subgroup computations.
struct CyclicSpace {
    std::vector<i64> mods;
    i64 embed_modulus() const;
    ivec embed(const ivec& coords) const;
    ivec reduce(const ivec& coords) const;
};

// Subgroup of ⊕ Z/f_i generated by coordinate vectors.
struct Subgroup {
    CyclicSpace space;
    std::vector<ivec> gens;
    FinAbGroup structure; // structure of the subgroup itself
    std::shared_ptr<const CongruenceSolver> members;

    bool contains(const ivec& coords) const;
    bigint order() const { return structure.order(); }
};

Subgroup make_subgroup(const std::vector<i64>& mods, const std::vector<ivec>& gens);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool subgroup_contains(const Subgroup& a, const Subgroup& b); // b <= a

// Kernel of the homomorphism ⊕ Z/src_i -> ⊕ Z/dst_j whose matrix rows are
// the dst-coordinates of the src generator images. Returns generating
// coordinate vectors of the kernel.
std::vector<ivec> kernel_generators(const std::vector<i64>& src,
                                    const std::vector<i64>& dst,
                                    const std::vector<ivec>& images);

} // namespace skb
