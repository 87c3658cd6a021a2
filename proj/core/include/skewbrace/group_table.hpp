#pragma once

#include "skewbrace/abelian.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skb {

// Tables index at most 255 elements so an index fits one byte.
inline constexpr int kMaxOrder = 255;

// Finite group as a Cayley table; the identity is element 0, the row is the
// left operand.
struct GroupTable {
    int n = 0;
    std::vector<std::uint8_t> tab;
    std::vector<std::uint8_t> inv;

    int op(int a, int b) const { return tab[static_cast<size_t>(a) * n + b]; }
    int inverse(int a) const { return inv[a]; }
    int power(int a, i64 e) const;
    int element_order(int a) const;
    bool abelian() const;
    GroupTable opposite() const;

    bool operator==(const GroupTable& o) const { return n == o.n && tab == o.tab; }
};

// Checks identity at index 0, Latin-square rows/columns and associativity;
// throws validation_error ("IdentityMismatch" / "NotAGroup") naming `which`
// and a witness. Computes the inverse table.
GroupTable validate_group(int n, const std::vector<int>& table,
                          const std::string& which = "group");

GroupTable cyclic_group(int n);
GroupTable klein_group();
GroupTable symmetric3_group();
GroupTable quaternion_group();
GroupTable dihedral_group(int order); // order = 2n

std::vector<int> group_center(const GroupTable& g);
std::vector<int> group_commutator_subgroup(const GroupTable& g);
std::vector<int> subgroup_closure(const GroupTable& g, std::vector<int> seeds);
bool is_cyclic_group(const GroupTable& g);

// Quotient by a normal subgroup; cosets are labeled by their smallest
// member, the identity coset first. coset_of_out (optional) receives the
// element -> quotient index map.
GroupTable quotient_group(const GroupTable& g, const std::vector<int>& normal_sub,
                          std::vector<int>* coset_of_out = nullptr);

// Invariant factors of an abelian table, per-element coordinates, and one
// witness element per factor.
struct AbelianStructure {
    FinAbGroup group;
    std::vector<ivec> elem_coords;
    std::vector<int> witnesses;
};
AbelianStructure abelian_structure(const GroupTable& g);

} // namespace skb
