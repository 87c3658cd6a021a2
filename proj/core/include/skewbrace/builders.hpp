#pragma once

#include "skewbrace/brace.hpp"

#include <string>

namespace skb {

// Brace builder mini-language:
//   c:n,d                 the brace C_(n,d) on Z/n with x∘y = x+y+dxy
//   bp:p                  the brace B_p on (Z/p)^2
//   trivial:<group>       both operations equal the group law
//   almosttrivial:<group> add = group law, circ = opposite law
//   prod:a|b|...          direct product of brace specs
//   op:<brace>            opposite additive group
// Group specs: cyclic:n, klein:4, s3, quaternion:8, dihedral:2n.
SkewBrace build_brace(const std::string& spec);
GroupTable build_group(const std::string& spec);

} // namespace skb
