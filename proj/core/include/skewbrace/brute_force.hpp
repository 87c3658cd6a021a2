#pragma once

#include "skewbrace/brace.hpp"

namespace skb::oracle {

// Independent H²_b oracle for desk-size inputs: enumerates every border-zero
// (alpha, mu) pair over Z/m, filters by the factor-set conditions, and
// quotients by the enumerated coboundaries. No linear algebra involved.
// Guarded to |Q| <= 4 and m^(2(|Q|-1)^2) <= 2^24.
struct BruteH2 {
    bigint z_order = 1;  // number of factor sets
    bigint b_order = 1;  // number of coboundaries
    bigint h_order = 1;
    std::vector<i64> invariant_factors;
};

BruteH2 brute_force_h2b(const BraceRef& Q, i64 m);

} // namespace skb::oracle
