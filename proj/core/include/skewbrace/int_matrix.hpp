#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace skb {

using bigint = boost::multiprecision::cpp_int;
using i64 = std::int64_t;
using ivec = std::vector<i64>; // vector of residues, reduced into [0, m)

// Dense integer matrix with arbitrary-precision entries, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<bigint> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    bigint& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const bigint& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n);
    IntMatrix mul(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;
};

// U * A * V = S with S diagonal, d1 | d2 | ..., |det U| = |det V| = 1.
struct SmithDecomposition {
    IntMatrix U, S, V;
    std::vector<bigint> diagonal() const;
};

// Deterministic pivoting: smallest nonzero absolute value, then lowest
// (row, col). Entries are eliminated over Z; no modular reduction.
SmithDecomposition smith_normal_form(const IntMatrix& A);

// As above but also tracks U^{-1} (needed for generator witnesses).
struct SmithWithInverse {
    IntMatrix U, S, V, Uinv;
};
SmithWithInverse smith_normal_form_with_inverse(const IntMatrix& A);

// Generators of {x in Z^k : C x == 0 (mod m)}, reduced mod m, as matrix
// columns. Computed from the Smith form of C with the m*identity relations
// adjoined; zero generators are dropped. m >= 1.
IntMatrix solution_lattice_mod(const IntMatrix& C, i64 m);

// Row-level variant used by the cohomology pipeline: `rows` are the
// constraint rows (length k each); returns generating vectors.
std::vector<ivec> solution_lattice_rows(const std::vector<ivec>& rows, int k, i64 m);

class ModularRowEchelon;
std::vector<ivec> solution_lattice_from_echelon(const ModularRowEchelon& ech);

// Incremental echelonization of the lattice spanned by the given rows
// together with m*e_i for every i. Entries stay reduced into [0, m).
class ModularRowEchelon {
public:
    ModularRowEchelon(int k, i64 m);
    void insert(const ivec& row);
    void insert_sparse(const std::vector<std::pair<int, i64>>& row);
    // k x k upper-triangular basis of span(rows) + m*Z^k.
    const std::vector<ivec>& basis() const { return pivot_; }
    int dim() const { return k_; }
    i64 modulus() const { return m_; }

private:
    int k_;
    i64 m_;
    std::vector<ivec> pivot_; // pivot_[j] has leading column j
    ivec scratch_;
    void reduce_in(ivec& row);
};

// Solves sum_j x_j * col_j == a (mod m) for integer x, where the columns are
// vectors in (Z/m)^N. Solutions are reduced mod m.
class CongruenceSolver {
public:
    CongruenceSolver() = default;
    CongruenceSolver(const std::vector<ivec>& cols, int N, i64 m);
    std::optional<ivec> solve(const ivec& a) const;
    int num_cols() const { return s_; }

private:
    int N_ = 0, s_ = 0;
    i64 m_ = 1;
    std::vector<ivec> u_;    // N x N, mod m
    std::vector<ivec> v_;    // s x s, mod m
    ivec diag_;              // min(N, s) diagonal entries, mod m
};

namespace detail {

i64 mod_reduce(i64 a, i64 m);
i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);
// g = a*x + b*y
i64 exgcd(i64 a, i64 b, i64& x, i64& y);
i64 mod_inverse(i64 a, i64 m);

// Smith form of an int64 matrix with all transforms reduced mod m (diagonal
// returned both exactly-reduced mod m and with a zero flag). Falls back to
// arbitrary precision internally if intermediate values overflow.
struct SnfMod {
    int rows = 0, cols = 0;
    std::vector<ivec> u, v, uinv; // mod m (uinv only if requested)
    ivec diag_mod;                // diag(S) mod m, length min(rows, cols)
    std::vector<bigint> diag;     // exact diagonal
};
SnfMod snf_mod(const std::vector<ivec>& rows_mat, int rows, int cols, i64 m,
               bool need_uinv);

} // namespace detail

} // namespace skb
