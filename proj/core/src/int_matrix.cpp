#include "skewbrace/int_matrix.hpp"
#include "skewbrace/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace skb {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    IntMatrix r(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const bigint& s = at(i, k);
            if (s == 0) continue;
            for (int j = 0; j < other.cols; ++j) r.at(i, j) += s * other.at(k, j);
        }
    return r;
}

std::vector<bigint> SmithDecomposition::diagonal() const {
    std::vector<bigint> d;
    int n = std::min(S.rows, S.cols);
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(S.at(i, i));
    return d;
}

namespace detail {

i64 mod_reduce(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd_i64(i64 a, i64 b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm_i64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_i64(a, b) * b;
}

i64 exgcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    i64 x1, y1;
    i64 g = exgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 mod_inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    i64 x, y;
    i64 g = exgcd(mod_reduce(a, m), m, x, y);
    if (g != 1) throw inconsistency_error("mod_inverse: not coprime");
    return mod_reduce(x, m);
}

} // namespace detail

namespace {

using detail::exgcd;
using detail::gcd_i64;
using detail::mod_reduce;

struct overflow_signal {};

// int64 with overflow detection; the Smith engine retries with bigint when
// this type throws.
struct cint {
    i64 v = 0;
    cint() = default;
    cint(i64 x) : v(x) {}

    friend cint operator+(cint a, cint b) {
        i64 r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return {r};
    }
    friend cint operator-(cint a, cint b) {
        i64 r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return {r};
    }
    friend cint operator*(cint a, cint b) {
        i64 r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw overflow_signal{};
        return {r};
    }
    friend cint operator/(cint a, cint b) {
        if (a.v == std::numeric_limits<i64>::min() && b.v == -1) throw overflow_signal{};
        return {a.v / b.v};
    }
    cint operator-() const {
        if (v == std::numeric_limits<i64>::min()) throw overflow_signal{};
        return {-v};
    }
    friend bool operator==(cint a, cint b) { return a.v == b.v; }
    friend bool operator<(cint a, cint b) { return a.v < b.v; }
    friend bool operator>(cint a, cint b) { return a.v > b.v; }
};

template <class T> bool is_zero(const T& x) { return x == T(0); }
template <class T> bool is_neg(const T& x) { return x < T(0); }

cint abs_val(cint x) { return is_neg(x) ? -x : x; }
bigint abs_val(const bigint& x) { return x < 0 ? bigint(-x) : x; }

// Quotient with remainder of minimal absolute value.
template <class T> T round_div(const T& a, const T& b) {
    T q = a / b;
    T r = a - q * b;
    T tr = r + r;
    T ab = is_neg(b) ? -b : b;
    if (is_neg(tr) ? (-tr > ab || -tr == ab) : (tr > ab)) {
        bool same_sign = is_neg(r) == is_neg(b);
        q = same_sign ? q + T(1) : q - T(1);
    }
    return q;
}

template <class T> struct SmithEngine {
    int r, c;
    std::vector<T> S, U, V, Uinv;
    bool track_uinv;

    T& s(int i, int j) { return S[static_cast<size_t>(i) * c + j]; }
    T& u(int i, int j) { return U[static_cast<size_t>(i) * r + j]; }
    T& ui(int i, int j) { return Uinv[static_cast<size_t>(i) * r + j]; }
    T& v(int i, int j) { return V[static_cast<size_t>(i) * c + j]; }

    SmithEngine(int rows, int cols, bool uinv) : r(rows), c(cols), track_uinv(uinv) {
        S.assign(static_cast<size_t>(r) * c, T(0));
        U.assign(static_cast<size_t>(r) * r, T(0));
        V.assign(static_cast<size_t>(c) * c, T(0));
        for (int i = 0; i < r; ++i) u(i, i) = T(1);
        for (int j = 0; j < c; ++j) v(j, j) = T(1);
        if (track_uinv) {
            Uinv.assign(static_cast<size_t>(r) * r, T(0));
            for (int i = 0; i < r; ++i) ui(i, i) = T(1);
        }
    }

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c; ++k) std::swap(s(i, k), s(j, k));
        for (int k = 0; k < r; ++k) std::swap(u(i, k), u(j, k));
        if (track_uinv)
            for (int k = 0; k < r; ++k) std::swap(ui(k, i), ui(k, j));
    }
    // row i -= q * row j
    void row_axpy(int i, int j, const T& q) {
        for (int k = 0; k < c; ++k) s(i, k) = s(i, k) - q * s(j, k);
        for (int k = 0; k < r; ++k) u(i, k) = u(i, k) - q * u(j, k);
        if (track_uinv)
            for (int k = 0; k < r; ++k) ui(k, j) = ui(k, j) + q * ui(k, i);
    }
    void row_negate(int i) {
        for (int k = 0; k < c; ++k) s(i, k) = -s(i, k);
        for (int k = 0; k < r; ++k) u(i, k) = -u(i, k);
        if (track_uinv)
            for (int k = 0; k < r; ++k) ui(k, i) = -ui(k, i);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r; ++k) std::swap(s(k, i), s(k, j));
        for (int k = 0; k < c; ++k) std::swap(v(k, i), v(k, j));
    }
    // col i -= q * col j
    void col_axpy(int i, int j, const T& q) {
        for (int k = 0; k < r; ++k) s(k, i) = s(k, i) - q * s(k, j);
        for (int k = 0; k < c; ++k) v(k, i) = v(k, i) - q * v(k, j);
    }

    bool find_pivot(int t, int& pi, int& pj) {
        bool found = false;
        T best(0);
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                if (is_zero(s(i, j))) continue;
                T a = abs_val(s(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        int n = std::min(r, c);
        for (int t = 0; t < n; ++t) {
            for (;;) {
                int pi, pj;
                if (!find_pivot(t, pi, pj)) return;
                row_swap(t, pi);
                col_swap(t, pj);
                bool clean = true;
                for (int i = t + 1; i < r; ++i) {
                    if (is_zero(s(i, t))) continue;
                    T q = round_div(s(i, t), s(t, t));
                    if (!is_zero(q)) row_axpy(i, t, q);
                    if (!is_zero(s(i, t))) clean = false;
                }
                if (!clean) continue;
                for (int j = t + 1; j < c; ++j) {
                    if (is_zero(s(t, j))) continue;
                    T q = round_div(s(t, j), s(t, t));
                    if (!is_zero(q)) col_axpy(j, t, q);
                    if (!is_zero(s(t, j))) clean = false;
                }
                if (!clean) continue;
                // pivot must divide every remaining entry for the chain
                bool bump = false;
                for (int i = t + 1; i < r && !bump; ++i)
                    for (int j = t + 1; j < c && !bump; ++j) {
                        T rem = s(i, j) - (s(i, j) / s(t, t)) * s(t, t);
                        if (!is_zero(rem)) {
                            row_axpy(t, i, T(-1)); // row t += row i
                            bump = true;
                        }
                    }
                if (bump) continue;
                if (is_neg(s(t, t))) row_negate(t);
                break;
            }
        }
    }
};

struct RawSnf {
    int rows = 0, cols = 0;
    std::vector<bigint> U, S, V, Uinv;
};

template <class T> bigint to_bigint(const T& x);
template <> bigint to_bigint<cint>(const cint& x) { return bigint(x.v); }
template <> bigint to_bigint<bigint>(const bigint& x) { return x; }

template <class T>
RawSnf run_engine(const std::vector<ivec>& rows_mat, int rows, int cols, bool need_uinv) {
    SmithEngine<T> eng(rows, cols, need_uinv);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) eng.s(i, j) = T(rows_mat[i][j]);
    eng.run();
    RawSnf out;
    out.rows = rows;
    out.cols = cols;
    out.U.reserve(eng.U.size());
    for (auto& x : eng.U) out.U.push_back(to_bigint(x));
    out.S.reserve(eng.S.size());
    for (auto& x : eng.S) out.S.push_back(to_bigint(x));
    out.V.reserve(eng.V.size());
    for (auto& x : eng.V) out.V.push_back(to_bigint(x));
    if (need_uinv) {
        out.Uinv.reserve(eng.Uinv.size());
        for (auto& x : eng.Uinv) out.Uinv.push_back(to_bigint(x));
    }
    return out;
}

RawSnf run_snf(const std::vector<ivec>& rows_mat, int rows, int cols, bool need_uinv) {
    try {
        return run_engine<cint>(rows_mat, rows, cols, need_uinv);
    } catch (const overflow_signal&) {
        return run_engine<bigint>(rows_mat, rows, cols, need_uinv);
    }
}

bool fits_i64(const bigint& x) {
    return x >= std::numeric_limits<i64>::min() && x <= std::numeric_limits<i64>::max();
}

RawSnf run_snf_big(const IntMatrix& A, bool need_uinv) {
    bool small = true;
    for (const auto& x : A.a)
        if (!fits_i64(x)) {
            small = false;
            break;
        }
    if (small) {
        std::vector<ivec> rows_mat(A.rows, ivec(A.cols));
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j) rows_mat[i][j] = static_cast<i64>(A.at(i, j));
        return run_snf(rows_mat, A.rows, A.cols, need_uinv);
    }
    SmithEngine<bigint> eng(A.rows, A.cols, need_uinv);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) eng.s(i, j) = A.at(i, j);
    eng.run();
    RawSnf out;
    out.rows = A.rows;
    out.cols = A.cols;
    out.U = std::move(eng.U);
    out.S = std::move(eng.S);
    out.V = std::move(eng.V);
    out.Uinv = std::move(eng.Uinv);
    return out;
}

IntMatrix pack(std::vector<bigint>&& data, int r, int c) {
    IntMatrix m(r, c);
    m.a = std::move(data);
    return m;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    RawSnf raw = run_snf_big(A, false);
    SmithDecomposition d;
    d.U = pack(std::move(raw.U), A.rows, A.rows);
    d.S = pack(std::move(raw.S), A.rows, A.cols);
    d.V = pack(std::move(raw.V), A.cols, A.cols);
    return d;
}

SmithWithInverse smith_normal_form_with_inverse(const IntMatrix& A) {
    RawSnf raw = run_snf_big(A, true);
    SmithWithInverse d;
    d.U = pack(std::move(raw.U), A.rows, A.rows);
    d.S = pack(std::move(raw.S), A.rows, A.cols);
    d.V = pack(std::move(raw.V), A.cols, A.cols);
    d.Uinv = pack(std::move(raw.Uinv), A.rows, A.rows);
    return d;
}

namespace detail {

SnfMod snf_mod(const std::vector<ivec>& rows_mat, int rows, int cols, i64 m,
               bool need_uinv) {
    RawSnf raw = run_snf(rows_mat, rows, cols, need_uinv);
    SnfMod out;
    out.rows = rows;
    out.cols = cols;
    auto reduce_mat = [&](const std::vector<bigint>& src, int r, int c) {
        std::vector<ivec> dst(r, ivec(c));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                dst[i][j] = static_cast<i64>(src[static_cast<size_t>(i) * c + j] % m +
                                             (src[static_cast<size_t>(i) * c + j] % m < 0 ? m : 0));
        return dst;
    };
    out.u = reduce_mat(raw.U, rows, rows);
    out.v = reduce_mat(raw.V, cols, cols);
    if (need_uinv) out.uinv = reduce_mat(raw.Uinv, rows, rows);
    int n = std::min(rows, cols);
    out.diag.reserve(n);
    out.diag_mod.resize(n);
    for (int i = 0; i < n; ++i) {
        out.diag.push_back(raw.S[static_cast<size_t>(i) * cols + i]);
        bigint dm = out.diag.back() % m;
        out.diag_mod[i] = static_cast<i64>(dm < 0 ? dm + m : dm);
    }
    return out;
}

} // namespace detail

ModularRowEchelon::ModularRowEchelon(int k, i64 m) : k_(k), m_(m) {
    if (m < 1) throw validation_error("InvalidParameters", "modulus must be >= 1");
    pivot_.assign(k, ivec(k, 0)); // implicit m*e_j rows are 0 mod m
    scratch_.assign(k, 0);
}

void ModularRowEchelon::reduce_in(ivec& row) {
    for (int j = 0; j < k_; ++j) {
        i64 b = row[j];
        if (b == 0) continue;
        i64 a = pivot_[j][j];
        if (a == 0) {
            pivot_[j] = row;
            std::fill(row.begin(), row.end(), 0);
            return;
        }
        if (b % a == 0) {
            i64 q = b / a;
            for (int t = j; t < k_; ++t) {
                __int128 val = static_cast<__int128>(row[t]) -
                               static_cast<__int128>(q) * pivot_[j][t];
                row[t] = static_cast<i64>(((val % m_) + m_) % m_);
            }
            continue;
        }
        i64 x, y;
        i64 g = exgcd(a, b, x, y);
        ivec& p = pivot_[j];
        for (int t = j; t < k_; ++t) {
            __int128 np = static_cast<__int128>(x) * p[t] + static_cast<__int128>(y) * row[t];
            __int128 nr = static_cast<__int128>(a / g) * row[t] -
                          static_cast<__int128>(b / g) * p[t];
            p[t] = static_cast<i64>(((np % m_) + m_) % m_);
            row[t] = static_cast<i64>(((nr % m_) + m_) % m_);
        }
        // row[j] is now 0 exactly; keep reducing the tail
    }
}

void ModularRowEchelon::insert(const ivec& row) {
    for (int j = 0; j < k_; ++j) scratch_[j] = mod_reduce(row[j], m_);
    reduce_in(scratch_);
    std::fill(scratch_.begin(), scratch_.end(), 0);
}

void ModularRowEchelon::insert_sparse(const std::vector<std::pair<int, i64>>& row) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (auto& [j, v] : row) scratch_[j] = mod_reduce(scratch_[j] + v, m_);
    reduce_in(scratch_);
    std::fill(scratch_.begin(), scratch_.end(), 0);
}

std::vector<ivec> solution_lattice_from_echelon(const ModularRowEchelon& ech) {
    int k = ech.dim();
    i64 m = ech.modulus();
    if (m == 1 || k == 0) return {};
    detail::SnfMod snf = detail::snf_mod(ech.basis(), k, k, m, false);
    std::vector<ivec> gens;
    for (int i = 0; i < k; ++i) {
        i64 g = gcd_i64(snf.diag_mod[i], m);
        if (g == 0) g = m;
        i64 t = m / g;
        ivec gen(k);
        bool nonzero = false;
        for (int row = 0; row < k; ++row) {
            __int128 val = static_cast<__int128>(t) * snf.v[row][i];
            gen[row] = static_cast<i64>(((val % m) + m) % m);
            if (gen[row] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(gen));
    }
    return gens;
}

std::vector<ivec> solution_lattice_rows(const std::vector<ivec>& rows, int k, i64 m) {
    if (m == 1 || k == 0) return {};
    ModularRowEchelon ech(k, m);
    for (const auto& r : rows) ech.insert(r);
    return solution_lattice_from_echelon(ech);
}

IntMatrix solution_lattice_mod(const IntMatrix& C, i64 m) {
    if (m < 1) throw validation_error("InvalidParameters", "modulus must be >= 1");
    std::vector<ivec> rows(C.rows, ivec(C.cols));
    for (int i = 0; i < C.rows; ++i)
        for (int j = 0; j < C.cols; ++j) {
            bigint r = C.at(i, j) % m;
            rows[i][j] = static_cast<i64>(r < 0 ? r + m : r);
        }
    std::vector<ivec> gens = solution_lattice_rows(rows, C.cols, m);
    IntMatrix out(C.cols, static_cast<int>(gens.size()));
    for (int j = 0; j < out.cols; ++j)
        for (int i = 0; i < out.rows; ++i) out.at(i, j) = gens[j][i];
    return out;
}

CongruenceSolver::CongruenceSolver(const std::vector<ivec>& cols, int N, i64 m)
    : N_(N), s_(static_cast<int>(cols.size())), m_(m) {
    std::vector<ivec> g(N, ivec(s_, 0));
    for (int j = 0; j < s_; ++j)
        for (int i = 0; i < N; ++i) g[i][j] = mod_reduce(cols[j][i], m);
    detail::SnfMod snf = detail::snf_mod(g, N, s_, m, false);
    u_ = std::move(snf.u);
    v_ = std::move(snf.v);
    diag_ = std::move(snf.diag_mod);
}

std::optional<ivec> CongruenceSolver::solve(const ivec& a) const {
    if (m_ == 1) return ivec(s_, 0);
    ivec y(N_);
    for (int i = 0; i < N_; ++i) {
        __int128 acc = 0;
        for (int j = 0; j < N_; ++j) acc += static_cast<__int128>(u_[i][j]) * a[j];
        y[i] = static_cast<i64>(((acc % m_) + m_) % m_);
    }
    int n = std::min(N_, s_);
    ivec z(s_, 0);
    for (int i = 0; i < N_; ++i) {
        i64 d = i < n ? diag_[i] : 0;
        i64 g = gcd_i64(d, m_);
        if (g == 0) g = m_;
        if (y[i] % g != 0) return std::nullopt;
        if (i < n) {
            i64 md = m_ / g;
            if (md > 1) {
                i64 inv = detail::mod_inverse((d / g) % md, md);
                z[i] = mod_reduce((y[i] / g) % md * inv, md);
            }
        }
    }
    ivec x(s_);
    for (int i = 0; i < s_; ++i) {
        __int128 acc = 0;
        for (int j = 0; j < s_; ++j) acc += static_cast<__int128>(v_[i][j]) * z[j];
        x[i] = static_cast<i64>(((acc % m_) + m_) % m_);
    }
    return x;
}

} // namespace skb
