#include "pfa/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace pfa {

namespace {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw CapacityError("integer overflow (add)");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("integer overflow (mul)");
    return r;
}

// g = gcd(a,b) >= 0 with x*a + y*b = g
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 pos_gcd(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw ParameterError("mat_mul: shape mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = checked_add(z.at(i, j), checked_mul(v, y.at(k, j)));
        }
    return z;
}

// --- RowEchelon --------------------------------------------------------------

bool RowEchelon::add_row(std::vector<i64> row) {
    if (static_cast<int>(row.size()) != cols_) throw ParameterError("RowEchelon: bad row size");
    int c = 0;
    while (c < cols_) {
        while (c < cols_ && row[c] == 0) ++c;
        if (c == cols_) return false;
        auto it = std::lower_bound(pivot_col_.begin(), pivot_col_.end(), c);
        if (it == pivot_col_.end() || *it != c) {
            // new pivot: normalize sign
            if (row[c] < 0)
                for (auto& v : row) v = -v;
            size_t pos = static_cast<size_t>(it - pivot_col_.begin());
            pivot_col_.insert(it, c);
            pivots_.insert(pivots_.begin() + pos, std::move(row));
            return true;
        }
        auto& piv = pivots_[static_cast<size_t>(it - pivot_col_.begin())];
        i64 a = piv[c], b = row[c];
        if (b % a == 0) {
            i64 q = b / a;
            for (int j = c; j < cols_; ++j)
                row[j] = checked_add(row[j], checked_mul(-q, piv[j]));
        } else {
            i64 x, y;
            i64 g = ext_gcd(a, b, x, y);
            i64 au = a / g, bu = b / g;
            for (int j = c; j < cols_; ++j) {
                i64 p = piv[j], r = row[j];
                piv[j] = checked_add(checked_mul(x, p), checked_mul(y, r));
                row[j] = checked_add(checked_mul(-bu, p), checked_mul(au, r));
            }
        }
    }
    return false;
}

bool RowEchelon::add_row(const SparseRow& row) {
    std::vector<i64> dense(cols_, 0);
    for (auto [c, v] : row.entries) dense[c] = checked_add(dense[c], v);
    return add_row(std::move(dense));
}

std::vector<std::vector<i64>> RowEchelon::basis() const { return pivots_; }

// --- integer kernel -----------------------------------------------------------

IntMat integer_kernel(const IntMat& m) {
    // Row-reduce [M^T | I]; pivot rows with zero left part carry kernel vectors.
    int r = m.rows, c = m.cols;
    RowEchelon ech(r + c);
    for (int i = 0; i < c; ++i) {
        std::vector<i64> row(r + c, 0);
        for (int j = 0; j < r; ++j) row[j] = m.at(j, i);
        row[r + i] = 1;
        ech.add_row(std::move(row));
    }
    std::vector<std::vector<i64>> ker;
    for (const auto& row : ech.basis()) {
        bool left_zero = true;
        for (int j = 0; j < r && left_zero; ++j)
            if (row[j] != 0) left_zero = false;
        if (left_zero) ker.emplace_back(row.begin() + r, row.end());
    }
    IntMat out(c, static_cast<int>(ker.size()));
    for (int j = 0; j < out.cols; ++j)
        for (int i = 0; i < c; ++i) out.at(i, j) = ker[j][i];
    return out;
}

// --- Smith normal form ---------------------------------------------------------

SmithResult smith_normal_form(IntMat a) {
    int rows = a.rows, cols = a.cols;
    SmithResult res;
    res.u = IntMat::identity(rows);
    res.u_inv = IntMat::identity(rows);
    res.v = IntMat::identity(cols);

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < rows; ++c) std::swap(res.u.at(i, c), res.u.at(j, c));
        for (int r = 0; r < rows; ++r) std::swap(res.u_inv.at(r, i), res.u_inv.at(r, j));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < cols; ++r) std::swap(res.v.at(r, i), res.v.at(r, j));
    };
    auto row_add = [&](int dst, int src, i64 k) {  // R_dst += k R_src
        if (k == 0) return;
        for (int c = 0; c < cols; ++c)
            a.at(dst, c) = checked_add(a.at(dst, c), checked_mul(k, a.at(src, c)));
        for (int c = 0; c < rows; ++c)
            res.u.at(dst, c) = checked_add(res.u.at(dst, c), checked_mul(k, res.u.at(src, c)));
        for (int r = 0; r < rows; ++r)
            res.u_inv.at(r, src) =
                checked_add(res.u_inv.at(r, src), checked_mul(-k, res.u_inv.at(r, dst)));
    };
    auto col_add = [&](int dst, int src, i64 k) {  // C_dst += k C_src
        if (k == 0) return;
        for (int r = 0; r < rows; ++r)
            a.at(r, dst) = checked_add(a.at(r, dst), checked_mul(k, a.at(r, src)));
        for (int r = 0; r < cols; ++r)
            res.v.at(r, dst) = checked_add(res.v.at(r, dst), checked_mul(k, res.v.at(r, src)));
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < rows; ++c) res.u.at(i, c) = -res.u.at(i, c);
        for (int r = 0; r < rows; ++r) res.u_inv.at(r, i) = -res.u_inv.at(r, i);
    };

    int n = std::min(rows, cols);
    for (int k = 0; k < n; ++k) {
        // find minimal nonzero |entry| in the remaining block
        int pr = -1, pc = -1;
        i64 best = 0;
        for (int r = k; r < rows; ++r)
            for (int c = k; c < cols; ++c) {
                i64 v = a.at(r, c) < 0 ? -a.at(r, c) : a.at(r, c);
                if (v != 0 && (pr < 0 || v < best)) { best = v; pr = r; pc = c; }
            }
        if (pr < 0) break;
        row_swap(k, pr);
        col_swap(k, pc);
        bool again = true;
        while (again) {
            again = false;
            for (int r = k + 1; r < rows; ++r) {
                if (a.at(r, k) == 0) continue;
                i64 q = a.at(r, k) / a.at(k, k);
                row_add(r, k, -q);
                if (a.at(r, k) != 0) {  // remainder smaller than pivot: swap up
                    row_swap(k, r);
                    again = true;
                }
            }
            for (int c = k + 1; c < cols; ++c) {
                if (a.at(k, c) == 0) continue;
                i64 q = a.at(k, c) / a.at(k, k);
                col_add(c, k, -q);
                if (a.at(k, c) != 0) {
                    col_swap(k, c);
                    again = true;
                }
            }
        }
        if (a.at(k, k) < 0) row_neg(k);
    }
    // enforce divisibility d_k | d_{k+1}
    for (int k = 0; k + 1 < n; ++k) {
        for (int j = k + 1; j < n; ++j) {
            i64 dk = a.at(k, k), dj = a.at(j, j);
            if (dk == 0 && dj != 0) {  // move nonzero up
                row_swap(k, j);
                col_swap(k, j);
                std::swap(dk, dj);
            }
            if (dk == 0 || dj % dk == 0) continue;
            // standard trick: add column j to column k, then re-reduce 2x2 block
            col_add(k, j, 1);
            // eliminate below/right again
            while (a.at(j, k) != 0 || a.at(k, j) != 0) {
                if (a.at(j, k) != 0) {
                    if (std::abs(a.at(j, k)) < std::abs(a.at(k, k))) row_swap(k, j);
                    i64 q = a.at(j, k) / a.at(k, k);
                    row_add(j, k, -q);
                    if (a.at(j, k) != 0) row_swap(k, j);
                }
                if (a.at(k, j) != 0) {
                    if (std::abs(a.at(k, j)) < std::abs(a.at(k, k))) col_swap(k, j);
                    i64 q = a.at(k, j) / a.at(k, k);
                    col_add(j, k, -q);
                    if (a.at(k, j) != 0) col_swap(k, j);
                }
            }
            if (a.at(k, k) < 0) row_neg(k);
            if (a.at(j, j) < 0) row_neg(j);
        }
    }
    res.diag.resize(n);
    for (int k = 0; k < n; ++k) res.diag[k] = a.at(k, k);
    return res;
}

bool solve_integer(const IntMat& a, const std::vector<i64>& b, std::vector<i64>& x) {
    if (static_cast<int>(b.size()) != a.rows) throw ParameterError("solve_integer: bad rhs");
    SmithResult s = smith_normal_form(a);
    // U A V = D; solve D y = U b, x = V y
    std::vector<i64> ub(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j)
            ub[i] = checked_add(ub[i], checked_mul(s.u.at(i, j), b[j]));
    std::vector<i64> y(a.cols, 0);
    int n = static_cast<int>(s.diag.size());
    for (int i = 0; i < a.rows; ++i) {
        i64 d = i < n ? s.diag[i] : 0;
        if (d == 0) {
            if (ub[i] != 0) return false;
        } else {
            if (ub[i] % d != 0) return false;
            if (i < a.cols) y[i] = ub[i] / d;
        }
    }
    x.assign(a.cols, 0);
    for (int i = 0; i < a.cols; ++i)
        for (int j = 0; j < a.cols; ++j)
            x[i] = checked_add(x[i], checked_mul(s.v.at(i, j), y[j]));
    return true;
}

IntMat kernel_mod(const IntMat& a, i64 m) {
    if (m <= 0) throw ParameterError("kernel_mod: modulus must be positive");
    // Row space is what matters; reduce tall matrices first.
    RowEchelon ech(a.cols);
    for (int r = 0; r < a.rows; ++r) {
        std::vector<i64> row(a.cols);
        for (int c = 0; c < a.cols; ++c) row[c] = a.at(r, c);
        ech.add_row(std::move(row));
    }
    auto rows = ech.basis();
    IntMat red(static_cast<int>(rows.size()), a.cols);
    for (int r = 0; r < red.rows; ++r)
        for (int c = 0; c < a.cols; ++c) red.at(r, c) = rows[r][c];
    SmithResult s = smith_normal_form(red);
    int n = std::min(red.rows, red.cols);
    // t = V u with d_i u_i = 0 mod m
    IntMat out(a.cols, a.cols);
    for (int j = 0; j < a.cols; ++j) {
        i64 d = j < n ? s.diag[j] : 0;
        i64 scale = (d == 0) ? 1 : m / pos_gcd(d, m);
        for (int i = 0; i < a.cols; ++i) out.at(i, j) = checked_mul(s.v.at(i, j), scale);
    }
    return out;
}

// --- FpEchelon ------------------------------------------------------------------

// Entries accumulate unreduced in i64 during a row's reduction (pivot rows are
// stored reduced in [0,p), so growth per elimination is < p^2 and a row can
// absorb ~2^63 / p^2 eliminations before needing a fold); one mod pass happens
// when a row is stored as a pivot. Requires p < 2^15.
bool FpEchelon::add_row(std::vector<i64> row) {
    if (static_cast<int>(row.size()) != cols_) throw ParameterError("FpEchelon: bad row size");
    if (p_ >= (1 << 15)) throw CapacityError("FpEchelon: modulus too large");
    for (auto& v : row) { v %= p_; if (v < 0) v += p_; }
    if (col_to_pivot_.empty()) col_to_pivot_.assign(cols_, -1);
    i64 budget = (std::numeric_limits<i64>::max() / (p_ * p_)) - 2;
    i64 used = 0;
    int c = 0;
    while (c < cols_) {
        while (c < cols_ && row[c] % p_ == 0) ++c;
        if (c == cols_) return false;
        int pi = col_to_pivot_[c];
        if (pi < 0) {
            for (auto& v : row) { v %= p_; if (v < 0) v += p_; }
            // normalize to leading 1
            i64 inv = 1, v = row[c], e = p_ - 2;  // Fermat inverse
            while (e > 0) {
                if (e & 1) inv = inv * v % p_;
                v = v * v % p_;
                e >>= 1;
            }
            if (inv != 1)
                for (int j = c; j < cols_; ++j) row[j] = row[j] * inv % p_;
            col_to_pivot_[c] = static_cast<int>(pivots_.size());
            pivot_col_.push_back(c);
            pivots_.push_back(std::move(row));
            return true;
        }
        const auto& piv = pivots_[pi];
        i64 f = (p_ - row[c] % p_) % p_;  // row += f * piv kills column c mod p
        if (f != 0) {
            const i64* pv = piv.data();
            i64* rw = row.data();
            for (int j = c; j < cols_; ++j) rw[j] += f * pv[j];
        }
        row[c] = 0;
        if (++used >= budget) {
            for (auto& v : row) v %= p_;
            used = 0;
        }
    }
    return false;
}

bool FpEchelon::add_row(const SparseRow& row) {
    std::vector<i64> dense(cols_, 0);
    for (auto [c, v] : row.entries) dense[c] += v;
    return add_row(std::move(dense));
}

void FpEchelon::reduce(std::vector<i64>& row) const {
    for (auto& v : row) { v %= p_; if (v < 0) v += p_; }
    if (col_to_pivot_.empty()) return;
    for (int c = 0; c < cols_; ++c) {
        row[c] %= p_;
        if (row[c] == 0) continue;
        int pi = col_to_pivot_[c];
        if (pi < 0) continue;
        const auto& piv = pivots_[pi];
        i64 f = p_ - row[c];
        for (int j = c; j < cols_; ++j) row[j] += f * piv[j];
        row[c] = 0;
    }
    for (auto& v : row) v %= p_;
}

IntMat FpEchelon::kernel() const {
    std::vector<int> c2p = col_to_pivot_;
    if (c2p.empty()) c2p.assign(cols_, -1);
    std::vector<int> free_cols, piv_sorted = pivot_col_;
    std::sort(piv_sorted.begin(), piv_sorted.end());
    for (int c = 0; c < cols_; ++c)
        if (c2p[c] < 0) free_cols.push_back(c);
    IntMat out(cols_, static_cast<int>(free_cols.size()));
    for (size_t fj = 0; fj < free_cols.size(); ++fj) {
        std::vector<i64> x(cols_, 0);
        x[free_cols[fj]] = 1;
        // back-substitute in descending pivot-column order
        for (int k = static_cast<int>(piv_sorted.size()) - 1; k >= 0; --k) {
            int c = piv_sorted[k];
            const auto& piv = pivots_[c2p[c]];
            i64 s = 0;
            for (int j = c + 1; j < cols_; ++j)
                if (x[j]) s = (s + piv[j] * x[j]) % p_;
            x[c] = (p_ - s) % p_;
        }
        for (int i = 0; i < cols_; ++i) out.at(i, static_cast<int>(fj)) = x[i];
    }
    return out;
}

}  // namespace pfa
