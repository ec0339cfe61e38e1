#pragma once

#include <cstdint>
#include <vector>

#include "pfa/errors.hpp"

namespace pfa {

// Exact integer and prime-field linear algebra sized for bar-resolution
// cochain complexes: row counts may be large (streamed), column counts stay
// in the thousands. All integer arithmetic is checked for overflow.

using i64 = std::int64_t;

struct SparseRow {
    std::vector<std::pair<int, i64>> entries;  // (column, value), column-sorted
};

// Dense matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static IntMat identity(int n);
    IntMat transposed() const;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

// Incremental integer row-echelon reduction (Hermite-style, gcd pivots).
// Feed rows one at a time; maintains pivot rows over a fixed column count.
class RowEchelon {
public:
    explicit RowEchelon(int cols) : cols_(cols) {}
    // Reduces the row against current pivots; absorbs any nonzero remainder
    // as a new pivot row. Returns true if the row added to the row space.
    bool add_row(std::vector<i64> row);
    bool add_row(const SparseRow& row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    // Pivot rows sorted by leading column.
    std::vector<std::vector<i64>> basis() const;
    int cols() const { return cols_; }

private:
    int cols_;
    // leading column -> row
    std::vector<int> pivot_col_;                 // sorted leading columns
    std::vector<std::vector<i64>> pivots_;       // aligned with pivot_col_
};

// Kernel of a dense integer matrix (rows x cols) as a lattice basis; each
// basis vector is a column of the result. Uses column reduction; suitable
// for cols up to a few thousand.
IntMat integer_kernel(const IntMat& m);

// Smith normal form restricted to what the cohomology quotient needs:
// returns diag entries d1 | d2 | ... (trailing zeros for rank deficit)
// together with unimodular U (rows x rows) with U*A*V = D.
struct SmithResult {
    std::vector<i64> diag;  // length min(rows, cols)
    IntMat u, u_inv;        // rows x rows
    IntMat v;               // cols x cols
};
SmithResult smith_normal_form(IntMat a);

// Solve A x = b over the integers; A dense (rows x cols). Returns empty
// optional if no integer solution exists.
bool solve_integer(const IntMat& a, const std::vector<i64>& b, std::vector<i64>& x);

// Lattice {t : A t = 0 mod m} for dense A, as column basis (cols x k).
// Computed from the Smith form of A.
IntMat kernel_mod(const IntMat& a, i64 m);

// --- prime field ------------------------------------------------------------

// Incremental row echelon over F_p with dense pivot rows.
class FpEchelon {
public:
    FpEchelon(int cols, i64 p) : cols_(cols), p_(p) {}
    // Returns the fully reduced row (empty if it reduced to zero); if it was
    // nonzero it has been normalized (leading 1) and recorded as a pivot.
    bool add_row(std::vector<i64> row);
    bool add_row(const SparseRow& row);
    // Reduce without recording; result left in `row`.
    void reduce(std::vector<i64>& row) const;
    int rank() const { return static_cast<int>(pivot_col_.size()); }
    const std::vector<int>& pivot_cols() const { return pivot_col_; }
    // Kernel basis as columns (cols x nullity).
    IntMat kernel() const;

private:
    int cols_;
    i64 p_;
    std::vector<int> pivot_col_;
    std::vector<int> col_to_pivot_;  // lazily sized
    std::vector<std::vector<i64>> pivots_;
};

}  // namespace pfa
