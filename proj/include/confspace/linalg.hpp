#pragma once

#include "confspace/rational.hpp"

#include <map>
#include <vector>

namespace confspace {

/// Sparse matrix over Q. Never stores zeros.
class SparseRationalMatrix {
public:
    struct Entry {
        size_t row;
        size_t col;
        Rational value;
    };

    SparseRationalMatrix() = default;
    SparseRationalMatrix(size_t rows, size_t cols);

    /// Builds from a triplet list; rejects out-of-range indices, duplicates and zeros.
    static SparseRationalMatrix from_entries(size_t rows, size_t cols, const std::vector<Entry>& entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    /// Accumulates value into (r, c), dropping the entry if it cancels.
    void add(size_t r, size_t c, const Rational& value);
    Rational at(size_t r, size_t c) const;

    const std::map<size_t, Rational>& row(size_t r) const { return data_[r]; }
    std::vector<Entry> entries() const;

    SparseRationalMatrix transpose() const;
    SparseRationalMatrix operator*(const SparseRationalMatrix& o) const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<std::map<size_t, Rational>> data_;
};

/// Rank over Q by fraction-free elimination on primitive integer rows,
/// choosing short pivot rows and sparse pivot columns.
size_t rank(const SparseRationalMatrix& a);

/// A bounded chain complex of finite-dimensional Q-vector spaces.
/// differential[j] maps degree j to degree j-1 (rows index degree j-1).
struct ChainComplex {
    std::map<int, size_t> dims;
    std::map<int, SparseRationalMatrix> differential;
};

/// Throws ContractViolation unless every composite of consecutive differentials is zero.
void check_square_zero(const ChainComplex& c);

/// dim ker d_j - rank d_{j+1} for each j; only nonzero entries are returned.
/// Throws ContractViolation when d^2 != 0.
std::map<int, size_t> homology_dims(const ChainComplex& c);

} // namespace confspace
