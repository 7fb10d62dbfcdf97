#pragma once

#include "enhom/util.hpp"

#include <map>
#include <vector>

namespace enhom {

/// Column-major sparse matrix with exact integer entries. No explicit zeros
/// are stored; add() accumulates and erases entries that cancel.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(long rows, long cols) : rows_(rows), cols_(cols), cols_data_(static_cast<size_t>(cols)) {}

    static SparseMat identity(long k);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const;
    bool is_zero() const { return nnz() == 0; }

    void add(long r, long c, i64 v);
    const std::map<long, i64>& col(long c) const { return cols_data_[static_cast<size_t>(c)]; }

    SparseMat transpose() const;
    SparseMat scaled(i64 s) const;

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
    bool operator==(const SparseMat& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && cols_data_ == o.cols_data_;
    }

    /// (row, col, value) triplets sorted by (col, row).
    std::vector<std::tuple<long, long, i64>> triplets() const;

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<std::map<long, i64>> cols_data_;
};

} // namespace enhom
