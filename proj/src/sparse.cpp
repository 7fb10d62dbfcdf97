#include "enhom/sparse.hpp"

namespace enhom {

SparseMat SparseMat::identity(long k)
{
    SparseMat m(k, k);
    for (long i = 0; i < k; ++i)
        m.add(i, i, 1);
    return m;
}

long SparseMat::nnz() const
{
    long n = 0;
    for (const auto& c : cols_data_)
        n += static_cast<long>(c.size());
    return n;
}

void SparseMat::add(long r, long c, i64 v)
{
    if (v == 0)
        return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw structural_error("SparseMat::add: index out of range");
    auto& col = cols_data_[static_cast<size_t>(c)];
    auto it = col.find(r);
    if (it == col.end()) {
        col.emplace(r, v);
    } else {
        it->second += v;
        if (it->second == 0)
            col.erase(it);
    }
}

SparseMat SparseMat::transpose() const
{
    SparseMat t(cols_, rows_);
    for (long c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[static_cast<size_t>(c)])
            t.add(c, r, v);
    return t;
}

SparseMat SparseMat::scaled(i64 s) const
{
    SparseMat m(rows_, cols_);
    if (s == 0)
        return m;
    for (long c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[static_cast<size_t>(c)])
            m.add(r, c, v * s);
    return m;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b)
{
    if (a.cols_ != b.rows_)
        throw structural_error("SparseMat: dimension mismatch in product");
    SparseMat m(a.rows_, b.cols_);
    for (long c = 0; c < b.cols_; ++c)
        for (const auto& [k, bv] : b.cols_data_[static_cast<size_t>(c)])
            for (const auto& [r, av] : a.cols_data_[static_cast<size_t>(k)])
                m.add(r, c, av * bv);
    return m;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw structural_error("SparseMat: dimension mismatch in sum");
    SparseMat m = a;
    for (long c = 0; c < b.cols_; ++c)
        for (const auto& [r, v] : b.cols_data_[static_cast<size_t>(c)])
            m.add(r, c, v);
    return m;
}

std::vector<std::tuple<long, long, i64>> SparseMat::triplets() const
{
    std::vector<std::tuple<long, long, i64>> out;
    for (long c = 0; c < cols_; ++c)
        for (const auto& [r, v] : cols_data_[static_cast<size_t>(c)])
            out.emplace_back(r, c, v);
    return out;
}

} // namespace enhom
