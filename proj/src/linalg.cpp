#include "enhom/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace enhom {

std::string Ring::name() const
{
    switch (kind) {
    case RingKind::Q:
        return "q";
    case RingKind::Z:
        return "z";
    case RingKind::Fp:
        return "f:" + std::to_string(p);
    }
    return "?";
}

Ring Ring::parse(const std::string& s)
{
    if (s == "q" || s == "Q")
        return rationals();
    if (s == "z" || s == "Z")
        return integers();
    auto colon = s.find(':');
    if (colon != std::string::npos && (s.substr(0, colon) == "f" || s.substr(0, colon) == "fp")) {
        long p = std::stol(s.substr(colon + 1));
        if (p < 2)
            throw structural_error("Ring::parse: modulus must be a prime >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw structural_error("Ring::parse: modulus is not prime");
        return prime_field(p);
    }
    throw structural_error("Ring::parse: unknown ring '" + s + "'");
}

namespace {

/* Left-looking sparse elimination over a field. FieldOps provides the scalar
 * type and arithmetic. Columns are processed sparsest-first; each new pivot
 * column is normalized so its pivot entry is 1. */
template <typename Ops>
struct Eliminator {
    using V = typename Ops::V;
    Ops ops;
    std::map<long, std::map<long, V>> pivots;   // pivot row -> normalized column
    const std::vector<long>* row_weight = nullptr;

    explicit Eliminator(Ops o) : ops(o) {}

    // reduce col in place against pivots; returns pivot row or -1 if it died
    long reduce(std::map<long, V>& col)
    {
        while (!col.empty()) {
            long hit = -1;
            for (const auto& [r, v] : col)
                if (pivots.count(r)) {
                    hit = r;
                    break;
                }
            if (hit < 0)
                break;
            V factor = col[hit];
            for (const auto& [r, v] : pivots[hit]) {
                auto it = col.find(r);
                V delta = ops.mul(factor, v);
                if (it == col.end()) {
                    V nv = ops.neg(delta);
                    if (!ops.is_zero(nv))
                        col.emplace(r, nv);
                } else {
                    it->second = ops.sub(it->second, delta);
                    if (ops.is_zero(it->second))
                        col.erase(it);
                }
            }
        }
        if (col.empty())
            return -1;
        long prow = col.begin()->first;
        if (row_weight) {
            for (const auto& [r, v] : col)
                if ((*row_weight)[static_cast<size_t>(r)] <
                    (*row_weight)[static_cast<size_t>(prow)])
                    prow = r;
        }
        V inv = ops.inv(col.at(prow));
        for (auto& [r, v] : col)
            v = ops.mul(v, inv);
        return prow;
    }

    void insert_pivot(long row, std::map<long, V> col) { pivots.emplace(row, std::move(col)); }
};

struct QOps {
    using V = mpq_class;
    static V from_i64(i64 x) { return mpq_class(static_cast<long>(x)); }
    static bool is_zero(const V& v) { return sgn(v) == 0; }
    static V mul(const V& a, const V& b) { return a * b; }
    static V sub(const V& a, const V& b) { return a - b; }
    static V neg(const V& a) { return -a; }
    static V inv(const V& a) { return 1 / a; }
};

struct FpOps {
    using V = long;
    long p;
    V from_i64(i64 x) const
    {
        long r = static_cast<long>(x % p);
        return r < 0 ? r + p : r;
    }
    bool is_zero(V v) const { return v == 0; }
    V mul(V a, V b) const { return static_cast<long>((__int128)a * b % p); }
    V sub(V a, V b) const
    {
        long r = a - b;
        return r < 0 ? r + p : r;
    }
    V neg(V a) const { return a == 0 ? 0 : p - a; }
    V inv(V a) const
    {
        // extended Euclid
        long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (r != 1)
            throw structural_error("FpOps::inv: not invertible");
        return t < 0 ? t + p : t;
    }
};

template <typename Ops>
long rank_impl(const SparseMat& m, Ops ops)
{
    using V = typename Ops::V;
    std::vector<long> order(static_cast<size_t>(m.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](long a, long b) {
        return m.col(a).size() < m.col(b).size();
    });
    // prefer pivot rows with few entries overall to limit fill-in
    std::vector<long> row_weight(static_cast<size_t>(m.rows()), 0);
    for (long c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.col(c))
            ++row_weight[static_cast<size_t>(r)];
    Eliminator<Ops> e(ops);
    e.row_weight = &row_weight;
    long rank = 0;
    for (long c : order) {
        std::map<long, V> col;
        for (const auto& [r, v] : m.col(c)) {
            V fv = ops.from_i64(v);
            if (!ops.is_zero(fv))
                col.emplace(r, fv);
        }
        long prow = e.reduce(col);
        if (prow >= 0) {
            ++rank;
            e.insert_pivot(prow, std::move(col));
        }
    }
    return rank;
}

} // namespace

long rank_q(const SparseMat& m)
{
    return rank_impl(m, QOps{});
}

long rank_fp(const SparseMat& m, long p)
{
    return rank_impl(m, FpOps{p});
}

long rank(const SparseMat& m, const Ring& ring)
{
    switch (ring.kind) {
    case RingKind::Q:
        return rank_q(m);
    case RingKind::Fp:
        return rank_fp(m, ring.p);
    case RingKind::Z:
        throw structural_error("rank: use snf for integer matrices");
    }
    return 0;
}

std::vector<std::vector<mpq_class>> kernel_basis_q(const SparseMat& m)
{
    // eliminate columns left to right, tracking the expression of each
    // reduced column in terms of the original ones
    struct Col {
        std::map<long, mpq_class> entries;
        std::map<long, mpq_class> combo; // original column index -> coefficient
    };
    std::map<long, Col> pivots; // pivot row -> column data
    std::vector<std::vector<mpq_class>> kernel;
    for (long c = 0; c < m.cols(); ++c) {
        Col col;
        for (const auto& [r, v] : m.col(c))
            col.entries.emplace(r, mpq_class(static_cast<long>(v)));
        col.combo.emplace(c, mpq_class(1));
        while (!col.entries.empty()) {
            long hit = -1;
            for (const auto& [r, v] : col.entries)
                if (pivots.count(r)) {
                    hit = r;
                    break;
                }
            if (hit < 0)
                break;
            mpq_class factor = col.entries[hit];
            const Col& pc = pivots[hit];
            for (const auto& [r, v] : pc.entries) {
                mpq_class& slot = col.entries[r];
                slot -= factor * v;
                if (sgn(slot) == 0)
                    col.entries.erase(r);
            }
            for (const auto& [k, v] : pc.combo) {
                mpq_class& slot = col.combo[k];
                slot -= factor * v;
                if (sgn(slot) == 0)
                    col.combo.erase(k);
            }
        }
        if (col.entries.empty()) {
            std::vector<mpq_class> vec(static_cast<size_t>(m.cols()));
            for (const auto& [k, v] : col.combo)
                vec[static_cast<size_t>(k)] = v;
            kernel.push_back(std::move(vec));
        } else {
            long prow = col.entries.begin()->first;
            mpq_class inv = 1 / col.entries.at(prow);
            for (auto& [r, v] : col.entries)
                v *= inv;
            for (auto& [k, v] : col.combo)
                v *= inv;
            pivots.emplace(prow, std::move(col));
        }
    }
    return kernel;
}

namespace {

/* Integer matrix in doubly indexed sparse form for SNF. */
struct ZWork {
    std::map<long, std::map<long, mpz_class>> rows; // r -> c -> v
    std::map<long, std::map<long, char>> colindex;  // c -> rows present

    void set(long r, long c, const mpz_class& v)
    {
        if (sgn(v) == 0) {
            auto it = rows.find(r);
            if (it != rows.end()) {
                it->second.erase(c);
                if (it->second.empty())
                    rows.erase(it);
            }
            auto jt = colindex.find(c);
            if (jt != colindex.end()) {
                jt->second.erase(r);
                if (jt->second.empty())
                    colindex.erase(jt);
            }
        } else {
            rows[r][c] = v;
            colindex[c][r] = 1;
        }
    }
    mpz_class get(long r, long c) const
    {
        auto it = rows.find(r);
        if (it == rows.end())
            return 0;
        auto jt = it->second.find(c);
        return jt == it->second.end() ? mpz_class(0) : jt->second;
    }
    bool empty() const { return rows.empty(); }

    // row_r -= q * row_pr
    void row_op(long r, long pr, const mpz_class& q)
    {
        if (sgn(q) == 0)
            return;
        auto src = rows.find(pr);
        if (src == rows.end())
            return;
        std::vector<std::pair<long, mpz_class>> updates(src->second.begin(), src->second.end());
        for (const auto& [c, v] : updates)
            set(r, c, get(r, c) - q * v);
    }
    // col_c -= q * col_pc
    void col_op(long c, long pc, const mpz_class& q)
    {
        if (sgn(q) == 0)
            return;
        auto src = colindex.find(pc);
        if (src == colindex.end())
            return;
        std::vector<long> rws;
        for (const auto& [r, _] : src->second)
            rws.push_back(r);
        for (long r : rws)
            set(r, c, get(r, c) - q * get(r, pc));
    }
};

} // namespace

std::vector<mpz_class> snf(const SparseMat& m)
{
    ZWork w;
    for (const auto& [r, c, v] : m.triplets())
        w.set(r, c, mpz_class(static_cast<long>(v)));

    std::vector<mpz_class> diag;
    while (!w.empty()) {
        // pivot: smallest |value|, then least fill
        long pr = -1, pc = -1;
        mpz_class best = 0;
        size_t best_fill = 0;
        for (const auto& [r, cols] : w.rows)
            for (const auto& [c, v] : cols) {
                mpz_class av = abs(v);
                size_t fill = cols.size() + w.colindex.at(c).size();
                if (pr < 0 || av < best || (av == best && fill < best_fill)) {
                    pr = r;
                    pc = c;
                    best = av;
                    best_fill = fill;
                }
                if (best == 1 && fill <= 2)
                    goto chosen;
            }
    chosen:;
        // make the pivot the lone entry in its row and column; each pivot
        // switch strictly decreases |pivot|, so this terminates
        while (true) {
            bool switched = false;
            // clear the pivot column with row operations
            while (true) {
                mpz_class pv = w.get(pr, pc);
                std::vector<long> rws;
                for (const auto& [r, _] : w.colindex.at(pc))
                    if (r != pr)
                        rws.push_back(r);
                bool moved = false;
                for (long r : rws) {
                    mpz_class v = w.get(r, pc);
                    if (sgn(v) == 0)
                        continue;
                    mpz_class q, rem;
                    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), pv.get_mpz_t());
                    w.row_op(r, pr, q);
                    if (sgn(w.get(r, pc)) != 0) {
                        pr = r; // smaller remainder becomes the pivot
                        moved = true;
                        switched = true;
                        break;
                    }
                }
                if (!moved)
                    break;
            }
            // clear the pivot row with column operations
            while (true) {
                mpz_class pv = w.get(pr, pc);
                std::vector<long> cls;
                for (const auto& [c, _] : w.rows.at(pr))
                    if (c != pc)
                        cls.push_back(c);
                bool moved = false;
                for (long c : cls) {
                    mpz_class v = w.get(pr, c);
                    if (sgn(v) == 0)
                        continue;
                    mpz_class q, rem;
                    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), pv.get_mpz_t());
                    w.col_op(c, pc, q);
                    if (sgn(w.get(pr, c)) != 0) {
                        pc = c;
                        moved = true;
                        switched = true;
                        break;
                    }
                }
                if (!moved)
                    break;
            }
            // column operations may have refilled the pivot column
            bool col_clean = true;
            for (const auto& [r, _] : w.colindex.at(pc))
                if (r != pr) {
                    col_clean = false;
                    break;
                }
            if (col_clean && !switched)
                break;
            if (col_clean && switched) {
                // row side might still be dirty only if the pivot moved; loop
                // once more to re-check both sides
                bool row_clean = w.rows.at(pr).size() == 1;
                if (row_clean)
                    break;
            }
        }
        mpz_class pv = abs(w.get(pr, pc));
        w.set(pr, pc, 0);
        diag.push_back(pv);
    }

    // enforce the divisibility chain
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            mpz_class g = gcd(diag[i], diag[j]);
            if (g != diag[i]) {
                mpz_class l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

long rank_dense(QMat m)
{
    long rank = 0;
    long prow = 0;
    for (long c = 0; c < m.cols && prow < m.rows; ++c) {
        long piv = -1;
        for (long r = prow; r < m.rows; ++r)
            if (sgn(m.at(r, c)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m.a[static_cast<size_t>(piv)], m.a[static_cast<size_t>(prow)]);
        mpq_class inv = 1 / m.at(prow, c);
        for (long cc = c; cc < m.cols; ++cc)
            m.at(prow, cc) *= inv;
        for (long r = 0; r < m.rows; ++r) {
            if (r == prow || sgn(m.at(r, c)) == 0)
                continue;
            mpq_class f = m.at(r, c);
            for (long cc = c; cc < m.cols; ++cc)
                m.at(r, cc) -= f * m.at(prow, cc);
        }
        ++prow;
        ++rank;
    }
    return rank;
}

QMat solve_dense(const QMat& A, const QMat& b)
{
    if (A.rows != b.rows)
        throw structural_error("solve_dense: dimension mismatch");
    QMat aug(A.rows, A.cols + b.cols);
    for (long r = 0; r < A.rows; ++r) {
        for (long c = 0; c < A.cols; ++c)
            aug.at(r, c) = A.at(r, c);
        for (long c = 0; c < b.cols; ++c)
            aug.at(r, A.cols + c) = b.at(r, c);
    }
    std::vector<long> pivot_col;
    long prow = 0;
    for (long c = 0; c < A.cols && prow < aug.rows; ++c) {
        long piv = -1;
        for (long r = prow; r < aug.rows; ++r)
            if (sgn(aug.at(r, c)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(aug.a[static_cast<size_t>(piv)], aug.a[static_cast<size_t>(prow)]);
        mpq_class inv = 1 / aug.at(prow, c);
        for (long cc = c; cc < aug.cols; ++cc)
            aug.at(prow, cc) *= inv;
        for (long r = 0; r < aug.rows; ++r) {
            if (r == prow || sgn(aug.at(r, c)) == 0)
                continue;
            mpq_class f = aug.at(r, c);
            for (long cc = c; cc < aug.cols; ++cc)
                aug.at(r, cc) -= f * aug.at(prow, cc);
        }
        pivot_col.push_back(c);
        ++prow;
    }
    // consistency: no pivot in the b block
    for (long r = prow; r < aug.rows; ++r)
        for (long c = A.cols; c < aug.cols; ++c)
            if (sgn(aug.at(r, c)) != 0)
                throw structural_error("solve_dense: inconsistent system");
    QMat x(A.cols, b.cols);
    for (long k = 0; k < prow; ++k)
        for (long c = 0; c < b.cols; ++c)
            x.at(pivot_col[static_cast<size_t>(k)], c) = aug.at(k, A.cols + c);
    return x;
}

} // namespace enhom
