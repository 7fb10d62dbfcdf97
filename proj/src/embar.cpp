#include "enhom/embar.hpp"

#include "enhom/signs.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace enhom {

void DGAlgebra::validate() const
{
    int dim = static_cast<int>(basis.size());
    auto dense = [&](const std::vector<std::pair<int, i64>>& terms) {
        std::vector<i64> v(static_cast<size_t>(dim), 0);
        for (const auto& [i, c] : terms)
            v[static_cast<size_t>(i)] += c;
        return v;
    };
    for (int i = 0; i < dim; ++i) {
        // d^2 = 0
        std::vector<i64> dd(static_cast<size_t>(dim), 0);
        for (const auto& [j, c] : diff(i))
            for (const auto& [k, c2] : diff(j))
                dd[static_cast<size_t>(k)] += c * c2;
        if (std::any_of(dd.begin(), dd.end(), [](i64 x) { return x != 0; }))
            throw structural_error("DGAlgebra: d^2 != 0");
    }
    auto within_bounds = [&](int i, int j) {
        return basis[static_cast<size_t>(i)].degree + basis[static_cast<size_t>(j)].degree <=
                   max_degree &&
               basis[static_cast<size_t>(i)].weight + basis[static_cast<size_t>(j)].weight <=
                   max_weight;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (!within_bounds(i, j))
                continue;
            // graded commutativity
            auto ab = dense(product(i, j));
            auto ba = dense(product(j, i));
            int s = (basis[static_cast<size_t>(i)].degree * basis[static_cast<size_t>(j)].degree) % 2;
            for (int k = 0; k < dim; ++k)
                if (ab[static_cast<size_t>(k)] !=
                    (s ? -ba[static_cast<size_t>(k)] : ba[static_cast<size_t>(k)]))
                    throw structural_error("DGAlgebra: product not graded commutative");
            // Leibniz
            std::vector<i64> lhs(static_cast<size_t>(dim), 0), rhs(static_cast<size_t>(dim), 0);
            for (const auto& [k, c] : product(i, j))
                for (const auto& [l, c2] : diff(k))
                    lhs[static_cast<size_t>(l)] += c * c2;
            for (const auto& [k, c] : diff(i))
                for (const auto& [l, c2] : product(k, j))
                    rhs[static_cast<size_t>(l)] += c * c2;
            i64 sg = basis[static_cast<size_t>(i)].degree % 2 ? -1 : 1;
            for (const auto& [k, c] : diff(j))
                for (const auto& [l, c2] : product(i, k))
                    rhs[static_cast<size_t>(l)] += sg * c * c2;
            if (lhs != rhs)
                throw structural_error("DGAlgebra: Leibniz rule fails");
        }
}

DGAlgebra dg_from_presentation(const AlgebraPresentation& A)
{
    DGAlgebra dg;
    dg.basis.resize(static_cast<size_t>(A.dim));
    for (int i = 0; i < A.dim; ++i) {
        dg.basis[static_cast<size_t>(i)].degree = 0;
        dg.basis[static_cast<size_t>(i)].weight = A.weight_graded() ? A.weight(i) : 1;
    }
    dg.diff = [](int) { return std::vector<std::pair<int, i64>>{}; };
    dg.product = [A](int i, int j) { return A.multiply(i, j); };
    return dg;
}

namespace {

struct BarData {
    // parent snapshot
    std::vector<DGAlgebra::Elem> parent_elems;
    std::function<std::vector<std::pair<int, i64>>(int)> parent_diff;
    std::function<std::vector<std::pair<int, i64>>(int, int)> parent_product;
    // words over the parent basis
    std::vector<std::vector<int>> words;
    std::map<std::vector<int>, int> index;

    int word_degree(const std::vector<int>& w) const
    {
        int d = static_cast<int>(w.size());
        for (int a : w)
            d += parent_elems[static_cast<size_t>(a)].degree;
        return d;
    }
    int word_weight(const std::vector<int>& w) const
    {
        int s = 0;
        for (int a : w)
            s += parent_elems[static_cast<size_t>(a)].weight;
        return s;
    }
    int lookup(const std::vector<int>& w) const
    {
        auto it = index.find(w);
        if (it == index.end())
            throw structural_error("bar: word outside the enumerated bounds");
        return it->second;
    }
};

} // namespace

DGAlgebra bar(const DGAlgebra& A, int max_degree, int max_weight)
{
    auto data = std::make_shared<BarData>();
    data->parent_elems = A.basis;
    data->parent_diff = A.diff;
    data->parent_product = A.product;

    // enumerate words sorted by letter index, shortest first, within bounds
    std::vector<int> cur;
    auto rec = [&](auto&& self, int deg, int wt) -> void {
        if (!cur.empty())
            data->words.push_back(cur);
        for (int a = 0; a < static_cast<int>(A.basis.size()); ++a) {
            int nd = deg + 1 + A.basis[static_cast<size_t>(a)].degree;
            int nw = wt + A.basis[static_cast<size_t>(a)].weight;
            if (nd > max_degree || nw > max_weight)
                continue;
            cur.push_back(a);
            self(self, nd, nw);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(data->words.begin(), data->words.end());
    for (int i = 0; i < static_cast<int>(data->words.size()); ++i)
        data->index[data->words[static_cast<size_t>(i)]] = i;

    DGAlgebra B;
    B.max_degree = max_degree;
    B.max_weight = max_weight;
    B.basis.resize(data->words.size());
    for (size_t i = 0; i < data->words.size(); ++i) {
        const auto& w = data->words[i];
        B.basis[i].degree = data->word_degree(w);
        B.basis[i].weight = data->word_weight(w);
        // tree shape (r_1,...,r_m): one more level below the letters
        auto& ar = B.basis[i].arities;
        ar.push_back(static_cast<int>(w.size()) - 1);
        size_t depth = data->parent_elems[static_cast<size_t>(w[0])].arities.size();
        for (size_t k = 0; k < depth; ++k) {
            int total = 0;
            for (int a : w)
                total += data->parent_elems[static_cast<size_t>(a)].arities[k] + 1;
            ar.push_back(total - 1);
        }
    }

    B.diff = [data](int i) {
        const auto& w = data->words[static_cast<size_t>(i)];
        int k = static_cast<int>(w.size());
        std::map<int, i64> acc;
        // residual boundary: apply the parent differential to each letter
        int run = 0; // d(a_1) + ... + d(a_{m-1})
        for (int m = 1; m <= k; ++m) {
            i64 sgn = ((m + run) % 2 == 0) ? 1 : -1;
            for (const auto& [b, c] : data->parent_diff(w[static_cast<size_t>(m - 1)])) {
                std::vector<int> nw = w;
                nw[static_cast<size_t>(m - 1)] = b;
                acc[data->lookup(nw)] += sgn * c;
            }
            run += data->parent_elems[static_cast<size_t>(w[static_cast<size_t>(m - 1)])].degree;
        }
        // simplicial boundary: multiply adjacent letters
        run = 0;
        for (int m = 1; m <= k - 1; ++m) {
            run += data->parent_elems[static_cast<size_t>(w[static_cast<size_t>(m - 1)])].degree;
            i64 sgn = ((m + run) % 2 == 0) ? 1 : -1;
            for (const auto& [b, c] :
                 data->parent_product(w[static_cast<size_t>(m - 1)], w[static_cast<size_t>(m)])) {
                std::vector<int> nw;
                nw.reserve(static_cast<size_t>(k - 1));
                for (int l = 0; l < m - 1; ++l)
                    nw.push_back(w[static_cast<size_t>(l)]);
                nw.push_back(b);
                for (int l = m + 1; l < k; ++l)
                    nw.push_back(w[static_cast<size_t>(l)]);
                acc[data->lookup(nw)] += sgn * c;
            }
        }
        std::vector<std::pair<int, i64>> out;
        for (const auto& [j, c] : acc)
            if (c != 0)
                out.emplace_back(j, c);
        return out;
    };

    B.product = [data](int i, int j) {
        const auto& u = data->words[static_cast<size_t>(i)];
        const auto& v = data->words[static_cast<size_t>(j)];
        int p = static_cast<int>(u.size()), q = static_cast<int>(v.size());
        std::vector<int> left_deg, right_deg;
        for (int a : u)
            left_deg.push_back(data->parent_elems[static_cast<size_t>(a)].degree);
        for (int a : v)
            right_deg.push_back(data->parent_elems[static_cast<size_t>(a)].degree);
        std::vector<std::pair<int, i64>> out;
        for (const auto& sh : enumerate_shuffles(p, q)) {
            std::vector<int> merged(static_cast<size_t>(p + q));
            for (int a = 0; a < p; ++a)
                merged[static_cast<size_t>(sh.perm[static_cast<size_t>(a)])] = u[static_cast<size_t>(a)];
            for (int b = 0; b < q; ++b)
                merged[static_cast<size_t>(sh.perm[static_cast<size_t>(p + b)])] =
                    v[static_cast<size_t>(b)];
            out.emplace_back(data->lookup(merged), shuffle_sign(sh, left_deg, right_deg));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return B;
}

HomologyResult iterated_bar_homology(const AlgebraPresentation& A, int n, const Ring& ring,
                                     int weight, int degree_cap)
{
    if (!A.weight_graded())
        throw structural_error("iterated_bar_homology: algebra must be weight-graded");
    int full = n * weight;
    int bound = degree_cap < 0 ? full : std::min(full, degree_cap);
    DGAlgebra B = dg_from_presentation(A);
    for (int k = 0; k < n; ++k)
        B = bar(B, bound, weight);

    // weight-w piece as a chain complex in word degree, shifted down by n
    std::vector<std::vector<int>> by_degree(static_cast<size_t>(bound + 1));
    std::vector<long> local((B.basis.size()));
    for (int i = 0; i < static_cast<int>(B.basis.size()); ++i) {
        const auto& e = B.basis[static_cast<size_t>(i)];
        if (e.weight != weight || e.degree > bound)
            continue;
        local[static_cast<size_t>(i)] = static_cast<long>(by_degree[static_cast<size_t>(e.degree)].size());
        by_degree[static_cast<size_t>(e.degree)].push_back(i);
    }
    int top = bound - n;
    ChainComplex C;
    C.dims.assign(static_cast<size_t>(top + 1), 0);
    for (int p = 0; p <= top; ++p)
        C.dims[static_cast<size_t>(p)] = static_cast<long>(by_degree[static_cast<size_t>(p + n)].size());
    C.bnd.resize(static_cast<size_t>(top + 1));
    C.bnd[0] = SparseMat(0, C.dims[0]);
    for (int p = 1; p <= top; ++p) {
        SparseMat b(C.dims[static_cast<size_t>(p - 1)], C.dims[static_cast<size_t>(p)]);
        const auto& col_ids = by_degree[static_cast<size_t>(p + n)];
        for (long col = 0; col < static_cast<long>(col_ids.size()); ++col)
            for (const auto& [j, c] : B.diff(col_ids[static_cast<size_t>(col)]))
                b.add(local[static_cast<size_t>(j)], col, c);
        C.bnd[static_cast<size_t>(p)] = std::move(b);
    }
    C.verify_d_squared();
    C.certified_max = bound == full ? top : top - 1;
    return homology(C, ring);
}

long iterated_bar_dimension(const AlgebraPresentation& A, int n, const std::vector<int>& arities,
                            int max_weight)
{
    DGAlgebra B = dg_from_presentation(A);
    int bound = 0;
    for (int r : arities)
        bound += r + 1;
    for (int k = 0; k < n; ++k)
        B = bar(B, bound, max_weight);
    long count = 0;
    for (const auto& e : B.basis)
        if (e.arities == arities)
            ++count;
    return count;
}

} // namespace enhom
