#include "enhom/torcat.hpp"

#include "enhom/signs.hpp"

#include <algorithm>

namespace enhom {

int GradedPosetCategory::hom_degree(int i, int j) const
{
    int d = 0;
    for (int b = i + 1; b <= j; ++b)
        for (const auto& [pos, deg] : blocks[static_cast<size_t>(b - 1)])
            d += deg;
    return d;
}

int GradedPosetCategory::compose_sign(int i, int j, int k) const
{
    std::vector<int> da, pa, db, pb;
    for (int b = i + 1; b <= j; ++b)
        for (const auto& [pos, deg] : blocks[static_cast<size_t>(b - 1)]) {
            da.push_back(deg);
            pa.push_back(pos);
        }
    for (int b = j + 1; b <= k; ++b)
        for (const auto& [pos, deg] : blocks[static_cast<size_t>(b - 1)]) {
            db.push_back(deg);
            pb.push_back(pos);
        }
    return eps_sets(da, pa, db, pb);
}

std::vector<int> GradedPosetCategory::block_degrees() const
{
    std::vector<int> out;
    for (const auto& b : blocks) {
        int d = 0;
        for (const auto& [pos, deg] : b)
            d += deg;
        out.push_back(d);
    }
    return out;
}

std::vector<int> TensorCategory::top() const
{
    std::vector<int> t;
    for (const auto& f : factors)
        t.push_back(f.top());
    return t;
}

int TensorCategory::hom_degree(const std::vector<int>& p, const std::vector<int>& q) const
{
    int d = 0;
    for (size_t f = 0; f < factors.size(); ++f)
        d += factors[f].hom_degree(p[f], q[f]);
    return d;
}

int TensorCategory::compose_sign(const std::vector<int>& p, const std::vector<int>& q,
                                 const std::vector<int>& r) const
{
    int sign = 1;
    // factorwise composition signs
    for (size_t f = 0; f < factors.size(); ++f)
        sign *= factors[f].compose_sign(p[f], q[f], r[f]);
    // Koszul interchange: the first arrow's factor f' moves past the second
    // arrow's factors f < f'
    for (size_t f2 = 1; f2 < factors.size(); ++f2) {
        int beta = factors[f2].hom_degree(p[f2], q[f2]);
        if (beta % 2 == 0)
            continue;
        for (size_t f = 0; f < f2; ++f) {
            int alpha = factors[f].hom_degree(q[f], r[f]);
            if (alpha % 2 != 0)
                sign = -sign;
        }
    }
    return sign;
}

NormalizedComplex normalized_complex(const TensorCategory& C)
{
    NormalizedComplex N;
    N.cat = C;
    auto bot = C.bottom();
    auto top = C.top();
    int maxlen = 0;
    for (int a : top)
        maxlen += a;
    if (maxlen == 0)
        throw structural_error("normalized_complex: top object equals bottom");

    // enumerate strictly increasing object chains from bottom to top
    N.chains.assign(static_cast<size_t>(maxlen + 1), {});
    ObjectChain cur = {bot};
    auto rec = [&](auto&& self) -> void {
        const std::vector<int> last = cur.back(); // copy: cur reallocates below
        if (last == top) {
            int u = static_cast<int>(cur.size()) - 1;
            if (u >= 1)
                N.chains[static_cast<size_t>(u)].push_back(cur);
            return;
        }
        // next object strictly above 'last', componentwise <= top
        std::vector<int> next = last;
        auto advance = [&](auto&& aself, size_t f) -> void {
            if (f == next.size()) {
                if (next != last) {
                    cur.push_back(next);
                    self(self);
                    cur.pop_back();
                }
                return;
            }
            for (int v = last[f]; v <= top[f]; ++v) {
                next[f] = v;
                aself(aself, f + 1);
            }
            next[f] = last[f];
        };
        advance(advance, 0);
    };
    rec(rec);

    N.index.assign(N.chains.size(), {});
    for (size_t u = 0; u < N.chains.size(); ++u) {
        std::sort(N.chains[u].begin(), N.chains[u].end());
        for (long i = 0; i < static_cast<long>(N.chains[u].size()); ++i)
            N.index[u][N.chains[u][static_cast<size_t>(i)]] = i;
    }

    ChainComplex& K = N.complex;
    K.dims.assign(static_cast<size_t>(maxlen + 1), 0);
    for (int u = 0; u <= maxlen; ++u)
        K.dims[static_cast<size_t>(u)] = static_cast<long>(N.chains[static_cast<size_t>(u)].size());
    K.bnd.resize(static_cast<size_t>(maxlen + 1));
    K.bnd[0] = SparseMat(0, K.dims[0]);
    for (int u = 1; u <= maxlen; ++u) {
        SparseMat b(K.dims[static_cast<size_t>(u - 1)], K.dims[static_cast<size_t>(u)]);
        const auto& cols = N.chains[static_cast<size_t>(u)];
        for (long col = 0; col < static_cast<long>(cols.size()); ++col) {
            const ObjectChain& ch = cols[static_cast<size_t>(col)];
            int run = 0; // d(xi_1) + ... + d(xi_i)
            for (int i = 1; i <= u - 1; ++i) {
                run += C.hom_degree(ch[static_cast<size_t>(i - 1)], ch[static_cast<size_t>(i)]);
                i64 sgn = ((i + run) % 2 == 0) ? 1 : -1;
                sgn *= C.compose_sign(ch[static_cast<size_t>(i - 1)], ch[static_cast<size_t>(i)],
                                      ch[static_cast<size_t>(i + 1)]);
                ObjectChain merged;
                merged.reserve(ch.size() - 1);
                for (int k = 0; k <= u; ++k)
                    if (k != i)
                        merged.push_back(ch[static_cast<size_t>(k)]);
                b.add(N.index[static_cast<size_t>(u - 1)].at(merged), col, sgn);
            }
        }
        K.bnd[static_cast<size_t>(u)] = std::move(b);
    }
    K.verify_d_squared();
    K.certified_max = maxlen;
    return N;
}

std::vector<long> tor(const TensorCategory& C, const Ring& ring)
{
    NormalizedComplex N = normalized_complex(C);
    HomologyResult H = homology(N.complex, ring);
    return H.betti;
}

std::optional<std::pair<i64, ObjectChain>> poset_homotopy(const GradedPosetCategory& cat,
                                                          const ObjectChain& chain)
{
    if (chain.size() < 2)
        return std::nullopt;
    int p1 = chain[1][0];
    if (p1 == 1)
        return std::nullopt;
    ObjectChain out;
    out.push_back(chain[0]);
    out.push_back({1});
    for (size_t k = 1; k < chain.size(); ++k)
        out.push_back(chain[k]);
    int d1 = cat.hom_degree(0, 1);
    i64 sign = (d1 % 2 == 0) ? 1 : -1;
    sign *= cat.compose_sign(0, 1, p1);
    return std::make_pair(sign, std::move(out));
}

TensorCategory category_of_2tree(const LabeledTree& t)
{
    if (t.tree.levels() != 2)
        throw structural_error("category_of_2tree: expected a 2-level tree");
    const Surjection& f = t.tree.map(2);
    TensorCategory C;
    for (int j = 0; j <= t.tree.arity(1); ++j) {
        GradedPosetCategory cat;
        for (int k = 0; k <= t.tree.arity(2); ++k) {
            if (f(k) != j)
                continue;
            std::vector<std::pair<int, int>> block;
            for (int x = 0; x < t.labels.size(); ++x)
                if (t.phi(x) == k)
                    block.emplace_back(x, t.labels.degree(x));
            cat.blocks.push_back(std::move(block));
        }
        C.factors.push_back(std::move(cat));
    }
    return C;
}

} // namespace enhom
