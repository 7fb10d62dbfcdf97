#include "enhom/signs.hpp"

#include <algorithm>

namespace enhom {

bool Shuffle::is_identity() const
{
    for (size_t a = 0; a < perm.size(); ++a)
        if (perm[a] != static_cast<int>(a))
            return false;
    return true;
}

std::vector<Shuffle> enumerate_shuffles(int p, int q)
{
    std::vector<Shuffle> out;
    int n = p + q;
    std::vector<int> pos(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i)
        pos[static_cast<size_t>(i)] = i;
    while (true) {
        Shuffle s;
        s.p = p;
        s.q = q;
        s.perm.assign(static_cast<size_t>(n), -1);
        std::vector<char> taken(static_cast<size_t>(n), 0);
        for (int a = 0; a < p; ++a) {
            s.perm[static_cast<size_t>(a)] = pos[static_cast<size_t>(a)];
            taken[static_cast<size_t>(pos[static_cast<size_t>(a)])] = 1;
        }
        int b = p;
        for (int v = 0; v < n; ++v)
            if (!taken[static_cast<size_t>(v)])
                s.perm[static_cast<size_t>(b++)] = v;
        out.push_back(std::move(s));
        // next p-subset of {0..n-1} in lex order
        int i = p - 1;
        while (i >= 0 && pos[static_cast<size_t>(i)] == n - p + i)
            --i;
        if (i < 0)
            break;
        ++pos[static_cast<size_t>(i)];
        for (int k = i + 1; k < p; ++k)
            pos[static_cast<size_t>(k)] = pos[static_cast<size_t>(k - 1)] + 1;
    }
    return out;
}

int shuffle_sign(const Shuffle& s, const std::vector<int>& left_degrees,
                 const std::vector<int>& right_degrees)
{
    if (static_cast<int>(left_degrees.size()) != s.p ||
        static_cast<int>(right_degrees.size()) != s.q)
        throw structural_error("shuffle_sign: degree lists do not match block sizes");
    int sign = 1;
    // inversions only occur across blocks
    for (int a = 0; a < s.p; ++a)
        for (int b = 0; b < s.q; ++b)
            if (s.perm[static_cast<size_t>(a)] > s.perm[static_cast<size_t>(s.p + b)]) {
                int e = (left_degrees[static_cast<size_t>(a)] + 1) *
                        (right_degrees[static_cast<size_t>(b)] + 1);
                if (e & 1)
                    sign = -sign;
            }
    return sign;
}

int eps_sets(const std::vector<int>& a_degrees, const std::vector<int>& a_positions,
             const std::vector<int>& b_degrees, const std::vector<int>& b_positions)
{
    for (int pa : a_positions)
        for (int pb : b_positions)
            if (pa == pb)
                throw structural_error("eps_sets: overlapping positions");
    int sign = 1;
    for (size_t a = 0; a < a_positions.size(); ++a)
        for (size_t b = 0; b < b_positions.size(); ++b)
            if (a_positions[a] > b_positions[b] && (a_degrees[a] * b_degrees[b]) % 2 != 0)
                sign = -sign;
    return sign;
}

std::vector<std::vector<int>> edge_labels(const LevelTree& t)
{
    int n = t.levels();
    std::vector<std::vector<int>> labels(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
        labels[static_cast<size_t>(j - 1)].assign(static_cast<size_t>(t.arity(j) + 1), 0);
    int next = 1;
    auto visit = [&](auto&& self, int j, int v) -> void {
        labels[static_cast<size_t>(j - 1)][static_cast<size_t>(v)] = next++;
        if (j == n)
            return;
        const Surjection& f = t.map(j + 1);
        for (int w = 0; w <= t.arity(j + 1); ++w)
            if (f(w) == v)
                self(self, j + 1, w);
    };
    for (int v = 0; v <= t.arity(1); ++v)
        visit(visit, 1, v);
    return labels;
}

namespace {

/* Index of the rightmost leaf sitting above vertex i of level j. */
int rightmost_leaf_above(const LevelTree& t, int j, int i)
{
    int n = t.levels();
    if (j == n)
        return i;
    Surjection down = Surjection::identity(t.arity(n) + 1);
    for (int l = n; l > j; --l)
        down = compose(t.map(l), down);
    int leaf = -1;
    for (int v = 0; v <= t.arity(n); ++v)
        if (down(v) == i)
            leaf = v;
    return leaf;
}

} // namespace

int s_exponent(const LevelTree& t, int j, int i)
{
    auto labels = edge_labels(t);
    int leaf = rightmost_leaf_above(t, j, i);
    return labels[static_cast<size_t>(t.levels() - 1)][static_cast<size_t>(leaf)];
}

int s_exponent(const LabeledTree& lt, int j, int i)
{
    int base = s_exponent(lt.tree, j, i);
    int leaf = rightmost_leaf_above(lt.tree, j, i);
    int extra = 0;
    for (int x = 0; x < lt.labels.size(); ++x)
        if (lt.phi(x) <= leaf)
            extra += lt.labels.degree(x);
    return base + extra;
}

int top_face_eps(const LabeledTree& lt, int i)
{
    std::vector<int> da, pa, db, pb;
    for (int x = 0; x < lt.labels.size(); ++x) {
        if (lt.phi(x) == i) {
            da.push_back(lt.labels.degree(x));
            pa.push_back(x);
        } else if (lt.phi(x) == i + 1) {
            db.push_back(lt.labels.degree(x));
            pb.push_back(x);
        }
    }
    return eps_sets(da, pa, db, pb);
}

} // namespace enhom
