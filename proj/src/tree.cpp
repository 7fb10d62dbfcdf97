#include "enhom/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace enhom {

int GradedSet::total_degree() const
{
    return std::accumulate(degrees.begin(), degrees.end(), 0);
}

LevelTree LevelTree::single(int r1)
{
    return LevelTree(1, {}, r1);
}

LevelTree LevelTree::trivial(int n)
{
    std::vector<Surjection> maps(static_cast<size_t>(n - 1), Surjection::constant(1));
    return LevelTree(n, std::move(maps));
}

LevelTree::LevelTree(int levels, std::vector<Surjection> maps, int r1_if_no_maps)
    : levels_(levels), maps_(std::move(maps))
{
    if (levels_ < 1)
        throw structural_error("LevelTree: level count must be >= 1");
    if (maps_.size() != static_cast<size_t>(levels_ - 1))
        throw structural_error("LevelTree: expected n-1 maps");
    arities_.resize(static_cast<size_t>(levels_));
    if (levels_ == 1) {
        arities_[0] = r1_if_no_maps;
        return;
    }
    arities_[0] = maps_[0].target_size() - 1;
    for (int j = 2; j <= levels_; ++j) {
        const Surjection& f = maps_[static_cast<size_t>(j - 2)];
        if (!f.in_delta_epi())
            throw structural_error("LevelTree: tower map not an ordered surjection");
        arities_[static_cast<size_t>(j - 1)] = f.source_size() - 1;
        if (j < levels_ && maps_[static_cast<size_t>(j - 1)].target_size() != f.source_size())
            throw structural_error("LevelTree: tower maps do not compose");
    }
}

int LevelTree::degree() const
{
    int d = levels_;
    for (int r : arities_)
        d += r;
    return d;
}

bool LevelTree::is_trivial() const
{
    return std::all_of(arities_.begin(), arities_.end(), [](int r) { return r == 0; });
}

Surjection LevelTree::composite_to(int j) const
{
    Surjection c = Surjection::identity(arity(levels_) + 1);
    for (int k = levels_; k > j; --k)
        c = compose(map(k), c);
    return c;
}

LevelTree LevelTree::fiber_subtree(int j, int i) const
{
    if (j < 1 || j > levels_ - 1)
        throw structural_error("fiber_subtree: level out of range");
    if (i < 0 || i > arity(j))
        throw structural_error("fiber_subtree: vertex out of range");
    int m = levels_ - j;
    // Vertex interval of the fiber at each level j+1..n; all are intervals
    // because the tower maps are monotone.
    std::vector<std::pair<int, int>> span(static_cast<size_t>(m));
    for (int k = j + 1; k <= levels_; ++k) {
        // interval of level-k vertices mapping to i under f_{j+1}...f_k
        Surjection down = Surjection::identity(arity(k) + 1);
        for (int l = k; l > j; --l)
            down = compose(map(l), down);
        int first = -1, last = -1;
        for (int v = 0; v <= arity(k); ++v)
            if (down(v) == i) {
                if (first < 0)
                    first = v;
                last = v;
            }
        span[static_cast<size_t>(k - j - 1)] = {first, last + 1};
    }
    if (m == 1)
        return LevelTree::single(span[0].second - span[0].first - 1);
    std::vector<Surjection> maps;
    maps.reserve(static_cast<size_t>(m - 1));
    for (int k = j + 2; k <= levels_; ++k) {
        const auto [sfirst, slast] = span[static_cast<size_t>(k - j - 1)];
        int tfirst = span[static_cast<size_t>(k - j - 2)].first;
        std::vector<int> v;
        v.reserve(static_cast<size_t>(slast - sfirst));
        for (int x = sfirst; x < slast; ++x)
            v.push_back(map(k)(x) - tfirst);
        maps.emplace_back(std::move(v));
    }
    return LevelTree(m, std::move(maps));
}

int LevelTree::fiber_degree(int j, int i) const
{
    if (j == levels_)
        return 0;
    int d = 0;
    for (int k = j + 1; k <= levels_; ++k) {
        Surjection c = Surjection::identity(arity(k) + 1);
        for (int l = k; l > j; --l)
            c = compose(map(l), c);
        for (int v = 0; v <= arity(k); ++v)
            if (c(v) == i)
                ++d;
    }
    return d;
}

std::string LevelTree::serialize() const
{
    std::ostringstream os;
    os << levels_ << "; ";
    for (int j = 1; j <= levels_; ++j)
        os << arity(j) << (j < levels_ ? "," : "");
    for (int j = 2; j <= levels_; ++j) {
        os << "; f" << j << "=[";
        const auto& v = map(j).values();
        for (size_t k = 0; k < v.size(); ++k)
            os << v[k] << (k + 1 < v.size() ? "," : "");
        os << "]";
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::stoi(cur));
    return out;
}

} // namespace

LevelTree LevelTree::parse(const std::string& text)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2)
        throw structural_error("LevelTree::parse: malformed input");
    int n = std::stoi(parts[0]);
    std::vector<int> arities = parse_int_list(parts[1]);
    if (static_cast<int>(arities.size()) != n)
        throw structural_error("LevelTree::parse: arity count mismatch");
    if (n == 1)
        return LevelTree::single(arities[0]);
    if (parts.size() != static_cast<size_t>(n + 1))
        throw structural_error("LevelTree::parse: map count mismatch");
    std::vector<Surjection> maps;
    for (int j = 2; j <= n; ++j) {
        const std::string& p = parts[static_cast<size_t>(j)];
        auto lb = p.find('[');
        auto rb = p.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw structural_error("LevelTree::parse: malformed map");
        maps.emplace_back(parse_int_list(p.substr(lb + 1, rb - lb - 1)));
    }
    return LevelTree(n, std::move(maps));
}

LabeledTree::LabeledTree(LevelTree t, GradedSet x, Surjection p)
    : tree(std::move(t)), labels(std::move(x)), phi(std::move(p))
{
    if (phi.source_size() != labels.size())
        throw structural_error("LabeledTree: |X| does not match phi");
    if (phi.target_size() != tree.arity(tree.levels()) + 1 || !phi.is_surjective())
        throw structural_error("LabeledTree: phi must surject onto the leaves");
}

LabeledTree::LabeledTree(LevelTree t, GradedSet x)
{
    Surjection id = Surjection::identity(x.size());
    *this = LabeledTree(std::move(t), std::move(x), std::move(id));
}

int LabeledTree::fiber_label_degree(int j, int i) const
{
    int n = tree.levels();
    Surjection down = Surjection::identity(tree.arity(n) + 1);
    for (int l = n; l > j; --l)
        down = compose(tree.map(l), down);
    int d = 0;
    for (int x = 0; x < labels.size(); ++x)
        if (down(phi(x)) == i)
            d += labels.degree(x);
    return d;
}

bool TreeMorphism::is_identity() const
{
    if (source != target)
        return false;
    for (size_t i = 0; i < sigmas.size(); ++i)
        if (sigmas[i] != Surjection::identity(sigmas[i].source_size()))
            return false;
    return true;
}

bool is_valid_morphism(const TreeMorphism& m)
{
    int n = m.source.levels();
    if (m.target.levels() != n || static_cast<int>(m.sigmas.size()) != n)
        return false;
    for (int i = 1; i <= n; ++i) {
        const Surjection& s = m.sigma(i);
        if (s.source_size() != m.source.arity(i) + 1)
            return false;
        if (s.target_size() > m.target.arity(i) + 1)
            return false;
        std::vector<char> hit(static_cast<size_t>(m.target.arity(i) + 1), 0);
        for (int v : s.values()) {
            if (v < 0 || v > m.target.arity(i))
                return false;
            hit[static_cast<size_t>(v)] = 1;
        }
        if (std::find(hit.begin(), hit.end(), 0) != hit.end())
            return false; // not surjective onto [r'_i]
    }
    if (!m.sigma(1).is_monotone())
        return false;
    for (int i = 2; i <= n; ++i) {
        const Surjection& f = m.source.map(i);
        const Surjection& fp = m.target.map(i);
        // commuting square f'_i sigma_i = sigma_{i-1} f_i
        for (int v = 0; v <= m.source.arity(i); ++v)
            if (fp(m.sigma(i)(v)) != m.sigma(i - 1)(f(v)))
                return false;
        // weakly order-preserving on each fiber of f_i
        for (int v = 1; v <= m.source.arity(i); ++v)
            if (f(v) == f(v - 1) && m.sigma(i)(v) < m.sigma(i)(v - 1))
                return false;
    }
    return true;
}

TreeMorphism identity_morphism(const LevelTree& t)
{
    TreeMorphism m;
    m.source = t;
    m.target = t;
    for (int i = 1; i <= t.levels(); ++i)
        m.sigmas.push_back(Surjection::identity(t.arity(i) + 1));
    return m;
}

TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f)
{
    if (f.target != g.source)
        throw structural_error("compose: morphisms are not composable");
    TreeMorphism m;
    m.source = f.source;
    m.target = g.target;
    for (size_t i = 0; i < f.sigmas.size(); ++i)
        m.sigmas.push_back(compose(g.sigmas[i], f.sigmas[i]));
    return m;
}

std::vector<LevelTree> enumerate_trees(int n, int max_degree, int max_arity)
{
    std::vector<LevelTree> out;
    if (n < 1 || max_degree < n)
        return out;
    int budget = max_degree - n; // sum of arities
    if (max_arity >= 0)
        budget = std::min(budget, max_arity * n);
    // enumerate arity vectors (r_1,...,r_n) lexicographically, r_{j+1} >= r_j
    std::vector<int> r(static_cast<size_t>(n));
    auto emit = [&]() {
        if (n == 1) {
            out.push_back(LevelTree::single(r[0]));
            return;
        }
        // cartesian product of ordered surjection choices, lex over (f_2,..,f_n)
        std::vector<std::vector<Surjection>> choices;
        for (int j = 2; j <= n; ++j) {
            auto maps = ordered_surjections(r[static_cast<size_t>(j - 1)],
                                            r[static_cast<size_t>(j - 2)]);
            std::sort(maps.begin(), maps.end());
            choices.push_back(std::move(maps));
        }
        std::vector<Surjection> pick(static_cast<size_t>(n - 1));
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == n - 1) {
                out.emplace_back(n, pick);
                return;
            }
            for (const auto& s : choices[static_cast<size_t>(idx)]) {
                pick[static_cast<size_t>(idx)] = s;
                self(self, idx + 1);
            }
        };
        rec(rec, 0);
    };
    auto recr = [&](auto&& self, int j, int used) -> void {
        if (j == n) {
            emit();
            return;
        }
        int lo = j == 0 ? 0 : r[static_cast<size_t>(j - 1)];
        for (int v = lo; used + v <= budget && (max_arity < 0 || v <= max_arity); ++v) {
            r[static_cast<size_t>(j)] = v;
            self(self, j + 1, used + v);
        }
    };
    recr(recr, 0, 0);
    return out;
}

namespace {

/* Enumerate all weakly monotone maps from an interval of size len into
 * [lo, hi], appended to sigma, recursing into cont. */
template <typename F>
void monotone_fill(std::vector<int>& sigma, int len, int lo, int hi, F&& cont)
{
    if (len == 0) {
        cont();
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        sigma.push_back(v);
        monotone_fill(sigma, len - 1, v, hi, cont);
        sigma.pop_back();
    }
}

} // namespace

std::vector<TreeMorphism> hom_set(const LevelTree& s, const LevelTree& t)
{
    std::vector<TreeMorphism> out;
    int n = s.levels();
    if (t.levels() != n)
        throw structural_error("hom_set: level counts differ");
    for (int i = 1; i <= n; ++i)
        if (t.arity(i) > s.arity(i))
            return out;

    std::vector<Surjection> sigmas(static_cast<size_t>(n));
    auto level = [&](auto&& self, int i) -> void {
        if (i > n) {
            TreeMorphism m{s, t, sigmas};
            out.push_back(std::move(m));
            return;
        }
        // sigma_i maps f_i-fiber w into the f'_i-fiber over sigma_{i-1}(w),
        // weakly monotone within each fiber; global surjectivity checked last.
        const Surjection& f = s.map(i);
        const Surjection& fp = t.map(i);
        auto src_fibers = f.fiber_intervals();
        auto tgt_fibers = fp.fiber_intervals();
        std::vector<int> sigma;
        sigma.reserve(static_cast<size_t>(s.arity(i) + 1));
        auto fiber = [&](auto&& fself, size_t w) -> void {
            if (w == src_fibers.size()) {
                Surjection cand{sigma};
                if (cand.target_size() == t.arity(i) + 1 && cand.is_surjective()) {
                    sigmas[static_cast<size_t>(i - 1)] = cand;
                    self(self, i + 1);
                }
                return;
            }
            auto [a, b] = src_fibers[w];
            int tw = sigmas[static_cast<size_t>(i - 2)](static_cast<int>(w));
            auto [c, d] = tgt_fibers[static_cast<size_t>(tw)];
            monotone_fill(sigma, b - a, c, d - 1, [&]() { fself(fself, w + 1); });
        };
        fiber(fiber, 0);
    };

    for (const auto& s1 : ordered_surjections(s.arity(1), t.arity(1))) {
        sigmas[0] = s1;
        if (n == 1) {
            out.push_back(TreeMorphism{s, t, sigmas});
        } else {
            level(level, 2);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TreeMorphism& a, const TreeMorphism& b) { return a.sigmas < b.sigmas; });
    return out;
}

LevelTree iota(int k, int n, const LevelTree& t)
{
    if (t.levels() != k || k > n || k < 1)
        throw structural_error("iota: bad levels");
    if (k == n)
        return t;
    std::vector<Surjection> maps;
    for (int j = 2; j <= n - k; ++j)
        maps.push_back(Surjection::constant(1));
    maps.push_back(Surjection::constant(t.arity(1) + 1));
    for (int j = 2; j <= k; ++j)
        maps.push_back(t.map(j));
    return LevelTree(n, std::move(maps));
}

TreeMorphism iota_morphism(int k, int n, const TreeMorphism& m)
{
    TreeMorphism out;
    out.source = iota(k, n, m.source);
    out.target = iota(k, n, m.target);
    for (int j = 0; j < n - k; ++j)
        out.sigmas.push_back(Surjection::identity(1));
    for (const auto& s : m.sigmas)
        out.sigmas.push_back(s);
    return out;
}

bool face_admissible(const LevelTree& t, int j, int i)
{
    if (j < 1 || j > t.levels())
        return false;
    if (i < 0 || i > t.arity(j) - 1)
        return false;
    if (j == 1)
        return true; // f_1 is the constant map by convention
    return t.map(j)(i) == t.map(j)(i + 1);
}

LevelTree assemble_from_fibers(const std::vector<LevelTree>& fibers)
{
    if (fibers.empty())
        throw structural_error("assemble_from_fibers: empty list");
    int m = fibers[0].levels();
    for (const auto& f : fibers)
        if (f.levels() != m)
            throw structural_error("assemble_from_fibers: mixed levels");
    int n = m + 1;
    int r1 = static_cast<int>(fibers.size()) - 1;
    std::vector<Surjection> maps;
    // f_2: concatenated constant maps onto each root
    {
        std::vector<int> v;
        for (int i = 0; i <= r1; ++i)
            v.insert(v.end(), static_cast<size_t>(fibers[static_cast<size_t>(i)].arity(1) + 1), i);
        maps.emplace_back(std::move(v));
    }
    for (int j = 2; j <= m; ++j) {
        std::vector<int> v;
        int off = 0;
        for (const auto& f : fibers) {
            for (int x : f.map(j).values())
                v.push_back(x + off);
            off += f.arity(j - 1) + 1;
        }
        maps.emplace_back(std::move(v));
    }
    return LevelTree(n, std::move(maps));
}

} // namespace enhom
