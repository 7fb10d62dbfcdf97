#include "enhom/functors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace enhom {

int AlgebraPresentation::max_weight() const
{
    int w = 0;
    for (int x : weights)
        w = std::max(w, x);
    return w;
}

void AlgebraPresentation::validate() const
{
    if (dim < 0)
        throw structural_error("algebra: negative dimension");
    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != dim)
            throw structural_error("algebra: weight count mismatch");
        for (int w : weights)
            if (w <= 0)
                throw structural_error("algebra: weights must be positive");
    }
    if (static_cast<int>(products.size()) != dim)
        throw structural_error("algebra: product table size mismatch");
    auto dense = [&](int u, int v) {
        std::vector<i64> row(static_cast<size_t>(dim), 0);
        for (const auto& [w, c] : products[static_cast<size_t>(u)][static_cast<size_t>(v)])
            row[static_cast<size_t>(w)] += c;
        return row;
    };
    for (int u = 0; u < dim; ++u) {
        if (static_cast<int>(products[static_cast<size_t>(u)].size()) != dim)
            throw structural_error("algebra: product table row size mismatch");
        for (int v = 0; v < dim; ++v) {
            if (dense(u, v) != dense(v, u))
                throw structural_error("algebra: product not commutative");
            if (!weights.empty())
                for (const auto& [w, c] : multiply(u, v))
                    if (c != 0 && weights[static_cast<size_t>(w)] !=
                                      weights[static_cast<size_t>(u)] + weights[static_cast<size_t>(v)])
                        throw structural_error("algebra: product not weight-additive");
        }
    }
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v)
            for (int z = 0; z < dim; ++z) {
                std::vector<i64> lhs(static_cast<size_t>(dim), 0), rhs(static_cast<size_t>(dim), 0);
                for (const auto& [w, c] : multiply(u, v))
                    for (const auto& [y, c2] : multiply(w, z))
                        lhs[static_cast<size_t>(y)] += c * c2;
                for (const auto& [w, c] : multiply(v, z))
                    for (const auto& [y, c2] : multiply(u, w))
                        rhs[static_cast<size_t>(y)] += c * c2;
                if (lhs != rhs)
                    throw structural_error("algebra: product not associative");
            }
}

AlgebraPresentation AlgebraPresentation::truncated_polynomial(int m)
{
    if (m < 2)
        throw structural_error("truncated_polynomial: need m >= 2");
    AlgebraPresentation a;
    a.dim = m - 1;
    a.name = "trunc-poly:" + std::to_string(m);
    a.weights.resize(static_cast<size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i)
        a.weights[static_cast<size_t>(i)] = i + 1;
    a.products.assign(static_cast<size_t>(a.dim),
                      std::vector<std::vector<std::pair<int, i64>>>(static_cast<size_t>(a.dim)));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (i + j + 2 <= m - 1)
                a.products[static_cast<size_t>(i)][static_cast<size_t>(j)] = {{i + j + 1, 1}};
    return a;
}

AlgebraPresentation AlgebraPresentation::square_zero(int d)
{
    AlgebraPresentation a;
    a.dim = d;
    a.name = "square-zero:" + std::to_string(d);
    a.weights.assign(static_cast<size_t>(d), 1);
    a.products.assign(static_cast<size_t>(d),
                      std::vector<std::vector<std::pair<int, i64>>>(static_cast<size_t>(d)));
    return a;
}

namespace {

void monomials_up_to(int gens, int max_weight, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur(static_cast<size_t>(gens), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == gens) {
            int total = max_weight - rest;
            if (total >= 1)
                out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            cur[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, rest - e);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, max_weight);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int wx = std::accumulate(x.begin(), x.end(), 0);
        int wy = std::accumulate(y.begin(), y.end(), 0);
        return std::tie(wx, x) < std::tie(wy, y);
    });
}

} // namespace

AlgebraPresentation AlgebraPresentation::monomial_quotient(
    int gens, const std::vector<std::vector<int>>& ideal_gens, int max_weight)
{
    std::vector<std::vector<int>> monos;
    monomials_up_to(gens, max_weight, monos);
    auto in_ideal = [&](const std::vector<int>& m) {
        for (const auto& g : ideal_gens) {
            bool divides = true;
            for (int i = 0; i < gens; ++i)
                if (m[static_cast<size_t>(i)] < g[static_cast<size_t>(i)]) {
                    divides = false;
                    break;
                }
            if (divides)
                return true;
        }
        return false;
    };
    std::vector<std::vector<int>> survivors;
    for (auto& m : monos)
        if (!in_ideal(m))
            survivors.push_back(m);
    AlgebraPresentation a;
    a.dim = static_cast<int>(survivors.size());
    a.name = "monomial";
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < a.dim; ++i) {
        index[survivors[static_cast<size_t>(i)]] = i;
        a.weights.push_back(std::accumulate(survivors[static_cast<size_t>(i)].begin(),
                                            survivors[static_cast<size_t>(i)].end(), 0));
    }
    a.products.assign(static_cast<size_t>(a.dim),
                      std::vector<std::vector<std::pair<int, i64>>>(static_cast<size_t>(a.dim)));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            std::vector<int> s(static_cast<size_t>(gens));
            for (int g = 0; g < gens; ++g)
                s[static_cast<size_t>(g)] = survivors[static_cast<size_t>(i)][static_cast<size_t>(g)] +
                                            survivors[static_cast<size_t>(j)][static_cast<size_t>(g)];
            auto it = index.find(s);
            if (it != index.end())
                a.products[static_cast<size_t>(i)][static_cast<size_t>(j)] = {{it->second, 1}};
        }
    return a;
}

AlgebraPresentation AlgebraPresentation::polynomial(int gens, int max_weight)
{
    auto a = monomial_quotient(gens, {}, max_weight);
    a.name = "poly:" + std::to_string(gens);
    return a;
}

AlgebraPresentation AlgebraPresentation::from_json_text(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    AlgebraPresentation a;
    a.dim = j.at("dim").get<int>();
    if (j.contains("weights"))
        a.weights = j.at("weights").get<std::vector<int>>();
    if (j.contains("name"))
        a.name = j.at("name").get<std::string>();
    a.products.assign(static_cast<size_t>(a.dim),
                      std::vector<std::vector<std::pair<int, i64>>>(static_cast<size_t>(a.dim)));
    for (const auto& entry : j.at("products")) {
        int u = entry.at(0).get<int>();
        int v = entry.at(1).get<int>();
        if (u < 0 || u >= a.dim || v < 0 || v >= a.dim)
            throw structural_error("algebra json: index out of range");
        std::vector<std::pair<int, i64>> terms;
        for (const auto& t : entry.at(2)) {
            int w = t.at(0).get<int>();
            i64 c = t.at(1).get<i64>();
            if (w < 0 || w >= a.dim)
                throw structural_error("algebra json: index out of range");
            if (c != 0)
                terms.emplace_back(w, c);
        }
        a.products[static_cast<size_t>(u)][static_cast<size_t>(v)] = std::move(terms);
    }
    a.validate();
    return a;
}

std::string AlgebraPresentation::to_json_text() const
{
    nlohmann::ordered_json j;
    j["dim"] = dim;
    if (!weights.empty())
        j["weights"] = weights;
    auto prods = nlohmann::ordered_json::array();
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            if (multiply(u, v).empty())
                continue;
            auto terms = nlohmann::ordered_json::array();
            for (const auto& [w, c] : multiply(u, v))
                terms.push_back({w, c});
            prods.push_back({u, v, terms});
        }
    j["products"] = std::move(prods);
    return j.dump();
}

AlgebraPresentation AlgebraPresentation::named(const std::string& spec, int max_weight)
{
    auto colon = spec.find(':');
    std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
    if (head == "trunc-poly")
        return truncated_polynomial(std::stoi(spec.substr(colon + 1)));
    if (head == "square-zero")
        return square_zero(std::stoi(spec.substr(colon + 1)));
    if (head == "poly") {
        if (max_weight <= 0)
            throw structural_error("poly:* requires a weight bound");
        return polynomial(std::stoi(spec.substr(colon + 1)), max_weight);
    }
    throw structural_error("unknown algebra '" + spec + "'");
}

std::vector<Token> AlgebraModule::basis(const LevelTree& t, int weight) const
{
    int len = t.arity(n_) + 1;
    std::vector<Token> out;
    Token cur(static_cast<size_t>(len));
    auto rec = [&](auto&& self, int pos, int w) -> void {
        if (weight >= 0 && w > weight)
            return;
        if (pos == len) {
            if (weight < 0 || w == weight)
                out.push_back(cur);
            return;
        }
        for (int u = 0; u < alg_.dim; ++u) {
            cur[static_cast<size_t>(pos)] = u;
            self(self, pos + 1, w + (alg_.weight_graded() ? alg_.weight(u) : 0));
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::pair<Token, i64>> AlgebraModule::act(const TreeMorphism& m, const Token& x) const
{
    const Surjection& sn = m.sigma(n_);
    auto pre = sn.preimages();
    // per target slot, fold the fiber product left to right
    std::vector<std::vector<std::pair<int, i64>>> slot(pre.size());
    for (size_t i = 0; i < pre.size(); ++i) {
        const auto& fiber = pre[i];
        std::vector<std::pair<int, i64>> acc = {
            {x[static_cast<size_t>(fiber[0])], 1}};
        for (size_t k = 1; k < fiber.size(); ++k) {
            std::vector<i64> next(static_cast<size_t>(alg_.dim), 0);
            int b = x[static_cast<size_t>(fiber[k])];
            for (const auto& [u, c] : acc)
                for (const auto& [w, c2] : alg_.multiply(u, b))
                    next[static_cast<size_t>(w)] += c * c2;
            acc.clear();
            for (int w = 0; w < alg_.dim; ++w)
                if (next[static_cast<size_t>(w)] != 0)
                    acc.emplace_back(w, next[static_cast<size_t>(w)]);
            if (acc.empty())
                break;
        }
        if (acc.empty())
            return {};
        slot[i] = std::move(acc);
    }
    // expand the tensor product of the slot expansions
    std::vector<std::pair<Token, i64>> out = {{Token{}, 1}};
    for (size_t i = 0; i < slot.size(); ++i) {
        std::vector<std::pair<Token, i64>> next;
        next.reserve(out.size() * slot[i].size());
        for (const auto& [tok, c] : out)
            for (const auto& [u, c2] : slot[i]) {
                Token tk = tok;
                tk.push_back(u);
                next.emplace_back(std::move(tk), c * c2);
            }
        out = std::move(next);
    }
    return out;
}

const std::vector<TreeMorphism>& RepresentableModule::hom_from_base(const LevelTree& t) const
{
    auto it = hom_cache_.find(t);
    if (it == hom_cache_.end())
        it = hom_cache_.emplace(t, hom_set(t0_, t)).first;
    return it->second;
}

std::vector<Token> RepresentableModule::basis(const LevelTree& t, int weight) const
{
    (void)weight;
    std::vector<Token> out;
    const auto& hs = hom_from_base(t);
    out.reserve(hs.size());
    for (int i = 0; i < static_cast<int>(hs.size()); ++i)
        out.push_back({i});
    return out;
}

std::vector<std::pair<Token, i64>> RepresentableModule::act(const TreeMorphism& m,
                                                            const Token& x) const
{
    const auto& src = hom_from_base(m.source);
    const auto& dst = hom_from_base(m.target);
    TreeMorphism g = compose(m, src[static_cast<size_t>(x[0])]);
    auto it = std::find(dst.begin(), dst.end(), g);
    if (it == dst.end())
        throw structural_error("representable: composite missing from hom set");
    return {{{static_cast<int>(it - dst.begin())}, 1}};
}

RepresentableModuleX::RepresentableModuleX(LabeledTree base) : base_(std::move(base)) {}

const std::vector<TreeMorphism>& RepresentableModuleX::hom_from_base(const LevelTree& t) const
{
    auto it = hom_cache_.find(t);
    if (it == hom_cache_.end())
        it = hom_cache_.emplace(t, hom_set(base_.tree, t)).first;
    return it->second;
}

std::vector<Token> RepresentableModuleX::basis(const LevelTree& t, const Surjection& phi) const
{
    std::vector<Token> out;
    const auto& hs = hom_from_base(t);
    for (int i = 0; i < static_cast<int>(hs.size()); ++i)
        if (compose(hs[static_cast<size_t>(i)].sigma(levels()), base_.phi) == phi)
            out.push_back({i});
    return out;
}

std::vector<std::pair<Token, i64>> RepresentableModuleX::act(const TreeMorphism& m,
                                                             const Surjection& phi_src,
                                                             const Token& x) const
{
    (void)phi_src;
    const auto& src = hom_from_base(m.source);
    const auto& dst = hom_from_base(m.target);
    TreeMorphism g = compose(m, src[static_cast<size_t>(x[0])]);
    auto it = std::find(dst.begin(), dst.end(), g);
    if (it == dst.end())
        throw structural_error("representable_X: composite missing from hom set");
    return {{{static_cast<int>(it - dst.begin())}, 1}};
}

std::vector<Token> SkyscraperModule::basis(const LevelTree& t, int weight) const
{
    (void)weight;
    if (t.is_trivial())
        return {{0}};
    return {};
}

std::vector<std::pair<Token, i64>> SkyscraperModule::act(const TreeMorphism& m, const Token& x) const
{
    if (!m.source.is_trivial() || !m.target.is_trivial())
        return {};
    return {{x, 1}};
}

int FiberTuple::source_index() const
{
    int n = -1;
    for (const auto& f : fibers)
        n += static_cast<int>(f.size());
    return n;
}

FiberTuple FiberTuple::from_surjection(const Surjection& f)
{
    FiberTuple g;
    g.fibers = f.preimages();
    return g;
}

Surjection FiberTuple::to_surjection() const
{
    std::vector<int> v(static_cast<size_t>(source_index() + 1));
    for (size_t i = 0; i < fibers.size(); ++i)
        for (int x : fibers[i])
            v[static_cast<size_t>(x)] = static_cast<int>(i);
    return Surjection(std::move(v));
}

std::optional<std::pair<i64, FiberTuple>> homotopy_h(const FiberTuple& g,
                                                     const std::vector<int>& degrees)
{
    const auto& a0 = g.fibers[0];
    if (a0.size() == 1)
        return std::nullopt;
    FiberTuple out;
    out.fibers.reserve(g.fibers.size() + 1);
    out.fibers.push_back({0});
    out.fibers.emplace_back(a0.begin() + 1, a0.end());
    for (size_t i = 1; i < g.fibers.size(); ++i)
        out.fibers.push_back(g.fibers[i]);
    i64 sign = 1;
    if (!degrees.empty() && degrees[0] % 2 != 0)
        sign = -1;
    return std::make_pair(sign, std::move(out));
}

std::vector<std::pair<i64, FiberTuple>> bar_bprime(const FiberTuple& g,
                                                   const std::vector<int>& degrees)
{
    std::vector<std::pair<i64, FiberTuple>> out;
    int m = g.target_index();
    auto fiber_degree = [&](const std::vector<int>& fiber) {
        int d = 0;
        if (!degrees.empty())
            for (int v : fiber)
                d += degrees[static_cast<size_t>(v)];
        return d;
    };
    int run = 0;
    for (int i = 0; i <= m - 1; ++i) {
        run += fiber_degree(g.fibers[static_cast<size_t>(i)]);
        FiberTuple h;
        h.fibers.reserve(static_cast<size_t>(m));
        for (int k = 0; k < i; ++k)
            h.fibers.push_back(g.fibers[static_cast<size_t>(k)]);
        std::vector<int> merged = g.fibers[static_cast<size_t>(i)];
        merged.insert(merged.end(), g.fibers[static_cast<size_t>(i + 1)].begin(),
                      g.fibers[static_cast<size_t>(i + 1)].end());
        h.fibers.push_back(std::move(merged));
        for (int k = i + 2; k <= m; ++k)
            h.fibers.push_back(g.fibers[static_cast<size_t>(k)]);
        i64 sign = ((i + run) % 2 == 0) ? 1 : -1;
        out.emplace_back(sign, std::move(h));
    }
    return out;
}

} // namespace enhom
