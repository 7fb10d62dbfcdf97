#include "enhom/face.hpp"

namespace enhom {

Surjection restrict_map(const Surjection& f, int i)
{
    if (f(i) != f(i + 1))
        throw structural_error("restrict_map: fibers of i and i+1 differ");
    std::vector<int> v;
    v.reserve(static_cast<size_t>(f.source_size() - 1));
    for (int x = 0; x < f.source_size(); ++x)
        if (x != i)
            v.push_back(f(x));
    return Surjection(std::move(v));
}

FaceExtension top_face(const LevelTree& t, int i)
{
    int n = t.levels();
    if (!face_admissible(t, n, i))
        throw structural_error("top_face: inadmissible face");
    TreeMorphism m;
    m.source = t;
    std::vector<Surjection> maps;
    if (n >= 2) {
        maps = t.maps();
        maps.back() = restrict_map(t.map(n), i);
    }
    m.target = n == 1 ? LevelTree::single(t.arity(1) - 1)
                      : LevelTree(n, std::move(maps));
    for (int l = 1; l < n; ++l)
        m.sigmas.push_back(Surjection::identity(t.arity(l) + 1));
    m.sigmas.push_back(Surjection::face(t.arity(n) + 1, i));
    LevelTree target = m.target;
    return {std::move(m), std::move(target)};
}

FaceExtension extend_face(const LevelTree& t, int j, int i, const Shuffle& tau)
{
    int n = t.levels();
    if (j < 1 || j >= n)
        throw structural_error("extend_face: level must satisfy 1 <= j < n");
    if (!face_admissible(t, j, i))
        throw structural_error("extend_face: inadmissible face");

    const Surjection& fj1 = t.map(j + 1);
    auto fibers = fj1.fiber_intervals();
    auto [a0, a1] = fibers[static_cast<size_t>(i)];
    auto [b0, b1] = fibers[static_cast<size_t>(i + 1)];
    int p = a1 - a0, q = b1 - b0;
    if (tau.p != p || tau.q != q)
        throw structural_error("extend_face: shuffle has wrong block sizes");

    // tau_{j+1}: shuffle the two fibers, identity elsewhere
    std::vector<int> tj1(static_cast<size_t>(t.arity(j + 1) + 1));
    for (int v = 0; v <= t.arity(j + 1); ++v)
        tj1[static_cast<size_t>(v)] = v;
    for (int a = 0; a < p; ++a)
        tj1[static_cast<size_t>(a0 + a)] = a0 + tau.perm[static_cast<size_t>(a)];
    for (int b = 0; b < q; ++b)
        tj1[static_cast<size_t>(b0 + b)] = a0 + tau.perm[static_cast<size_t>(p + b)];

    // propagate upwards: tau_k is determined by tau_{k-1} and f_k
    std::vector<Surjection> taus; // tau_{j+1}, ..., tau_n
    std::vector<Surjection> gs;   // g_{j+2}, ..., g_n
    taus.emplace_back(std::move(tj1));
    for (int k = j + 2; k <= n; ++k) {
        const Surjection& fk = t.map(k);
        const Surjection& prev = taus.back();
        int rk1 = t.arity(k - 1);
        // fiber sizes of g_k: |g_k^{-1}(v)| = |f_k^{-1}(prev^{-1}(v))|
        auto src_fibers = fk.fiber_intervals();
        std::vector<int> inv(static_cast<size_t>(rk1 + 1));
        for (int w = 0; w <= rk1; ++w)
            inv[static_cast<size_t>(prev(w))] = w;
        std::vector<int> sizes(static_cast<size_t>(rk1 + 1));
        for (int v = 0; v <= rk1; ++v) {
            auto [f0, f1] = src_fibers[static_cast<size_t>(inv[static_cast<size_t>(v)])];
            sizes[static_cast<size_t>(v)] = f1 - f0;
        }
        std::vector<int> offsets(static_cast<size_t>(rk1 + 2), 0);
        for (int v = 0; v <= rk1; ++v)
            offsets[static_cast<size_t>(v + 1)] =
                offsets[static_cast<size_t>(v)] + sizes[static_cast<size_t>(v)];
        std::vector<int> gk(static_cast<size_t>(t.arity(k) + 1));
        for (int v = 0; v <= rk1; ++v)
            for (int x = offsets[static_cast<size_t>(v)]; x < offsets[static_cast<size_t>(v + 1)]; ++x)
                gk[static_cast<size_t>(x)] = v;
        std::vector<int> tk(static_cast<size_t>(t.arity(k) + 1));
        for (int w = 0; w <= rk1; ++w) {
            auto [f0, f1] = src_fibers[static_cast<size_t>(w)];
            int dst = offsets[static_cast<size_t>(prev(w))];
            for (int x = f0; x < f1; ++x)
                tk[static_cast<size_t>(x)] = dst++;
        }
        gs.emplace_back(std::move(gk));
        taus.emplace_back(std::move(tk));
    }

    // target tree: (f_2,...,f_{j-1}, f_j|_{i=i+1}, d_i f_{j+1}, g_{j+2},...,g_n)
    std::vector<Surjection> maps;
    for (int k = 2; k < j; ++k)
        maps.push_back(t.map(k));
    if (j >= 2)
        maps.push_back(restrict_map(t.map(j), i));
    maps.push_back(compose(Surjection::face(t.arity(j) + 1, i), fj1));
    for (auto& g : gs)
        maps.push_back(std::move(g));
    LevelTree target(n, std::move(maps));
    TreeMorphism m;
    m.source = t;
    m.target = target;
    for (int l = 1; l < j; ++l)
        m.sigmas.push_back(Surjection::identity(t.arity(l) + 1));
    m.sigmas.push_back(Surjection::face(t.arity(j) + 1, i));
    for (auto& s : taus)
        m.sigmas.push_back(std::move(s));
    return {std::move(m), std::move(target)};
}

} // namespace enhom
