#include "enhom/functors.hpp"
#include "enhom/multicomplex.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace enhom;

namespace {

LevelTree example_tree14()
{
    return LevelTree(3, {Surjection({0, 0, 1}), Surjection({0, 0, 0, 1, 1, 2, 2, 2, 2})});
}

} // namespace

TEST_CASE("skyscraper totalizes to k in degree 0")
{
    for (int n = 1; n <= 3; ++n) {
        SkyscraperModule F(n);
        ChainComplex C = totalize(build_multicomplex(F, n + 3));
        REQUIRE(C.dims[0] == 1);
        for (int p = 1; p <= C.top_degree(); ++p)
            CHECK(C.dims[static_cast<size_t>(p)] == 0);
        CHECK(C.certified_max == C.top_degree());
    }
}

TEST_CASE("representable of the trivial tree matches the skyscraper spotwise")
{
    for (int n = 1; n <= 3; ++n) {
        RepresentableModule R(LevelTree::trivial(n));
        SkyscraperModule B(n);
        MultiComplex MR = build_multicomplex(R, n + 4);
        MultiComplex MB = build_multicomplex(B, n + 4);
        for (const auto& [key, sp] : MR.spots)
            CHECK(sp.dim == MB.spot(key).dim);
    }
}

TEST_CASE("algebra module spot dimensions are tensor powers")
{
    auto A = AlgebraPresentation::truncated_polynomial(4); // dim 3
    AlgebraModule F(A, 1);
    MultiComplex M = build_multicomplex(F, 5);
    for (int m = 0; m <= 3; ++m) {
        long d = M.spot({m}).dim;
        long expect = 1;
        for (int k = 0; k <= m; ++k)
            expect *= 3;
        CHECK(d == expect);
    }
}

TEST_CASE("n = 1 total differential is -b'")
{
    auto A = AlgebraPresentation::truncated_polynomial(3); // basis x, x^2
    AlgebraModule F(A, 1);
    MultiComplex M = build_multicomplex(F, 6);
    // direct b' on tensor tuples
    for (int m = 1; m <= 4; ++m) {
        const Spot& src = M.spot({m});
        const Spot& dst = M.spot({m - 1});
        SparseMat bprime(dst.dim, src.dim);
        for (long col = 0; col < src.dim; ++col) {
            const Token& t = src.tokens[0][static_cast<size_t>(col)];
            for (int i = 0; i + 1 <= m; ++i) {
                for (const auto& [w, c] :
                     A.multiply(t[static_cast<size_t>(i)], t[static_cast<size_t>(i + 1)])) {
                    Token s;
                    for (int k = 0; k < i; ++k)
                        s.push_back(t[static_cast<size_t>(k)]);
                    s.push_back(w);
                    for (int k = i + 2; k <= m; ++k)
                        s.push_back(t[static_cast<size_t>(k)]);
                    bprime.add(dst.token_index[0].at(s), col, (i % 2 ? -1 : 1) * c);
                }
            }
        }
        CHECK(M.boundary({m}, 1) == bprime.scaled(-1));
    }
}

TEST_CASE("fork trees have no top faces")
{
    LevelTree fork(2, {Surjection::identity(3)});
    CHECK(face_terms(fork, 2).empty());
    RepresentableModule F(fork);
    MultiComplex M = build_multicomplex(F, fork.degree());
    CHECK(M.boundary({2, 2}, 2).is_zero());
    CHECK_FALSE(M.boundary({2, 2}, 1).is_zero());
}

TEST_CASE("d^2 = 0 and anticommutation for representables")
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& t0 : enumerate_trees(n, 6)) {
            RepresentableModule F(t0);
            ChainComplex C = totalize(build_multicomplex(F, 6));
            CHECK(C.certified_max == C.top_degree());
        }
}

TEST_CASE("d^2 = 0 for algebra modules across weights")
{
    for (int n = 1; n <= 3; ++n) {
        auto A = AlgebraPresentation::truncated_polynomial(3);
        AlgebraModule F(A, n);
        for (int w = 1; w <= 4; ++w)
            CHECK_NOTHROW(totalize(build_multicomplex(F, n * w, w, w - 1)));
    }
}

TEST_CASE("d^2 = 0 for random graded labelings")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int n = 2; n <= 3; ++n) {
        auto trees = enumerate_trees(n, n + 4);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(trees.size()) - 1);
        for (int trial = 0; trial < 6; ++trial) {
            const LevelTree& t0 = trees[static_cast<size_t>(pick(rng))];
            GradedSet X;
            for (int x = 0; x <= t0.arity(n); ++x)
                X.degrees.push_back(deg(rng));
            RepresentableModuleX F(LabeledTree(t0, X));
            CHECK_NOTHROW(totalize(build_multicomplex_X(F, t0.degree())));
        }
    }
}

TEST_CASE("degree-zero labelings reproduce the unlabeled complex")
{
    // k[Epi_n(t,-)] decomposes as the direct sum over phi' of
    // k[Epi_n^X((t,phi),-)], compatibly with all differentials
    LevelTree t0(2, {Surjection({0, 0, 1})});
    GradedSet X{{0, 0, 0}};
    RepresentableModule F(t0);
    RepresentableModuleX FX(LabeledTree(t0, X));
    int bound = t0.degree();
    MultiComplex M = build_multicomplex(F, bound);
    MultiComplex MX = build_multicomplex_X(FX, bound);

    for (const auto& [key, spx] : MX.spots) {
        const Spot& sp = M.spot(key);
        REQUIRE(sp.dim == spx.dim);
        // global index bijection: token {i} of (t', phi') -> hom index i of t'
        std::vector<long> perm(static_cast<size_t>(spx.dim));
        for (size_t o = 0; o < spx.objects.size(); ++o) {
            const auto& [tp, phi] = spx.objects[o];
            for (size_t li = 0; li < spx.tokens[o].size(); ++li) {
                long from = spx.offsets[o] + static_cast<long>(li);
                perm[static_cast<size_t>(from)] = sp.index_of(tp, Surjection(), spx.tokens[o][li]);
            }
        }
        for (int j = 1; j <= 2; ++j) {
            if (key[static_cast<size_t>(j - 1)] == 0)
                continue;
            auto tkey = key;
            tkey[static_cast<size_t>(j - 1)] -= 1;
            if (!MX.has_spot(tkey)) {
                CHECK_FALSE(M.has_spot(tkey));
                continue;
            }
            const Spot& tspx = MX.spot(tkey);
            const Spot& tsp = M.spot(tkey);
            std::vector<long> tperm(static_cast<size_t>(tspx.dim));
            for (size_t o = 0; o < tspx.objects.size(); ++o) {
                const auto& [tp, phi] = tspx.objects[o];
                for (size_t li = 0; li < tspx.tokens[o].size(); ++li)
                    tperm[static_cast<size_t>(tspx.offsets[o] + static_cast<long>(li))] =
                        tsp.index_of(tp, Surjection(), tspx.tokens[o][li]);
            }
            const SparseMat& bx = MX.boundary(key, j);
            const SparseMat& b = M.boundary(key, j);
            SparseMat relabeled(b.rows(), b.cols());
            for (const auto& [r, c, v] : bx.triplets())
                relabeled.add(tperm[static_cast<size_t>(r)], perm[static_cast<size_t>(c)], v);
            CHECK(relabeled == b);
        }
    }
}

TEST_CASE("iota embeds C^{E_k} as the zero-arity spots of C^{E_n}")
{
    auto A = AlgebraPresentation::square_zero(2);
    AlgebraModule F2(A, 2);
    AlgebraModule F3(A, 3);
    MultiComplex M2 = build_multicomplex(F2, 6);
    MultiComplex M3 = build_multicomplex(F3, 7);
    // spot (q, p) of n=2 matches spot (0, q, p) of n=3; differentials agree up
    // to the global sign (-1)^{n-k} = -1
    for (const auto& [key2, sp2] : M2.spots) {
        std::vector<int> key3 = {0, key2[0], key2[1]};
        REQUIRE(M3.has_spot(key3));
        CHECK(M3.spot(key3).dim == sp2.dim);
        for (int j = 1; j <= 2; ++j) {
            if (key2[static_cast<size_t>(j - 1)] == 0)
                continue;
            CHECK(M3.boundary(key3, j + 1) == M2.boundary(key2, j).scaled(-1));
        }
    }
}

TEST_CASE("worked example: the three shuffle terms of d^1_0")
{
    LevelTree t = example_tree14();
    auto terms = face_terms(t, 1);
    REQUIRE(terms.size() == 3); // shuffles id, (132), (231)
    // base sign (-1)^{s_{1,0}} = (-1)^8 = +1; subtree degrees 3, 2 | 4
    // id comes with +1, (132) with (-1)^{(2+1)(4+1)} = -1, (231) with
    // (-1)^{(3+1+2+1)(4+1)} = -1
    CHECK(terms[0].coeff == 1);
    CHECK(terms[1].coeff == -1);
    CHECK(terms[2].coeff == -1);
    for (const auto& term : terms)
        CHECK(term.face.target.arities() == std::vector<int>{0, 2, 8});

    auto terms2 = face_terms(t, 2);
    CHECK(terms2.size() == 10); // the (3,2)-shuffles
    for (const auto& term : terms2)
        CHECK(term.i == 0);

    auto terms3 = face_terms(t, 3);
    CHECK(terms3.size() == 6);
    std::vector<int> is, signs;
    for (const auto& term : terms3) {
        is.push_back(term.i);
        signs.push_back(static_cast<int>(term.coeff));
    }
    CHECK(is == std::vector<int>{0, 1, 3, 5, 6, 7});
    // (-1)^{s_{3,i}} with s = 3,4,7,11,12,13
    CHECK(signs == std::vector<int>{-1, 1, -1, -1, 1, -1});
}

TEST_CASE("single face blocks")
{
    // a representable with an empty hom set at the target gives a zero block
    LevelTree t0(2, {Surjection::identity(2)});
    LevelTree palm3(2, {Surjection::constant(3)});
    RepresentableModule F(t0);
    FaceBlock fb = face_map_dij(F, palm3, 2, 0);
    CHECK(fb.matrix.cols() == 0); // no morphisms from the fork to the 3-leaf palm
    CHECK(fb.matrix.is_zero());

    // n = 1: d_i multiplies adjacent tensor factors
    auto A = AlgebraPresentation::truncated_polynomial(3);
    AlgebraModule L(A, 1);
    FaceBlock mult = face_map_dij(L, LevelTree::single(1), 1, 0);
    REQUIRE(mult.row_labels.size() == 2);
    // x (x) x -> x^2, everything else with a factor x^2 dies or lands on nothing
    auto src = L.basis(LevelTree::single(1), -1);
    long col_xx = -1;
    for (long c = 0; c < static_cast<long>(src.size()); ++c)
        if (src[static_cast<size_t>(c)] == Token{0, 0})
            col_xx = c;
    bool found = false;
    for (const auto& [r, c, v] : mult.matrix.triplets())
        if (c == col_xx) {
            CHECK(mult.row_labels[static_cast<size_t>(r)].second == Token{1});
            CHECK(v == 1);
            found = true;
        }
    CHECK(found);

    // the worked example's d^1_0 spreads over the three shuffle targets
    LevelTree ex(3, {Surjection({0, 0, 1}), Surjection({0, 0, 0, 1, 1, 2, 2, 2, 2})});
    SkyscraperModule sky(3);
    FaceBlock fb14 = face_map_dij(sky, ex, 1, 0);
    CHECK(fb14.row_labels.empty()); // skyscraper vanishes away from the trivial tree
    CHECK_THROWS_AS(face_map_dij(sky, ex, 3, 2), structural_error); // inadmissible
}

TEST_CASE("anticommutation failures are diagnosed with the offending spot")
{
    // hand-build a 2-fold complex whose mixed square does not vanish
    MultiComplex M;
    M.n = 2;
    M.degree_bound = 4;
    auto mkspot = [&](std::vector<int> key, long dim) {
        Spot sp;
        sp.dim = dim;
        M.spots.emplace(std::move(key), std::move(sp));
    };
    mkspot({0, 0}, 1);
    mkspot({0, 1}, 1);
    mkspot({1, 1}, 1);
    SparseMat one(1, 1);
    one.add(0, 0, 1);
    M.bnd.emplace(std::make_pair(std::vector<int>{1, 1}, 1), one);
    M.bnd.emplace(std::make_pair(std::vector<int>{1, 1}, 2), SparseMat(0, 1));
    M.bnd.emplace(std::make_pair(std::vector<int>{0, 1}, 2), one);
    try {
        M.verify_anticommutation();
        FAIL("expected a diagnostic");
    } catch (const structural_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("partial_1") != std::string::npos);
        CHECK(msg.find("partial_2") != std::string::npos);
        CHECK(msg.find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("a broken total differential is a hard error")
{
    ChainComplex C;
    C.dims = {1, 1, 1};
    SparseMat one(1, 1);
    one.add(0, 0, 1);
    C.bnd = {SparseMat(0, 1), one, one};
    CHECK_THROWS_AS(C.verify_d_squared(), structural_error);
}

TEST_CASE("chain complex export round trips through JSON triplets")
{
    LevelTree crook(2, {Surjection({0, 0, 1})});
    RepresentableModule F(crook);
    ChainComplex C = totalize(build_multicomplex(F, crook.degree()));
    std::string js = chain_complex_to_json(C);
    CHECK(js.find("\"dims\"") != std::string::npos);
    CHECK(js.find("\"triplets\"") != std::string::npos);
    std::string mm = chain_complex_to_matrix_market(C);
    CHECK(mm.find("%%MatrixMarket matrix coordinate integer general") != std::string::npos);
    // one size line per matrix plus one line per stored entry
    long nnz = 0;
    for (size_t p = 1; p < C.bnd.size(); ++p)
        nnz += C.bnd[p].nnz();
    long data_lines = 0;
    std::istringstream is(mm);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '%')
            ++data_lines;
    CHECK(data_lines == static_cast<long>(C.bnd.size() - 1) + nnz);
}

TEST_CASE("values vanish once a target arity exceeds the base tree")
{
    LevelTree t0(2, {Surjection({0, 1})});
    RepresentableModule F(t0);
    MultiComplex M = build_multicomplex(F, t0.degree() + 1);
    for (const auto& [key, sp] : M.spots)
        if (key[0] > t0.arity(1) || key[1] > t0.arity(2))
            CHECK(sp.dim == 0);
}
