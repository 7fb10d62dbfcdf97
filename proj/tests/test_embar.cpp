#include "enhom/embar.hpp"

#include <doctest.h>

using namespace enhom;

TEST_CASE("bar construction is a DG commutative algebra")
{
    for (auto A :
         {AlgebraPresentation::square_zero(2), AlgebraPresentation::truncated_polynomial(3)}) {
        DGAlgebra B1 = bar(dg_from_presentation(A), 6, 6);
        CHECK_NOTHROW(B1.validate());
        DGAlgebra B2 = bar(B1, 6, 6);
        CHECK_NOTHROW(B2.validate());
    }
}

TEST_CASE("zero products kill the simplicial boundary of the first bar")
{
    auto A = AlgebraPresentation::square_zero(2);
    DGAlgebra B1 = bar(dg_from_presentation(A), 6, 6);
    for (int i = 0; i < static_cast<int>(B1.basis.size()); ++i)
        CHECK(B1.diff(i).empty());
    // one level up the simplicial boundary uses the shuffle product and survives
    DGAlgebra B2 = bar(B1, 5, 5);
    bool some_nonzero = false;
    for (int i = 0; i < static_cast<int>(B2.basis.size()); ++i)
        if (!B2.diff(i).empty())
            some_nonzero = true;
    CHECK(some_nonzero);
}

TEST_CASE("shuffle product is graded commutative on sampled words")
{
    auto A = AlgebraPresentation::truncated_polynomial(3);
    DGAlgebra B1 = bar(dg_from_presentation(A), 6, 6);
    auto dense = [&](const std::vector<std::pair<int, i64>>& terms) {
        std::vector<i64> v(B1.basis.size(), 0);
        for (const auto& [i, c] : terms)
            v[static_cast<size_t>(i)] += c;
        return v;
    };
    int n = static_cast<int>(B1.basis.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (B1.basis[static_cast<size_t>(i)].degree + B1.basis[static_cast<size_t>(j)].degree >
                    B1.max_degree ||
                B1.basis[static_cast<size_t>(i)].weight + B1.basis[static_cast<size_t>(j)].weight >
                    B1.max_weight)
                continue;
            auto ab = dense(B1.product(i, j));
            auto ba = dense(B1.product(j, i));
            int s = (B1.basis[static_cast<size_t>(i)].degree *
                     B1.basis[static_cast<size_t>(j)].degree) %
                    2;
            for (int k = 0; k < n; ++k)
                CHECK(ab[static_cast<size_t>(k)] ==
                      (s ? -ba[static_cast<size_t>(k)] : ba[static_cast<size_t>(k)]));
        }
}

TEST_CASE("dimension census: nested words match trees times tensor powers")
{
    auto A = AlgebraPresentation::truncated_polynomial(3); // dim 2
    for (int n = 2; n <= 3; ++n) {
        for (const auto& t : enumerate_trees(n, n + 3)) {
            long trees_with_arities = 0;
            for (const auto& s : enumerate_trees(n, t.degree()))
                if (s.arities() == t.arities())
                    ++trees_with_arities;
            long tensor = 1;
            for (int k = 0; k <= t.arity(n); ++k)
                tensor *= 2;
            long expect = trees_with_arities * tensor;
            CHECK(iterated_bar_dimension(A, n, t.arities(), 2 * (t.arity(n) + 1)) == expect);
        }
    }
}

TEST_CASE("iterated bar at n = 1 equals the bar pipeline")
{
    for (auto A :
         {AlgebraPresentation::truncated_polynomial(3), AlgebraPresentation::square_zero(2)}) {
        AlgebraModule F(A, 1);
        for (int w = 1; w <= 5; ++w) {
            HomologyResult em = iterated_bar_homology(A, 1, Ring::rationals(), w);
            HomologyResult tree = bar_homology(F, w, Ring::rationals(), w);
            int top = std::min(em.certified_max, tree.certified_max);
            for (int p = 0; p <= top; ++p)
                CHECK(em.betti_at(p) == tree.betti_at(p));
        }
    }
}

TEST_CASE("iterated bar at n = 2 matches E_2 homology of the polynomial ideal")
{
    auto A = AlgebraPresentation::polynomial(1, 4);
    AlgebraModule F(A, 2);
    for (int w = 1; w <= 4; ++w) {
        HomologyResult em = iterated_bar_homology(A, 2, Ring::rationals(), w);
        MultiComplex M = build_multicomplex(F, 2 * w, w, w - 1);
        ChainComplex C = totalize(M);
        C.certified_max = C.top_degree();
        HomologyResult tree = homology(C, Ring::rationals());
        for (int p = 0; p <= std::min(em.certified_max, tree.certified_max); ++p)
            CHECK(em.betti_at(p) == tree.betti_at(p));
    }
}

TEST_CASE("iterated bar over F_2 as well")
{
    auto A = AlgebraPresentation::square_zero(1);
    AlgebraModule F(A, 2);
    for (int w = 1; w <= 4; ++w) {
        HomologyResult em = iterated_bar_homology(A, 2, Ring::prime_field(2), w);
        MultiComplex M = build_multicomplex(F, 2 * w, w, w - 1);
        ChainComplex C = totalize(M);
        C.certified_max = C.top_degree();
        HomologyResult tree = homology(C, Ring::prime_field(2));
        for (int p = 0; p <= std::min(em.certified_max, tree.certified_max); ++p)
            CHECK(em.betti_at(p) == tree.betti_at(p));
    }
}

TEST_CASE("bar rejects inputs violating the axioms")
{
    auto A = AlgebraPresentation::square_zero(1);
    DGAlgebra dg = dg_from_presentation(A);
    dg.diff = [](int) { return std::vector<std::pair<int, i64>>{{0, 1}}; }; // d(x) = x
    CHECK_THROWS_AS(dg.validate(), structural_error); // d^2 = d != 0
}
