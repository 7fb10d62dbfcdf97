#include "enhom/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace enhom;

namespace {

// Textbook dense elimination over Q: the independent oracle for the sparse
// rank path.
long dense_rank_oracle(const SparseMat& m)
{
    std::vector<std::vector<mpq_class>> a(static_cast<size_t>(m.rows()),
                                          std::vector<mpq_class>(static_cast<size_t>(m.cols())));
    for (const auto& [r, c, v] : m.triplets())
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<long>(v);
    long rank = 0;
    size_t prow = 0;
    for (size_t c = 0; c < static_cast<size_t>(m.cols()) && prow < a.size(); ++c) {
        size_t piv = prow;
        while (piv < a.size() && sgn(a[piv][c]) == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[prow]);
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == prow || sgn(a[r][c]) == 0)
                continue;
            mpq_class f = a[r][c] / a[prow][c];
            for (size_t cc = c; cc < a[r].size(); ++cc)
                a[r][cc] -= f * a[prow][cc];
        }
        ++prow;
        ++rank;
    }
    return rank;
}

// gcd of all k x k minors: the determinant-divisor oracle for SNF
mpz_class minor_gcd(const SparseMat& m, int k)
{
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(m.rows()),
                                          std::vector<mpz_class>(static_cast<size_t>(m.cols())));
    for (const auto& [r, c, v] : m.triplets())
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<long>(v);
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
    mpz_class g = 0;
    auto det = [&](const std::vector<int>& rr, const std::vector<int>& cc) {
        // Laplace over the first row; k <= 3 in the tests
        auto rec = [&](auto&& self, std::vector<int> r2, std::vector<int> c2) -> mpz_class {
            if (r2.empty())
                return 1;
            mpz_class d = 0;
            for (size_t j = 0; j < c2.size(); ++j) {
                std::vector<int> rn(r2.begin() + 1, r2.end());
                std::vector<int> cn = c2;
                cn.erase(cn.begin() + static_cast<long>(j));
                mpz_class sub = self(self, rn, cn);
                mpz_class term =
                    a[static_cast<size_t>(r2[0])][static_cast<size_t>(c2[j])] * sub;
                d += (j % 2 == 0) ? term : -term;
            }
            return d;
        };
        return rec(rec, rr, cc);
    };
    auto pick = [&](auto&& self, std::vector<int>& sel, int from, int need, int limit,
                    auto&& next) -> void {
        if (need == 0) {
            next(sel);
            return;
        }
        for (int x = from; x <= limit - need; ++x) {
            sel.push_back(x);
            self(self, sel, x + 1, need - 1, limit, next);
            sel.pop_back();
        }
    };
    std::vector<int> rsel, csel;
    pick(pick, rsel, 0, k, static_cast<int>(m.rows()), [&](std::vector<int>& rr) {
        std::vector<int> cs;
        pick(pick, cs, 0, k, static_cast<int>(m.cols()), [&](std::vector<int>& cc) {
            mpz_class d = det(rr, cc);
            g = gcd(g, d);
        });
    });
    return abs(g);
}

SparseMat random_matrix(std::mt19937& rng, long rows, long cols, int lo, int hi, double density)
{
    SparseMat m(rows, cols);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(lo, hi);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
            if (coin(rng) < density) {
                int v = val(rng);
                if (v != 0)
                    m.add(r, c, v);
            }
    return m;
}

} // namespace

TEST_CASE("rank basics")
{
    SparseMat z(4, 7);
    CHECK(rank_q(z) == 0);
    CHECK(rank_fp(z, 5) == 0);
    CHECK(rank_q(SparseMat::identity(6)) == 6);
    CHECK(rank_fp(SparseMat::identity(6), 2) == 6);
    CHECK_THROWS_AS(rank(z, Ring::integers()), structural_error);
}

TEST_CASE("rank agrees with the dense oracle on random matrices")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        long rows = 1 + static_cast<long>(rng() % 8);
        long cols = 1 + static_cast<long>(rng() % 8);
        SparseMat m = random_matrix(rng, rows, cols, -4, 4, 0.5);
        long expect = dense_rank_oracle(m);
        CHECK(rank_q(m) == expect);
        // over F_p the rank can only drop
        CHECK(rank_fp(m, 2) <= expect);
        CHECK(rank_fp(m, 99991) == expect); // huge prime: no accidental drops here
    }
}

TEST_CASE("rank over F_p detects characteristic collapse")
{
    SparseMat m(2, 2);
    m.add(0, 0, 2);
    m.add(1, 1, 3);
    CHECK(rank_q(m) == 2);
    CHECK(rank_fp(m, 2) == 1);
    CHECK(rank_fp(m, 3) == 1);
    CHECK(rank_fp(m, 5) == 2);
}

TEST_CASE("smith normal form examples")
{
    SparseMat d(2, 2);
    d.add(0, 0, 2);
    d.add(1, 1, 3);
    auto inv = snf(d);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 6);

    auto ones = snf(SparseMat::identity(5));
    REQUIRE(ones.size() == 5);
    for (const auto& v : ones)
        CHECK(v == 1);
}

TEST_CASE("smith normal form against the determinant-divisor oracle")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        long rows = 1 + static_cast<long>(rng() % 3);
        long cols = 1 + static_cast<long>(rng() % 4);
        SparseMat m = random_matrix(rng, rows, cols, -5, 5, 0.7);
        auto inv = snf(m);
        CHECK(static_cast<long>(inv.size()) == rank_q(m));
        for (size_t i = 0; i + 1 < inv.size(); ++i)
            CHECK(sgn(inv[i + 1] % inv[i]) == 0);
        // d_1 ... d_k = gcd of k x k minors
        mpz_class prod = 1;
        for (size_t k = 1; k <= inv.size() && k <= 3; ++k) {
            prod *= inv[k - 1];
            CHECK(prod == minor_gcd(m, static_cast<int>(k)));
        }
    }
}

TEST_CASE("kernel basis over Q")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        long rows = 1 + static_cast<long>(rng() % 6);
        long cols = 1 + static_cast<long>(rng() % 6);
        SparseMat m = random_matrix(rng, rows, cols, -3, 3, 0.5);
        auto kb = kernel_basis_q(m);
        CHECK(static_cast<long>(kb.size()) == m.cols() - rank_q(m));
        for (const auto& v : kb) {
            // check M v = 0
            std::vector<mpq_class> out(static_cast<size_t>(m.rows()));
            for (const auto& [r, c, val] : m.triplets())
                out[static_cast<size_t>(r)] += mpq_class(static_cast<long>(val)) * v[static_cast<size_t>(c)];
            for (const auto& x : out)
                CHECK(sgn(x) == 0);
        }
    }
}

TEST_CASE("dense helpers")
{
    QMat a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    CHECK(rank_dense(a) == 2);
    QMat b(2, 1);
    b.at(0, 0) = 5;
    b.at(1, 0) = 6;
    QMat x = solve_dense(a, b);
    CHECK(x.at(0, 0) == mpq_class(-4));
    CHECK(x.at(1, 0) == mpq_class(9, 2));

    QMat sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 1;
    QMat rhs(2, 1);
    rhs.at(0, 0) = 1;
    rhs.at(1, 0) = 2;
    CHECK_THROWS_AS(solve_dense(sing, rhs), structural_error);
}

TEST_CASE("ring parsing")
{
    CHECK(Ring::parse("q").kind == RingKind::Q);
    CHECK(Ring::parse("z").kind == RingKind::Z);
    CHECK(Ring::parse("f:7").p == 7);
    CHECK(Ring::parse("fp:13").p == 13);
    CHECK_THROWS_AS(Ring::parse("f:6"), structural_error);
    CHECK_THROWS_AS(Ring::parse("r"), structural_error);
}
