#pragma once

#include "enhom/sparse.hpp"

#include <gmpxx.h>

namespace enhom {

enum class RingKind { Q, Fp, Z };

struct Ring {
    RingKind kind = RingKind::Q;
    long p = 0; // prime, for Fp

    static Ring rationals() { return {RingKind::Q, 0}; }
    static Ring prime_field(long p) { return {RingKind::Fp, p}; }
    static Ring integers() { return {RingKind::Z, 0}; }

    std::string name() const;
    /// Parse "q", "z", "f:<p>", "fp:<p>".
    static Ring parse(const std::string&);
};

/// Exact rank via sparse Gaussian elimination over the rationals.
long rank_q(const SparseMat& m);
/// Exact rank over F_p.
long rank_fp(const SparseMat& m, long p);
/// Rank over a field ring (throws for Z; use snf).
long rank(const SparseMat& m, const Ring& ring);

/// Smith normal form invariant factors d_1 | d_2 | ... (all positive, 1s
/// included); their count is the rank over Q.
std::vector<mpz_class> snf(const SparseMat& m);

/// Basis of the kernel over Q, as dense coordinate vectors of length cols().
std::vector<std::vector<mpq_class>> kernel_basis_q(const SparseMat& m);

/// Dense rational matrix, row-major; the small-scale workhorse for the
/// spectral-sequence page computations.
struct QMat {
    long rows = 0, cols = 0;
    std::vector<std::vector<mpq_class>> a;

    QMat() = default;
    QMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r), std::vector<mpq_class>(static_cast<size_t>(c))) {}
    mpq_class& at(long r, long c) { return a[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const mpq_class& at(long r, long c) const { return a[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
};

long rank_dense(QMat m);
/// Solve A x = b for each column of b; throws structural_error if inconsistent.
QMat solve_dense(const QMat& A, const QMat& b);

} // namespace enhom
