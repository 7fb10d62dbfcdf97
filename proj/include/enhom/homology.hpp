#pragma once

#include "enhom/functors.hpp"
#include "enhom/linalg.hpp"
#include "enhom/multicomplex.hpp"

#include <map>

namespace enhom {

struct HomologyResult {
    Ring ring;
    std::vector<long> betti;                     // by total degree
    std::vector<std::vector<mpz_class>> torsion; // by total degree; Z only
    int certified_max = -1;

    long betti_at(int p) const
    {
        return (p >= 0 && p < static_cast<int>(betti.size())) ? betti[static_cast<size_t>(p)] : 0;
    }
};

/// Homology of a chain complex over Q, F_p, or Z (Smith normal form).
HomologyResult homology(const ChainComplex& C, const Ring& ring);

/// Betti numbers of E_n-homology of L^n(A), organized by (degree, weight) for
/// weight-graded algebras. Every cell is exact; sums over weight are complete
/// for degrees <= degree_complete_max.
struct BettiTable {
    Ring ring;
    bool weighted = false;
    int max_degree = 0;
    int max_weight = 0;          // 0 when unweighted
    int degree_complete_max = 0; // per-degree sums complete up to here
    std::map<std::pair<int, int>, long> cells; // (degree, weight) -> betti; weight 0 if unweighted
    std::map<std::pair<int, int>, std::vector<mpz_class>> torsion;

    long betti_by_degree(int p) const;
    std::string to_json() const;
    std::string to_csv() const;
};

/// E_n-homology of L^n(A). Weight-graded algebras are computed per weight
/// (each weight piece is a finite complex); ungraded algebras are truncated at
/// a degree bound with the certified range recorded.
BettiTable en_homology(const AlgebraPresentation& A, int n, const Ring& ring, int max_degree,
                       int max_weight);

/// The weight-w piece of Tot C^{E_n}(L^n(A)) capped at the given tree degree;
/// a cap of n*w (the default behaviour of en_homology) exhausts the piece.
ChainComplex en_weight_complex(const AlgebraPresentation& A, int n, int weight, int degree_cap);

/// Bar homology of a level-1 module: the n = 1 instance of the pipeline.
HomologyResult bar_homology(const EpiModule& F, int degree_bound, const Ring& ring,
                            int weight = -1);

/// Shifted Hochschild homology HH_{*+1}(k + A; k) from the reduced Hochschild
/// complex, built directly on tensor tuples: the independent oracle for bar
/// homology. Indexing matches bar degrees (tuple length - 1).
HomologyResult hochschild_oracle(const AlgebraPresentation& A, int max_degree, const Ring& ring,
                                 int weight = -1);

/// Column-filtration spectral sequence of the E_2 bicomplex of L^2(A), over Q.
/// e1[(p,q)] is computed from the bicomplex; e1_predicted[(p,q)] is the
/// tensor-product expression in bar homology. e2 is the homology of (E^1, d_1).
struct SpectralPage {
    int pq_bound = 0;
    std::map<std::pair<int, int>, long> e1;
    std::map<std::pair<int, int>, long> e1_predicted;
    std::map<std::pair<int, int>, long> e2;
    std::vector<long> abutment; // H^{E_2} Betti numbers by total degree
};

SpectralPage e2_spectral_page(const AlgebraPresentation& A, int pq_bound, int max_weight,
                              bool with_e2 = true);

} // namespace enhom
