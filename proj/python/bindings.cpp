#include "enhom/embar.hpp"
#include "enhom/homology.hpp"
#include "enhom/torcat.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace enhom;

namespace {

AlgebraPresentation make_algebra(const std::string& spec, int max_weight)
{
    return AlgebraPresentation::named(spec, max_weight);
}

py::dict betti_dict(const BettiTable& T)
{
    py::dict d;
    d["ring"] = T.ring.name();
    d["weighted"] = T.weighted;
    d["degree_complete_max"] = T.degree_complete_max;
    py::list by_degree;
    for (int p = 0; p <= T.max_degree; ++p)
        by_degree.append(T.betti_by_degree(p));
    d["betti_by_degree"] = by_degree;
    py::list cells;
    for (const auto& [key, b] : T.cells) {
        py::dict c;
        c["degree"] = key.first;
        c["weight"] = key.second;
        c["betti"] = b;
        cells.append(c);
    }
    d["cells"] = cells;
    return d;
}

} // namespace

PYBIND11_MODULE(_enhom, m)
{
    m.doc() = "Exact E_n-homology of functors on planar level trees";

    m.def(
        "trees",
        [](int n, int max_degree) {
            std::vector<std::string> out;
            for (const auto& t : enumerate_trees(n, max_degree))
                out.push_back(t.serialize());
            return out;
        },
        py::arg("n"), py::arg("max_degree"),
        "Canonical listing of n-level trees up to the given degree.");

    m.def(
        "hom_count",
        [](const std::string& s, const std::string& t) {
            return hom_set(LevelTree::parse(s), LevelTree::parse(t)).size();
        },
        py::arg("source"), py::arg("target"),
        "Number of tree morphisms between two serialized trees.");

    m.def(
        "en_betti",
        [](int n, const std::string& algebra, const std::string& ring, int max_degree,
           int max_weight) {
            AlgebraPresentation A = make_algebra(algebra, max_weight);
            BettiTable T = en_homology(A, n, Ring::parse(ring), max_degree, max_weight);
            return betti_dict(T);
        },
        py::arg("n"), py::arg("algebra"), py::arg("ring") = "q", py::arg("max_degree") = 6,
        py::arg("max_weight") = 0,
        "Betti table of H^{E_n} of the algebra functor (trunc-poly:m, square-zero:d, poly:g).");

    m.def(
        "bar_betti",
        [](const std::string& algebra, const std::string& ring, int max_degree, int max_weight) {
            AlgebraPresentation A = make_algebra(algebra, max_weight);
            BettiTable T = en_homology(A, 1, Ring::parse(ring), max_degree, max_weight);
            std::vector<long> out;
            for (int p = 0; p <= max_degree; ++p)
                out.push_back(T.betti_by_degree(p));
            return out;
        },
        py::arg("algebra"), py::arg("ring") = "q", py::arg("max_degree") = 6,
        py::arg("max_weight") = 0, "Bar-homology Betti numbers (the n = 1 case).");

    m.def(
        "hochschild_betti",
        [](const std::string& algebra, const std::string& ring, int max_degree, int max_weight) {
            AlgebraPresentation A = make_algebra(algebra, max_weight);
            std::vector<long> out(static_cast<size_t>(max_degree + 1), 0);
            if (A.weight_graded()) {
                for (int w = 1; w <= max_weight; ++w) {
                    HomologyResult H = hochschild_oracle(A, max_degree, Ring::parse(ring), w);
                    for (int p = 0; p <= max_degree; ++p)
                        out[static_cast<size_t>(p)] += H.betti_at(p);
                }
            } else {
                HomologyResult H = hochschild_oracle(A, max_degree, Ring::parse(ring));
                for (int p = 0; p <= max_degree; ++p)
                    out[static_cast<size_t>(p)] = H.betti_at(p);
            }
            return out;
        },
        py::arg("algebra"), py::arg("ring") = "q", py::arg("max_degree") = 6,
        py::arg("max_weight") = 0,
        "Shifted Hochschild homology HH_{*+1}(k+A;k) from the reduced complex.");

    m.def(
        "verify_acyclic",
        [](int n, int max_tree_degree) {
            for (const auto& t0 : enumerate_trees(n, max_tree_degree)) {
                RepresentableModule F(t0);
                ChainComplex C = totalize(build_multicomplex(F, max_tree_degree));
                HomologyResult H = homology(C, Ring::integers());
                for (int p = 0; p <= C.top_degree(); ++p) {
                    long expect = (t0.is_trivial() && p == 0) ? 1 : 0;
                    if (H.betti_at(p) != expect || !H.torsion[static_cast<size_t>(p)].empty())
                        return py::make_tuple(false, t0.serialize());
                }
            }
            return py::make_tuple(true, std::string());
        },
        py::arg("n"), py::arg("max_tree_degree"),
        "Check that every representable is acyclic (trivial tree: a single class in degree 0).");

    m.def(
        "d2_check",
        [](int n, const std::string& algebra, int max_weight) {
            AlgebraPresentation A = make_algebra(algebra, max_weight);
            AlgebraModule F(A, n);
            for (int w = 1; w <= std::max(1, max_weight); ++w)
                totalize(build_multicomplex(F, n * w, A.weight_graded() ? w : -1,
                                            A.weight_graded() ? w - 1 : -1));
            return true;
        },
        py::arg("n"), py::arg("algebra"), py::arg("max_weight") = 4,
        "Verify d^2 = 0 and anticommutation for the algebra functor; throws on failure.");

    m.def(
        "iterated_bar_betti",
        [](const std::string& algebra, int n, const std::string& ring, int max_degree,
           int max_weight) {
            AlgebraPresentation A = make_algebra(algebra, max_weight);
            std::vector<long> out(static_cast<size_t>(max_degree + 1), 0);
            for (int w = 1; w <= max_weight; ++w) {
                HomologyResult H = iterated_bar_homology(A, n, Ring::parse(ring), w);
                for (int p = 0; p <= std::min(max_degree, H.certified_max); ++p)
                    out[static_cast<size_t>(p)] += H.betti_at(p);
            }
            return out;
        },
        py::arg("algebra"), py::arg("n"), py::arg("ring") = "q", py::arg("max_degree") = 5,
        py::arg("max_weight") = 4,
        "Betti numbers of the iterated Eilenberg-MacLane bar construction, reindexed by -n.");

    m.attr("__version__") = "0.1.0";
}
