// Command-line front end: homology tables, verification suites, tree
// listings, and spectral-sequence pages, with machine-readable reports.

#include "enhom/embar.hpp"
#include "enhom/homology.hpp"
#include "enhom/torcat.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace enhom;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

AlgebraPresentation load_algebra(const std::string& spec, int max_weight)
{
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in)
            throw structural_error("cannot open algebra file " + spec.substr(1));
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return AlgebraPresentation::from_json_text(text);
    }
    return AlgebraPresentation::named(spec, max_weight);
}

void emit(const ordered_json& j, const std::string& out_path)
{
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
}

int cmd_homology(const std::string& algebra, int n, const std::string& ring_name, int max_degree,
                 int max_weight, const std::string& out_path, const std::string& csv_path,
                 const std::string& dump_json, const std::string& dump_mm)
{
    AlgebraPresentation A;
    try {
        A = load_algebra(algebra, max_weight);
    } catch (const std::exception& e) {
        ordered_json err;
        err["schema"] = 1;
        err["error"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return kExitInput;
    }
    Ring ring = Ring::parse(ring_name);
    BettiTable T = en_homology(A, n, ring, max_degree, max_weight);
    ordered_json j = ordered_json::parse(T.to_json());
    j["command"] = "homology";
    j["n"] = n;
    j["algebra"] = algebra;
    if (max_degree > T.degree_complete_max)
        j["warning"] = "degrees beyond " + std::to_string(T.degree_complete_max) +
                       " may miss contributions outside the computed range";
    emit(j, out_path);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << T.to_csv();
    }
    if (!dump_json.empty() || !dump_mm.empty()) {
        // raw complexes for external verification, one piece per weight
        int wmax = A.weight_graded() ? max_weight : 0;
        ordered_json dj;
        dj["schema"] = 1;
        auto arr = ordered_json::array();
        std::ostringstream mm;
        for (int w = A.weight_graded() ? 1 : 0; w <= wmax; ++w) {
            ChainComplex C = A.weight_graded()
                                 ? en_weight_complex(A, n, w, max_degree + n + 1)
                                 : totalize(build_multicomplex(AlgebraModule(A, n), max_degree + n + 1));
            if (!dump_json.empty()) {
                ordered_json piece = ordered_json::parse(chain_complex_to_json(C));
                piece["weight"] = w;
                arr.push_back(std::move(piece));
            }
            if (!dump_mm.empty()) {
                mm << "% weight " << w << "\n";
                mm << chain_complex_to_matrix_market(C);
            }
        }
        if (!dump_json.empty()) {
            dj["complexes"] = std::move(arr);
            std::ofstream f(dump_json);
            f << dj.dump(2) << "\n";
        }
        if (!dump_mm.empty()) {
            std::ofstream f(dump_mm);
            f << mm.str();
        }
    }
    return kExitPass;
}

int cmd_trees(int n, int max_degree)
{
    auto all = enumerate_trees(n, max_degree);
    for (const auto& t : all)
        std::cout << t.serialize() << "\n";
    std::cout << "# count " << all.size() << "\n";
    return kExitPass;
}

int cmd_verify_acyclic(int n, int max_tree_degree)
{
    for (const auto& t0 : enumerate_trees(n, max_tree_degree)) {
        RepresentableModule F(t0);
        ChainComplex C = totalize(build_multicomplex(F, max_tree_degree));
        HomologyResult H = homology(C, Ring::integers());
        bool ok = true;
        for (int p = 0; p <= C.top_degree(); ++p) {
            long expect = (t0.is_trivial() && p == 0) ? 1 : 0;
            if (H.betti_at(p) != expect || !H.torsion[static_cast<size_t>(p)].empty())
                ok = false;
        }
        if (!ok) {
            ordered_json j;
            j["schema"] = 1;
            j["command"] = "verify-acyclic";
            j["pass"] = false;
            j["offending_tree"] = t0.serialize();
            j["betti"] = H.betti;
            std::cout << j.dump(2) << "\n";
            return kExitFail;
        }
    }
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "verify-acyclic";
    j["n"] = n;
    j["max_tree_degree"] = max_tree_degree;
    j["pass"] = true;
    std::cout << j.dump(2) << "\n";
    return kExitPass;
}

int cmd_d2_check(int n, const std::string& algebra, int max_weight, int rep_degree, int labeled,
                 int label_degree_bound, unsigned seed)
{
    if (algebra.empty() && rep_degree <= 0 && labeled <= 0) {
        std::cerr << "d2-check: nothing to check; pass --algebra, "
                     "--representables-degree, or --labeled-random\n";
        return kExitInput;
    }
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "d2-check";
    j["n"] = n;
    auto checks = ordered_json::array();
    bool pass = true;
    auto run = [&](const std::string& what, auto&& fn) {
        ordered_json c;
        c["target"] = what;
        try {
            fn();
            c["pass"] = true;
        } catch (const std::exception& e) {
            c["pass"] = false;
            c["error"] = e.what();
            pass = false;
        }
        checks.push_back(std::move(c));
    };

    if (!algebra.empty()) {
        AlgebraPresentation A;
        try {
            A = load_algebra(algebra, max_weight);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitInput;
        }
        AlgebraModule F(A, n);
        for (int w = 1; w <= std::max(1, max_weight); ++w)
            run("L^n(" + algebra + ") weight " + std::to_string(w), [&]() {
                totalize(build_multicomplex(F, n * w, A.weight_graded() ? w : -1,
                                            A.weight_graded() ? w - 1 : -1));
            });
    }
    if (rep_degree > 0) {
        for (const auto& t0 : enumerate_trees(n, rep_degree))
            run("representable " + t0.serialize(), [&]() {
                RepresentableModule F(t0);
                totalize(build_multicomplex(F, rep_degree));
            });
    }
    if (labeled > 0) {
        std::mt19937 rng(seed);
        auto trees = enumerate_trees(n, rep_degree > 0 ? rep_degree : n + 3);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(trees.size()) - 1);
        std::uniform_int_distribution<int> deg(0, label_degree_bound);
        for (int k = 0; k < labeled; ++k) {
            const LevelTree& t0 = trees[static_cast<size_t>(pick(rng))];
            GradedSet X;
            for (int x = 0; x <= t0.arity(n); ++x)
                X.degrees.push_back(deg(rng));
            LabeledTree base(t0, X);
            run("representable_X " + t0.serialize(), [&]() {
                RepresentableModuleX F(base);
                totalize(build_multicomplex_X(F, t0.degree()));
            });
        }
    }
    j["checks"] = std::move(checks);
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
    return pass ? kExitPass : kExitFail;
}

int cmd_ss_page(const std::string& algebra, int pq_bound, int max_weight, bool with_e2,
                const std::string& out_path)
{
    AlgebraPresentation A;
    try {
        A = load_algebra(algebra, max_weight);
        if (!A.weight_graded())
            throw structural_error("ss-page needs a weight-graded algebra");
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInput;
    }
    SpectralPage page = e2_spectral_page(A, pq_bound, max_weight, with_e2);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "ss-page";
    j["algebra"] = algebra;
    j["pq_bound"] = pq_bound;
    auto cells = ordered_json::array();
    bool match = true;
    for (int q = 0; q <= pq_bound; ++q)
        for (int p = 0; p <= pq_bound; ++p) {
            long computed = page.e1.count({p, q}) ? page.e1[{p, q}] : 0;
            long predicted = page.e1_predicted.count({p, q}) ? page.e1_predicted[{p, q}] : 0;
            if (computed != predicted)
                match = false;
            if (computed == 0 && predicted == 0)
                continue;
            ordered_json c;
            c["p"] = p;
            c["q"] = q;
            c["e1"] = computed;
            c["e1_tensor_prediction"] = predicted;
            if (with_e2)
                c["e2"] = page.e2.count({p, q}) ? page.e2[{p, q}] : 0;
            cells.push_back(std::move(c));
        }
    j["cells"] = std::move(cells);
    j["e1_matches_prediction"] = match;
    j["abutment_betti"] = page.abutment;
    emit(j, out_path);
    return match ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact E_n-homology of functors on planar level trees"};
    app.require_subcommand(1);

    std::string algebra, ring_name = "q", out_path, csv_path, dump_json, dump_mm;
    int n = 1, max_degree = 6, max_weight = 0, pq_bound = 4;
    int rep_degree = 0, labeled = 0, label_degree_bound = 2;
    unsigned seed = 1;
    bool with_e2 = false;

    auto* hom = app.add_subcommand("homology", "Betti (and torsion) table of H^{E_n}(L^n(A))");
    hom->add_option("--n", n, "number of levels")->required();
    hom->add_option("--algebra", algebra, "trunc-poly:m | square-zero:d | poly:g | @file.json")
        ->required();
    hom->add_option("--ring", ring_name, "q | z | f:<p>");
    hom->add_option("--max-degree", max_degree, "top homological degree");
    hom->add_option("--max-weight", max_weight, "weight bound (graded algebras)");
    hom->add_option("--out", out_path, "write the JSON report here (default stdout)");
    hom->add_option("--csv", csv_path, "also write a CSV table");
    hom->add_option("--dump-complex", dump_json, "write the raw chain complexes as JSON");
    hom->add_option("--dump-mm", dump_mm, "write the boundary matrices in matrix-market form");

    auto* trees = app.add_subcommand("trees", "canonical listing of n-level trees");
    trees->add_option("--n", n)->required();
    trees->add_option("--max-degree", max_degree)->required();

    auto* ver = app.add_subcommand("verify-acyclic",
                                   "check that representables are acyclic (trivial tree: k)");
    ver->add_option("--n", n)->required();
    ver->add_option("--max-tree-degree", max_degree)->required();

    auto* d2 = app.add_subcommand("d2-check", "verify d^2 = 0 and anticommutation");
    d2->add_option("--n", n)->required();
    d2->add_option("--algebra", algebra);
    d2->add_option("--max-weight", max_weight);
    d2->add_option("--representables-degree", rep_degree,
                   "also check representables of trees up to this degree");
    d2->add_option("--labeled-random", labeled, "random graded labelings to check");
    d2->add_option("--label-degree-bound", label_degree_bound);
    d2->add_option("--seed", seed);

    auto* ss = app.add_subcommand("ss-page", "E^1 page of the E_2 bicomplex vs the tensor "
                                             "prediction in bar homology");
    ss->add_option("--algebra", algebra)->required();
    ss->add_option("--pq-bound", pq_bound);
    ss->add_option("--max-weight", max_weight);
    ss->add_flag("--e2", with_e2, "also compute the E^2 page");
    ss->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hom->parsed())
            return cmd_homology(algebra, n, ring_name, max_degree, max_weight, out_path, csv_path,
                                dump_json, dump_mm);
        if (trees->parsed())
            return cmd_trees(n, max_degree);
        if (ver->parsed())
            return cmd_verify_acyclic(n, max_degree);
        if (d2->parsed())
            return cmd_d2_check(n, algebra, max_weight, rep_degree, labeled, label_degree_bound,
                                seed);
        if (ss->parsed()) {
            if (max_weight <= 0)
                max_weight = 2 * (pq_bound + 2);
            return cmd_ss_page(algebra, pq_bound, max_weight, with_e2, out_path);
        }
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}
