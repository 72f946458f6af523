// Python bindings for the main operations.  Affine permutations cross the
// boundary as window lists, classes as lists of (shape, qdeg, coeff).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhgr/affine.hpp"
#include "qhgr/nilcox.hpp"
#include "qhgr/niltl.hpp"
#include "qhgr/peterson.hpp"
#include "qhgr/quantum.hpp"
#include "qhgr/roots.hpp"
#include "qhgr/shapes.hpp"
#include "qhgr/svg.hpp"
#include "qhgr/textio.hpp"
#include "qhgr/verify.hpp"

#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace qhgr;

namespace {

using Terms = std::vector<std::tuple<Partition, i64, i64>>;

Terms qc_terms(const QClass& x) {
    Terms out;
    for (const auto& [key, c] : x.terms) out.emplace_back(key.second, key.first, c);
    return out;
}

AffinePermutation win(const std::vector<i64>& window) {
    return AffinePermutation(static_cast<i64>(window.size()), window);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact Schubert products in QH*(Gr(m,n)) by the Pieri and affine routes";

    mod.def("qpieri", [](i64 m, i64 n, i64 r, const Partition& lam) { return qc_terms(qpieri(m, n, r, lam)); },
            py::arg("m"), py::arg("n"), py::arg("r"), py::arg("lam"),
            "expansion of s[r]*s[lam] as [(shape, qdeg, coeff), ...]");
    mod.def("qproduct",
            [](i64 m, i64 n, const Partition& a, const Partition& b) { return qc_terms(qproduct(m, n, a, b)); },
            py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("mu"),
            "Schubert product by iterated Pieri rules");
    mod.def("peterson_product",
            [](i64 m, i64 n, const Partition& a, const Partition& b) {
                PetersonContext ctx(m, n);
                return qc_terms(peterson_product(ctx, a, b));
            },
            py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("mu"),
            "the same product computed through the affine algebra");
    mod.def("product_text",
            [](i64 m, i64 n, const Partition& a, const Partition& b) { return qclass_to_text(qproduct(m, n, a, b)); },
            py::arg("m"), py::arg("n"), py::arg("lam"), py::arg("mu"));

    mod.def("from_word",
            [](i64 n, const std::vector<i64>& letters) { return from_word(n, letters).window(); },
            py::arg("n"), py::arg("letters"));
    mod.def("reduced_word", [](const std::vector<i64>& w) { return reduced_word(win(w)).letters; },
            py::arg("window"));
    mod.def("length", [](const std::vector<i64>& w) { return win(w).length(); }, py::arg("window"));
    mod.def("is_grassmannian", [](const std::vector<i64>& w) { return win(w).is_grassmannian(); },
            py::arg("window"));
    mod.def("is_in_coset_set", [](const std::vector<i64>& w, i64 m) { return is_in_SnP(win(w), m); },
            py::arg("window"), py::arg("m"));
    mod.def("supports_braid", [](const std::vector<i64>& w) { return supports_braid(win(w)); },
            py::arg("window"));

    mod.def("kbounded_to_core", &kbounded_to_core, py::arg("n"), py::arg("lam"));
    mod.def("core_to_kbounded", &core_to_kbounded, py::arg("n"), py::arg("core"));
    mod.def("kconjugate", &kconjugate, py::arg("n"), py::arg("lam"));
    mod.def("grassmannian_shape",
            [](const std::vector<i64>& w) { return grassmannian_to_kbounded(win(w)); }, py::arg("window"),
            "bounded shape of an increasing window");
    mod.def("shape_window",
            [](i64 n, const Partition& lam) { return kbounded_to_grassmannian(n, lam).window(); },
            py::arg("n"), py::arg("lam"));
    mod.def("strange_dual",
            [](i64 m, i64 n, const Partition& p) {
                auto sd = strange_dual(m, n, p);
                return std::make_pair(sd.shape, sd.diag);
            },
            py::arg("m"), py::arg("n"), py::arg("shape"), "(dual shape, diagonal box count)");

    mod.def("verify_eheq", &verify_eheq, py::arg("n"));
    mod.def("modpet_ok",
            [](i64 m, i64 n) {
                PetersonContext ctx(m, n);
                return modpet_check(ctx).all_pass();
            },
            py::arg("m"), py::arg("n"), "generator dictionary of the corrected composite map");
    mod.def("postnikov_ok", [](i64 m, i64 n) { return postnikov_generator_check(m, n).all_pass(); },
            py::arg("m"), py::arg("n"), "generator dictionary of the factored map");

    mod.def("alcove_svg",
            [](i64 radius, const std::string& highlight, i64 m) {
                auto kind = highlight == "jp" ? AlcoveHighlight::coset_set : AlcoveHighlight::grassmannian;
                return alcove_svg(3, radius, kind, m);
            },
            py::arg("radius"), py::arg("highlight") = "jp", py::arg("m") = 1);

    mod.def("run_acceptance",
            [](i64 max_n) {
                VerifyOptions opts;
                if (max_n > 0) opts.max_n = max_n;
                std::vector<std::tuple<std::string, bool, double, std::string>> out;
                for (const auto& r : run_acceptance(opts))
                    out.emplace_back(r.name, r.pass, r.seconds, r.detail);
                return out;
            },
            py::arg("max_n") = 0, "[(criterion, pass, seconds, detail), ...]");
}
