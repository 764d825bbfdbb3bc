#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crossfam/cli.hpp"
#include "crossfam/compression.hpp"
#include "crossfam/hereditary.hpp"
#include "crossfam/prooflab.hpp"
#include "crossfam/report.hpp"
#include "crossfam/search.hpp"

namespace py = pybind11;
using namespace crossfam;

namespace {

using Members = std::vector<std::vector<int>>;

// Structured results cross the boundary as plain dicts.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SearchOptions options(const std::string& strategy, unsigned threads) {
    SearchOptions o;
    o.strategy = parse_strategy(strategy);
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact search and verification for cross-intersecting set families";
    m.attr("__version__") = kVersion;

    auto base = py::register_exception<std::runtime_error>(m, "CrossfamError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    py::register_exception<VerificationFailure>(m, "VerificationFailure", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);

    py::class_<SetFamily>(m, "SetFamily")
        .def(py::init([](int n, const Members& members) {
                 std::vector<Word> words;
                 for (const auto& s : members) words.push_back(SetWord::of(s, n).bits());
                 return SetFamily(n, std::move(words));
             }),
             py::arg("n"), py::arg("members") = Members{})
        .def_property_readonly("n", &SetFamily::ground_n)
        .def("members",
             [](const SetFamily& f) {
                 Members out;
                 for (const auto& s : f.members()) out.push_back(s.elements());
                 return out;
             })
        .def("__len__", &SetFamily::size)
        .def("__contains__",
             [](const SetFamily& f, const std::vector<int>& s) {
                 return f.contains(SetWord::of(s, f.ground_n()).bits());
             })
        .def("__eq__", [](const SetFamily& a, const SetFamily& b) { return a == b; })
        .def("__repr__", [](const SetFamily& f) {
            return "SetFamily(n=" + std::to_string(f.ground_n()) + ", " + f.to_string() + ")";
        });

    m.def("bounded_family", &bounded_family, py::arg("n"), py::arg("r"));
    m.def("power_set", &power_set, py::arg("n"));
    m.def("star", &star, py::arg("f"), py::arg("x"));
    m.def("downward_closure", &downward_closure);
    m.def("bases", &bases);
    m.def("star_size_bound", &star_size_bound, py::arg("n"), py::arg("r"));
    m.def("is_intersecting", &is_intersecting);
    m.def("are_cross_intersecting", &are_cross_intersecting);
    m.def("is_hereditary", &is_hereditary);
    m.def("is_compressed", &is_compressed);
    m.def("potential", &potential);

    m.def("apply_compression", [](int i, int j, const SetFamily& f) {
        return apply_compression({i, j}, f);
    }, py::arg("i"), py::arg("j"), py::arg("f"));
    m.def("compress_to_fixed_point", [](const SetFamily& f) {
        const CompressedFamily c = compress_to_fixed_point(f);
        return py::make_tuple(c.family, to_py(to_json(c.trace)));
    }, "Returns (family, trace).");
    m.def("compress_pair_to_fixed_point", [](const SetFamily& a, const SetFamily& b) {
        const CompressedPair c = compress_pair_to_fixed_point(a, b);
        return py::make_tuple(c.a, c.b, to_py(to_json(c.trace)));
    }, "Returns (a, b, trace).");

    m.def("enumerate_downsets", [](int n, bool compressed_only) {
        return enumerate_downsets(n, compressed_only).families;
    }, py::arg("n"), py::arg("compressed_only") = false);
    m.def("lemma2_check", &lemma2_check, py::arg("h"), py::arg("x"));
    m.def("lemma2_injection", [](const SetFamily& h, int x) {
        return to_py(to_json(lemma2_injection(h, x)));
    }, py::arg("h"), py::arg("x"));

    m.def("find_conflicts", [](const SetFamily& a, const SetFamily& b) {
        return to_py(to_json(find_conflicts(a, b)));
    });
    m.def("alteration_ledger",
          [](const SetFamily& a, const SetFamily& b, std::optional<SetFamily> g,
             std::optional<SetFamily> h) {
              return to_py(to_json(assemble_alteration(find_conflicts(a, b), a, b, g, h)));
          },
          py::arg("a"), py::arg("b"), py::arg("g") = py::none(), py::arg("h") = py::none());
    m.def("am_gm_endgame", &am_gm_endgame, py::arg("n"), py::arg("a"));

    m.def("best_partner", py::overload_cast<const SetFamily&, const SetFamily&>(&best_partner),
          py::arg("a"), py::arg("ground"));
    m.def("galois_closure",
          py::overload_cast<const SetFamily&, const SetFamily&, const SetFamily&>(&galois_closure),
          py::arg("a"), py::arg("ground_a"), py::arg("ground_b"));
    m.def("max_product", [](const SetFamily& ga, const SetFamily& gb, const std::string& strategy,
                            unsigned threads) {
        SearchResult r;
        {
            py::gil_scoped_release release;
            r = max_product_over(ga, gb, options(strategy, threads));
        }
        return to_py(to_json(r));
    }, py::arg("ground_a"), py::arg("ground_b"), py::arg("strategy") = "auto", py::arg("threads") = 1);
    m.def("verify_theorem1", [](int mm, int n, int r, int s, const std::string& strategy) {
        return to_py(to_json(verify_theorem1(mm, n, r, s, options(strategy, 1))));
    }, py::arg("m"), py::arg("n"), py::arg("r"), py::arg("s"), py::arg("strategy") = "auto");
    m.def("verify_theorem4", [](const SetFamily& g, const SetFamily& h) {
        return to_py(to_json(verify_theorem4(g, h)));
    });
    m.def("verify_corollary3", [](const std::vector<int>& n_list) {
        return to_py(to_json(verify_corollary3(n_list)));
    });
    m.def("verify_theorem5", [](const std::vector<SetFamily>& grounds) {
        return to_py(to_json(verify_theorem5(grounds)));
    });
    m.def("pairwise_to_k_product",
          [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& s) {
              return pairwise_to_k_product(a, s);
          });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs one crossfam command line; returns (exit_code, stdout, stderr).");
}
