#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "kings/deletion.hpp"
#include "kings/inflation.hpp"
#include "kings/kingdom.hpp"
#include "kings/mobius.hpp"
#include "kings/patterns.hpp"
#include "kings/permutation.hpp"
#include "kings/poset.hpp"
#include "kings/verify.hpp"

namespace py = pybind11;
using namespace kings;

namespace {

template <typename T>
std::vector<T> as_list(const std::set<T>& s) {
  return {s.begin(), s.end()};
}

} // namespace

PYBIND11_MODULE(kingposet, m) {
  m.doc() = "King permutations, their containment poset, and its Möbius function";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("one_line"))
      .def(py::init([](const std::string& text) { return Permutation::parse(text); }),
           py::arg("text"))
      .def_property_readonly("values", &Permutation::values)
      .def("at", &Permutation::at, py::arg("pos"), "value at a 1-based position")
      .def("position_of", &Permutation::position_of, py::arg("value"))
      .def("__len__", &Permutation::size)
      .def("__repr__", &Permutation::bracket_string)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__",
           [](const Permutation& p) { return std::hash<Permutation>{}(p); });
  py::implicitly_convertible<py::list, Permutation>();
  py::implicitly_convertible<py::str, Permutation>();

  py::class_<BlockSpan>(m, "BlockSpan")
      .def_readonly("start", &BlockSpan::start)
      .def_readonly("length", &BlockSpan::length)
      .def("__repr__", [](const BlockSpan& b) {
        return "BlockSpan(start=" + std::to_string(b.start) +
               ", length=" + std::to_string(b.length) + ")";
      });

  py::class_<SeparatorReport>(m, "SeparatorReport")
      .def_readonly("value", &SeparatorReport::value)
      .def_readonly("vertical", &SeparatorReport::vertical)
      .def_readonly("horizontal", &SeparatorReport::horizontal)
      .def_readonly("vertical_witness", &SeparatorReport::vertical_witness)
      .def_readonly("horizontal_witness", &SeparatorReport::horizontal_witness);

  py::class_<InflationDecomposition>(m, "InflationDecomposition")
      .def_readonly("skeleton", &InflationDecomposition::skeleton)
      .def_readonly("components", &InflationDecomposition::components)
      .def_readonly("offsets", &InflationDecomposition::offsets);

  py::class_<KingDownset>(m, "KingDownset")
      .def_readonly("root", &KingDownset::root)
      .def_readonly("nodes", &KingDownset::nodes)
      .def_readonly("cover_edges", &KingDownset::cover_edges);

  // permutation basics
  m.def("standardize", [](const std::vector<int>& seq) { return standardize(seq); },
        py::arg("seq"));
  m.def("inverse", &inverse, py::arg("p"));
  m.def("reverse", &reverse, py::arg("p"));
  m.def("manhattan_distance", &manhattan_distance, py::arg("p"), py::arg("i"), py::arg("j"));
  m.def("breadth", &breadth, py::arg("p"));
  m.def("is_king", &is_king, py::arg("p"));
  m.def("blocks", [](const Permutation& p) { return as_list(blocks(p)); }, py::arg("p"));
  m.def("strict_k_blocks",
        [](const Permutation& p, int k) { return as_list(strict_k_blocks(p, k)); },
        py::arg("p"), py::arg("k"));
  m.def("is_simple", &is_simple, py::arg("p"));
  m.def("is_k_prolific", &is_k_prolific, py::arg("p"), py::arg("k"));
  m.def("ascii_plot", &ascii_plot, py::arg("p"));

  // deletion and separators
  m.def("delete_position", &delete_position, py::arg("p"), py::arg("i"));
  m.def("delete_value", &delete_value, py::arg("p"), py::arg("v"));
  m.def("delete_values",
        [](const Permutation& p, const std::vector<int>& vs) { return delete_values(p, vs); },
        py::arg("p"), py::arg("values"));
  m.def("delete_values_trace",
        [](const Permutation& p, const std::vector<int>& vs) {
          return delete_values_trace(p, vs);
        },
        py::arg("p"), py::arg("values"));
  m.def("separators", &separators, py::arg("p"));
  m.def("sep_v", [](const Permutation& p) { return as_list(sep_v(p)); }, py::arg("p"));
  m.def("sep_h", [](const Permutation& p) { return as_list(sep_h(p)); }, py::arg("p"));

  // patterns
  m.def("contains", &contains, py::arg("host"), py::arg("pattern"));
  m.def("avoids", &avoids, py::arg("host"), py::arg("pattern"));
  m.def("occurrences",
        [](const Permutation& host, const Permutation& pattern) {
          std::vector<std::vector<int>> out;
          for (const PatternOccurrence& o : occurrences(host, pattern)) {
            out.push_back(o.positions);
          }
          return out;
        },
        py::arg("host"), py::arg("pattern"));
  m.def("distinct_subpatterns",
        [](const Permutation& host, int k) { return as_list(distinct_subpatterns(host, k)); },
        py::arg("host"), py::arg("k"));

  // inflation
  m.def("inflate",
        [](const Permutation& skeleton, const std::vector<Permutation>& comps) {
          return inflate(skeleton, comps);
        },
        py::arg("skeleton"), py::arg("components"));
  m.def("quadblock_decompose", &quadblock_decompose, py::arg("p"));
  m.def("is_separable", &is_separable, py::arg("p"));

  // kingdom
  m.def("list_kings", &list_kings, py::arg("n"));
  m.def("count_kings", &count_kings, py::arg("n"), py::arg("jobs") = 1);
  m.def("princes", [](const Permutation& p) { return as_list(princes(p)); }, py::arg("p"));
  m.def("has_prince", &has_prince, py::arg("p"));
  m.def("kings_without_princes",
        [](int n) { return as_list(kings_without_princes(n)); }, py::arg("n"));
  m.def("kings_without_princes_filtered",
        [](int n) { return as_list(kings_without_princes_filtered(n)); }, py::arg("n"));

  // poset
  m.def("downset", &downset, py::arg("root"), py::arg("size_cap") = kDefaultDownsetCap);
  m.def("interval",
        [](const Permutation& tau, const Permutation& sigma, bool half_open) {
          return as_list(interval(tau, sigma, half_open));
        },
        py::arg("tau"), py::arg("sigma"), py::arg("half_open") = false);
  m.def("covers_below", [](const Permutation& p) { return as_list(covers_below(p)); },
        py::arg("p"));
  m.def("deletion_pairs",
        [](const Permutation& sigma, const Permutation& pi) {
          return as_list(deletion_pairs(sigma, pi));
        },
        py::arg("sigma"), py::arg("pi"));
  m.def("intermediate_king", &intermediate_king, py::arg("sigma"), py::arg("pi"));
  m.def("find_chain",
        [](const Permutation& pi, const Permutation& sigma) {
          return find_chain(pi, sigma).elements;
        },
        py::arg("pi"), py::arg("sigma"));
  m.def("hasse_dot", &hasse_dot, py::arg("downset"), py::arg("with_mobius") = false);

  // Möbius
  m.def("mobius", &mobius, py::arg("tau"), py::arg("sigma"),
        py::arg("size_cap") = kDefaultDownsetCap);
  m.def("mobius_bottom", &mobius_bottom, py::arg("sigma"),
        py::arg("size_cap") = kDefaultDownsetCap);
  m.def("is_in_H", &is_in_H, py::arg("p"));
  m.def("mobius_downset_labels",
        [](const KingDownset& d) {
          std::map<std::string, long long> out;
          for (const auto& [p, mu] : mobius_downset_labels(d)) out[p.bracket_string()] = mu;
          return out;
        },
        py::arg("downset"));

  // verification harness
  m.def("verification_ids", [] { return verification_ids(); });
  m.def("verify",
        [](const std::string& id, int max_n, int jobs, std::uint64_t seed, bool full_filter) {
          VerifyOptions opts;
          opts.max_n = max_n;
          opts.jobs = jobs;
          opts.seed = seed;
          opts.full_filter = full_filter;
          const VerificationReport rep = run_verification(id, opts);
          py::dict out;
          out["theorem_id"] = rep.theorem_id;
          out["range"] = rep.range;
          out["checked"] = rep.checked;
          out["failures"] = rep.failures;
          out["elapsed_seconds"] = rep.elapsed_seconds;
          out["ok"] = rep.ok();
          return out;
        },
        py::arg("id"), py::arg("max_n") = -1, py::arg("jobs") = 1, py::arg("seed") = 1709,
        py::arg("full_filter") = false);
}
