#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "igenum/bdd.hpp"
#include "igenum/bitstring.hpp"
#include "igenum/enumeration.hpp"
#include "igenum/errors.hpp"
#include "igenum/oracle.hpp"

namespace py = pybind11;
using namespace igenum;

namespace {

py::int_ to_python(const BigInt& value) {
  const std::string text = value.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

GraphClass class_from(const std::string& name) {
  const auto cls = parse_class(name);
  if (!cls) throw std::invalid_argument("unknown class '" + name + "'");
  return *cls;
}

EnumerationSpec make_spec(const std::string& cls, int n, std::optional<int> k, std::optional<int> m) {
  EnumerationSpec spec;
  spec.cls = class_from(cls);
  spec.n = n;
  spec.k = k;
  spec.m = m;
  validate(spec);
  return spec;
}

py::tuple graph_tuple(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(u + 1, v + 1);
  return py::make_tuple(g.vertex_count(), edges);
}

// A built diagram together with the machine that produced it.
class Enumerator {
 public:
  Enumerator(const std::string& cls, int n, std::optional<int> k, std::optional<int> m)
      : machine_(make_spec(cls, n, k, m)), diagram_(machine_.build()), sampler_(diagram_) {}

  py::int_ count() const { return to_python(sampler_.total()); }

  std::vector<std::string> sample(std::uint64_t seed, int num) const {
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    for (int i = 0; i < num; ++i) out.push_back(machine_.to_natural(sampler_.draw(rng)).str());
    return out;
  }

  std::vector<std::string> strings(std::optional<std::size_t> limit) const {
    std::vector<std::string> out;
    for_each_accepted(diagram_, [&](const BinaryString& labels) {
      if (limit && out.size() >= *limit) return false;
      out.push_back(machine_.to_natural(labels).str());
      return true;
    });
    return out;
  }

  py::tuple decode(const std::string& natural) const {
    return graph_tuple(machine_.decode(BinaryString(natural)));
  }

  bool accepts(const std::string& natural) const { return machine_.accepts(BinaryString(natural)); }

  py::dict stats() const {
    const auto s = igenum::stats(diagram_);
    py::dict out;
    out["nodes_per_level"] = s.nodes_per_level;
    out["total_nodes"] = s.total_nodes;
    out["build_seconds"] = std::chrono::duration<double>(s.build_time).count();
    return out;
  }

  std::string dot() const { return export_dot(diagram_); }

 private:
  ClassMachine machine_;
  LevelledBdd diagram_;
  Sampler sampler_;
};

}  // namespace

PYBIND11_MODULE(_igenum, mod) {
  mod.doc() = "Unlabeled graph enumeration through levelled BDDs";

  py::register_exception<EmptyLanguageError>(mod, "EmptyLanguageError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(mod, "ResourceLimitError", PyExc_RuntimeError);

  mod.attr("CLASSES") = [] {
    std::vector<std::string> names;
    for (auto cls : kAllClasses) names.emplace_back(class_name(cls));
    return names;
  }();

  py::class_<Enumerator>(mod, "Enumerator")
      .def(py::init<const std::string&, int, std::optional<int>, std::optional<int>>(),
           py::arg("cls"), py::arg("n"), py::arg("k") = py::none(), py::arg("m") = py::none())
      .def("count", &Enumerator::count)
      .def("sample", &Enumerator::sample, py::arg("seed"), py::arg("num") = 1,
           "Uniform samples as natural-order strings.")
      .def("strings", &Enumerator::strings, py::arg("limit") = py::none(),
           "Accepted strings in natural order.")
      .def("decode", &Enumerator::decode, "(n, [(u, v), ...]) with 1-based vertices.")
      .def("accepts", &Enumerator::accepts)
      .def("stats", &Enumerator::stats)
      .def("dot", &Enumerator::dot);

  mod.def(
      "count",
      [](const std::string& cls, int n, std::optional<int> k, std::optional<int> m) {
        return to_python(igenum::count(ClassMachine(make_spec(cls, n, k, m)).build()));
      },
      py::arg("cls"), py::arg("n"), py::arg("k") = py::none(), py::arg("m") = py::none());

  mod.def(
      "decode",
      [](const std::string& cls, const std::string& natural) {
        return graph_tuple(igenum::decode(class_from(cls), BinaryString(natural)));
      },
      py::arg("cls"), py::arg("string"));

  mod.def(
      "cross_check",
      [](const std::string& cls, int n, std::optional<int> k, std::optional<int> m) {
        const auto r = igenum::cross_check(make_spec(cls, n, k, m));
        py::dict out;
        out["ok"] = r.ok();
        out["oracle_count"] = to_python(r.oracle_count);
        out["bdd_count"] = to_python(r.bdd_count);
        out["mismatches"] = r.mismatches.size();
        out["duplicates"] = r.duplicates.size();
        out["string_checked"] = r.string_checked;
        out["string_equal"] = r.string_equal;
        return out;
      },
      py::arg("cls"), py::arg("n"), py::arg("k") = py::none(), py::arg("m") = py::none());

  mod.def("height_profile", [](const std::string& s) { return height_profile(BinaryString(s)); });
  mod.def("reverse_complement", [](const std::string& s) { return reverse_complement(BinaryString(s)).str(); });
  mod.def("alternate", [](const std::string& s) { return alternate(BinaryString(s)).str(); });
  mod.def("inverse_alternate", [](const std::string& s) { return inverse_alternate(BinaryString(s)).str(); });
}
