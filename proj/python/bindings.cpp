#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gralab/classify.hpp"
#include "gralab/config.hpp"
#include "gralab/theorems.hpp"

namespace py = pybind11;
using namespace gralab;

namespace {

py::object json_to_py(const Json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

Json py_to_json(const py::object& obj) {
  py::module_ pyjson = py::module_::import("json");
  std::string s = pyjson.attr("dumps")(obj).cast<std::string>();
  return Json::parse(s);
}

// A built structure plus its config, exposing the main operations.
class Structure {
 public:
  explicit Structure(const py::object& config) {
    if (py::isinstance<py::str>(config)) {
      cfg_ = load_structure_config(config.cast<std::string>());
    } else {
      cfg_ = parse_structure_config(py_to_json(config));
    }
    ctx_ = cfg_.build();
  }

  std::string name() const { return cfg_.name; }
  std::string digest() const { return cfg_.digest; }
  size_t ring_size() const { return ctx_->A().ring().size(); }
  size_t module_size() const { return ctx_->M().size(); }
  size_t homogeneous_count() const { return ctx_->A().homogeneous_elements().size(); }

  py::object classify(const std::string& submodule, const std::string& predicate,
                      const py::object& component) {
    auto pred = pred_from_name(predicate);
    if (!pred) throw ValidationError("unknown predicate: " + predicate);
    Substructure sub = cfg_.named_submodule(*ctx_, submodule);
    if (pred_is_ideal_pred(*pred)) {
      if (ctx_->M().size() != ctx_->A().ring().size())
        throw ValidationError("ideal predicates need the regular module");
      Substructure ideal = close_left_ideal(ctx_->A().ring(), sub.seeds);
      return json_to_py(classify_ideal(*ctx_, ideal, *pred).to_json());
    }
    if (!is_graded(ctx_->M(), sub))
      throw ValidationError("submodule '" + submodule + "' is not graded");
    int idx = ctx_->submodule_index(sub.set);
    if (pred_is_component_pred(*pred)) {
      if (component.is_none())
        throw ValidationError("component predicates need component=");
      uint32_t g = ctx_->A().grading_group().encode(
          component.cast<std::vector<uint32_t>>());
      return json_to_py(classify_component(*ctx_, idx, g, *pred).to_json());
    }
    return json_to_py(classify_submodule(*ctx_, idx, *pred).to_json());
  }

  py::object triple_zero(const std::string& submodule) {
    Substructure sub = cfg_.named_submodule(*ctx_, submodule);
    if (!is_graded(ctx_->M(), sub))
      throw ValidationError("submodule '" + submodule + "' is not graded");
    int idx = ctx_->submodule_index(sub.set);
    auto found = find_classical_triple_zero(*ctx_, idx);
    if (!found) return py::none();
    return json_to_py(triple_zero_json(*ctx_, *found));
  }

  py::object enumerate(const std::string& kind) {
    Json items = Json::array();
    if (kind == "graded-submodules") {
      for (const Substructure& s : ctx_->graded_submodules().items)
        items.push_back(sub_json(ctx_->M().group(), s));
    } else if (kind == "graded-left-ideals") {
      for (const Substructure& s : ctx_->graded_left_ideals().items)
        items.push_back(sub_json(ctx_->A().ring().group(), s));
    } else if (kind == "graded-two-sided-ideals") {
      for (const Substructure& s : ctx_->graded_two_sided_ideals().items)
        items.push_back(sub_json(ctx_->A().ring().group(), s));
    } else if (kind == "submodules") {
      for (const Substructure& s : ctx_->all_submodules().items)
        items.push_back(sub_json(ctx_->M().group(), s));
    } else {
      throw ValidationError("unknown enumeration kind: " + kind);
    }
    return json_to_py(items);
  }

  py::object verify(const std::string& theorem_id) {
    return json_to_py(verify_theorem(*ctx_, theorem_id).to_json());
  }

  py::object check_witness(const std::string& submodule, const std::string& predicate,
                           const py::object& witness, const py::object& component) {
    auto pred = pred_from_name(predicate);
    if (!pred) throw ValidationError("unknown predicate: " + predicate);
    Substructure sub = cfg_.named_submodule(*ctx_, submodule);
    std::optional<uint32_t> g;
    if (!component.is_none())
      g = ctx_->A().grading_group().encode(component.cast<std::vector<uint32_t>>());
    return py::bool_(validate_witness(*ctx_, *pred, sub, g, py_to_json(witness)));
  }

 private:
  StructureConfig cfg_;
  std::shared_ptr<StructCtx> ctx_;
};

py::object verify_corpus(const std::string& corpus_dir, const py::object& suite,
                         uint32_t workers) {
  std::vector<StructureConfig> configs = load_corpus_dir(corpus_dir);
  std::vector<CorpusEntry> corpus;
  for (const auto& cfg : configs) corpus.push_back(CorpusEntry{cfg.name, cfg.build()});
  std::vector<std::string> ids;
  if (!suite.is_none()) ids = suite.cast<std::vector<std::string>>();
  SuiteResult res = run_corpus(corpus, ids, {}, workers);
  Json reports = Json::array();
  for (const auto& r : res.reports) reports.push_back(r.to_json());
  Json adequacy = Json::object();
  for (const auto& [id, n] : res.adequacy()) adequacy[id] = n;
  return json_to_py(Json{{"reports", reports},
                         {"adequacy", adequacy},
                         {"violations_total", res.total_violations()}});
}

py::object search(const std::string& family_path, const std::string& holds,
                  const std::string& fails) {
  auto a = pred_from_name(holds);
  auto b = pred_from_name(fails);
  if (!a || !b) throw ValidationError("unknown predicate name");
  std::vector<StructureConfig> configs = load_family(family_path);
  std::vector<CorpusEntry> family;
  for (const auto& cfg : configs) family.push_back(CorpusEntry{cfg.name, cfg.build()});
  SearchResult res = search_separating_example(family, *a, *b);
  return json_to_py(Json{{"found", res.found},
                         {"examined", res.examined},
                         {"instance", res.instance}});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite graded-algebra laboratory";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::class_<Structure>(m, "Structure")
      .def(py::init<const py::object&>(), py::arg("config"),
           "Build from a config file path or a config dict.")
      .def_property_readonly("name", &Structure::name)
      .def_property_readonly("digest", &Structure::digest)
      .def_property_readonly("ring_size", &Structure::ring_size)
      .def_property_readonly("module_size", &Structure::module_size)
      .def_property_readonly("homogeneous_count", &Structure::homogeneous_count)
      .def("classify", &Structure::classify, py::arg("submodule"), py::arg("predicate"),
           py::arg("component") = py::none())
      .def("triple_zero", &Structure::triple_zero, py::arg("submodule"))
      .def("enumerate", &Structure::enumerate, py::arg("kind"))
      .def("verify", &Structure::verify, py::arg("theorem_id"))
      .def("check_witness", &Structure::check_witness, py::arg("submodule"),
           py::arg("predicate"), py::arg("witness"), py::arg("component") = py::none());

  m.def("verify_corpus", &verify_corpus, py::arg("corpus_dir"),
        py::arg("suite") = py::none(), py::arg("workers") = 1);
  m.def("search_separating_example", &search, py::arg("family_path"), py::arg("holds"),
        py::arg("fails"));
  m.def("theorem_ids", [] { return theorem_ids(); });
  m.def("predicate_names", [] {
    std::vector<std::string> out;
    for (int p = 0; p <= int(Pred::GClassicalWeaklyPrime); ++p)
      out.push_back(pred_name(Pred(p)));
    return out;
  });
}
