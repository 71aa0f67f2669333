#include "gralab/config.hpp"

#include <algorithm>
#include <fstream>

namespace gralab {

namespace {

Json require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("config missing field '") + key + "'");
  return j.at(key);
}

std::string require_kind(const Json& j) {
  return require(j, "kind").get<std::string>();
}

Json normalize_ring(const Json& j) {
  std::string kind = require_kind(j);
  if (kind == "zmod") {
    return Json{{"kind", "zmod"}, {"n", require(j, "n").get<uint32_t>()}};
  }
  if (kind == "matrix") {
    return Json{{"kind", "matrix"},
                {"base", normalize_ring(require(j, "base"))},
                {"size", require(j, "size").get<uint32_t>()}};
  }
  if (kind == "product") {
    Json factors = Json::array();
    for (const Json& f : require(j, "factors")) factors.push_back(normalize_ring(f));
    if (factors.empty()) throw ValidationError("product ring needs factors");
    return Json{{"kind", "product"}, {"factors", factors}};
  }
  throw ValidationError("unknown ring kind: " + kind);
}

FiniteRing build_ring(const Json& j, uint64_t cap) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "zmod") return FiniteRing::zmod(j.at("n").get<uint32_t>());
  if (kind == "matrix")
    return FiniteRing::matrix_ring(build_ring(j.at("base"), cap),
                                   j.at("size").get<uint32_t>(), cap);
  std::vector<FiniteRing> factors;
  for (const Json& f : j.at("factors")) factors.push_back(build_ring(f, cap));
  return FiniteRing::product(factors, cap);
}

Json normalize_group(const Json& j) {
  if (j.is_null()) return Json{{"kind", "cyclic"}, {"orders", Json::array({1})}};
  std::string kind = require_kind(j);
  if (kind == "cyclic") {
    Json orders = Json::array();
    for (const Json& o : require(j, "orders")) orders.push_back(o.get<uint32_t>());
    return Json{{"kind", "cyclic"}, {"orders", orders}};
  }
  if (kind == "table") {
    return Json{{"kind", "table"}, {"table", require(j, "table")}};
  }
  throw ValidationError("unknown group kind: " + kind);
}

FiniteGroup build_group(const Json& j) {
  if (j.at("kind") == "cyclic")
    return FiniteGroup::product_of_cyclic(j.at("orders").get<std::vector<uint32_t>>());
  return FiniteGroup::from_table(
      j.at("table").get<std::vector<std::vector<uint32_t>>>());
}

Json normalize_grading(const Json& j) {
  if (j.is_null()) return Json{{"kind", "trivial"}};
  std::string kind = require_kind(j);
  if (kind == "trivial") return Json{{"kind", "trivial"}};
  if (kind == "good") {
    Json sigma = Json::array();
    for (const Json& s : require(j, "sigma")) sigma.push_back(s);
    return Json{{"kind", "good"}, {"sigma", sigma}};
  }
  if (kind == "explicit") {
    return Json{{"kind", "explicit"}, {"degrees", require(j, "degrees")}};
  }
  throw ValidationError("unknown grading kind: " + kind);
}

Json normalize_module(const Json& j) {
  if (j.is_null()) return Json{{"kind", "regular"}};
  std::string kind = require_kind(j);
  if (kind == "regular") return Json{{"kind", "regular"}};
  if (kind == "explicit") {
    return Json{{"kind", "explicit"},
                {"orders", require(j, "orders")},
                {"action", require(j, "action")},
                {"degrees", require(j, "degrees")}};
  }
  throw ValidationError("unknown module kind: " + kind);
}

uint32_t group_elem(const FiniteGroup& grp, const Json& j) {
  if (j.is_number()) return grp.encode(std::vector<uint32_t>{j.get<uint32_t>()});
  return grp.encode(j.get<std::vector<uint32_t>>());
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

StructureConfig parse_structure_config(const Json& j) {
  StructureConfig cfg;
  cfg.name = j.contains("name") ? j.at("name").get<std::string>() : "unnamed";
  Json subs = Json::object();
  if (j.contains("submodules")) {
    for (auto& [name, gens] : j.at("submodules").items()) {
      Json glist = Json::array();
      for (const Json& g : gens) glist.push_back(g.get<std::vector<uint32_t>>());
      subs[name] = glist;
    }
  }
  Json caps = Json::object();
  caps["ambient"] =
      j.contains("caps") && j.at("caps").contains("ambient")
          ? j.at("caps").at("ambient").get<uint64_t>()
          : AddGroup::kDefaultAmbientCap;
  caps["lattice"] = j.contains("caps") && j.at("caps").contains("lattice")
                        ? j.at("caps").at("lattice").get<uint64_t>()
                        : uint64_t(20000);
  cfg.canonical = Json{{"name", cfg.name},
                       {"ring", normalize_ring(require(j, "ring"))},
                       {"group", normalize_group(j.contains("group") ? j.at("group") : Json())},
                       {"grading", normalize_grading(j.contains("grading") ? j.at("grading") : Json())},
                       {"module", normalize_module(j.contains("module") ? j.at("module") : Json())},
                       {"submodules", subs},
                       {"caps", caps}};
  cfg.digest = fnv1a_hex(cfg.canonical.dump());
  return cfg;
}

std::shared_ptr<StructCtx> StructureConfig::build() const {
  Caps caps;
  caps.ambient = canonical.at("caps").at("ambient").get<uint64_t>();
  caps.lattice = canonical.at("caps").at("lattice").get<uint64_t>();

  FiniteRing ring = build_ring(canonical.at("ring"), caps.ambient);
  FiniteGroup grp = build_group(canonical.at("group"));

  const Json& grading = canonical.at("grading");
  std::shared_ptr<GradedRing> graded;
  std::string gkind = grading.at("kind").get<std::string>();
  if (gkind == "trivial") {
    std::vector<uint32_t> deg(ring.rank(), grp.identity());
    graded = std::make_shared<GradedRing>(std::move(ring), std::move(grp), std::move(deg));
  } else if (gkind == "good") {
    if (canonical.at("ring").at("kind") != "matrix")
      throw ValidationError("good gradings require a matrix ring");
    uint32_t size = canonical.at("ring").at("size").get<uint32_t>();
    std::vector<uint32_t> sigma;
    for (const Json& s : grading.at("sigma")) sigma.push_back(group_elem(grp, s));
    graded = std::make_shared<GradedRing>(GradedRing::good_matrix_grading(
        std::move(ring), size, std::move(grp), sigma));
  } else {
    std::vector<uint32_t> deg;
    for (const Json& d : grading.at("degrees")) deg.push_back(group_elem(grp, d));
    graded = std::make_shared<GradedRing>(std::move(ring), std::move(grp), std::move(deg));
  }

  const Json& module = canonical.at("module");
  std::shared_ptr<GradedModule> mod;
  if (module.at("kind") == "regular") {
    mod = GradedModule::regular(graded);
  } else {
    Coords orders = module.at("orders").get<Coords>();
    std::vector<Coords> action;
    for (const Json& row : module.at("action"))
      for (const Json& cell : row) action.push_back(cell.get<Coords>());
    std::vector<uint32_t> deg;
    for (const Json& d : module.at("degrees"))
      deg.push_back(group_elem(graded->grading_group(), d));
    mod = std::make_shared<GradedModule>(graded, std::move(orders), std::move(action),
                                         std::move(deg), caps.ambient);
  }
  return std::make_shared<StructCtx>(name, graded, mod, caps);
}

std::vector<std::string> StructureConfig::submodule_names() const {
  std::vector<std::string> out;
  for (auto& [name, gens] : canonical.at("submodules").items()) out.push_back(name);
  return out;
}

Substructure StructureConfig::named_submodule(const StructCtx& ctx,
                                              const std::string& name) const {
  const Json& subs = canonical.at("submodules");
  if (!subs.contains(name))
    throw ValidationError("config names no submodule '" + name + "'");
  std::vector<uint32_t> gens;
  for (const Json& g : subs.at(name))
    gens.push_back(ctx.M().group().encode(g.get<Coords>()));
  // StructCtx is logically const here; closure only reads the module.
  return close_submodule(ctx.M(), gens);
}

StructureConfig load_structure_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config: " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ValidationError("config parse error in " + path.string() + ": " + e.what());
  }
  return parse_structure_config(j);
}

std::vector<StructureConfig> load_corpus_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir))
    throw ValidationError("corpus directory not found: " + dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<StructureConfig> out;
  for (const auto& f : files) out.push_back(load_structure_config(f));
  return out;
}

std::vector<StructureConfig> load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open family: " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ValidationError("family parse error in " + path.string() + ": " + e.what());
  }
  std::vector<StructureConfig> out;
  if (j.contains("structures")) {
    for (const Json& rel : j.at("structures"))
      out.push_back(load_structure_config(path.parent_path() / rel.get<std::string>()));
  }
  if (j.contains("configs")) {
    for (const Json& cfg : j.at("configs")) out.push_back(parse_structure_config(cfg));
  }
  if (out.empty()) throw ValidationError("family lists no structures");
  return out;
}

}  // namespace gralab
