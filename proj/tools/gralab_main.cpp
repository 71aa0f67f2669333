// Command-line front end: build structures from JSON configs, classify
// submodules and ideals, enumerate lattices, hunt triple zeros, run the
// theorem suite over a corpus, and search for separating examples.
//
// Exit codes: 0 computed / all passed, 1 theorem violation, 2 invalid input,
// 3 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gralab/classify.hpp"
#include "gralab/config.hpp"
#include "gralab/theorems.hpp"

using namespace gralab;

namespace {

uint32_t worker_count() {
  const char* env = std::getenv("GRALAB_WORKERS");
  if (!env) return 1;
  long n = std::strtol(env, nullptr, 10);
  return n >= 1 ? uint32_t(n) : 1;
}

void emit(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << text;
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

int find_graded_index(StructCtx& ctx, const Substructure& sub, const std::string& name) {
  if (!is_graded(ctx.M(), sub))
    throw ValidationError("submodule '" + name + "' is not graded");
  int idx = ctx.submodule_index(sub.set);
  if (idx < 0) throw std::logic_error("graded submodule missing from lattice");
  return idx;
}

struct Timing {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"finite graded-algebra laboratory"};
  app.require_subcommand(1);

  std::string config_path, submodule_name, predicate_name, component_str;
  std::string out_path, witness_path, kind, corpus_dir, suite_str, family_path;
  std::string holds_name, fails_name;
  bool timing = false;
  uint32_t u_cover_bound = 3;

  auto* classify = app.add_subcommand("classify", "decide a predicate for a named submodule");
  classify->add_option("config", config_path)->required();
  classify->add_option("--submodule", submodule_name)->required();
  classify->add_option("--predicate", predicate_name)->required();
  classify->add_option("--component", component_str,
                       "group element (comma-separated coordinates) for component predicates");
  classify->add_option("--check-witness", witness_path,
                       "replay: validate the witness in this file instead of classifying");
  classify->add_flag("--timing", timing);
  classify->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "list a substructure lattice");
  enumerate->add_option("config", config_path)->required();
  enumerate
      ->add_option("--kind", kind,
                   "graded-submodules|submodules|graded-left-ideals|"
                   "graded-two-sided-ideals|identity-component-ideals|component-submodules")
      ->required();
  enumerate->add_option("--component", component_str);
  enumerate->add_flag("--timing", timing);
  enumerate->add_option("--out", out_path);

  auto* tz = app.add_subcommand("triple-zero", "find a graded classical triple zero");
  tz->add_option("config", config_path)->required();
  tz->add_option("--submodule", submodule_name)->required();
  tz->add_option("--check-witness", witness_path);
  tz->add_flag("--timing", timing);
  tz->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run theorem suites over a corpus");
  verify->add_option("--suite", suite_str, "'all' or comma-separated theorem ids")
      ->default_val("all");
  verify->add_option("--corpus", corpus_dir)->required();
  verify->add_option("--u-cover-bound", u_cover_bound);
  verify->add_flag("--timing", timing);
  verify->add_option("--out", out_path);

  auto* search = app.add_subcommand("search", "find a separating example between predicates");
  search->add_option("--holds", holds_name)->required();
  search->add_option("--fails", fails_name)->required();
  search->add_option("--family", family_path)->required();
  search->add_flag("--timing", timing);
  search->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);
  Timing clock;

  auto parse_component = [&](const StructCtx& ctx) -> uint32_t {
    std::vector<uint32_t> coords;
    std::stringstream ss(component_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) coords.push_back(uint32_t(std::stoul(tok)));
    if (coords.empty()) throw ValidationError("--component needs coordinates");
    return ctx.A().grading_group().encode(coords);
  };

  if (*classify) {
    StructureConfig cfg = load_structure_config(config_path);
    auto ctx = cfg.build();
    auto pred = pred_from_name(predicate_name);
    if (!pred) throw ValidationError("unknown predicate: " + predicate_name);
    Substructure sub = cfg.named_submodule(*ctx, submodule_name);

    Json result;
    std::optional<uint32_t> g;
    if (pred_is_component_pred(*pred)) {
      if (component_str.empty())
        throw ValidationError("component predicates need --component");
      g = parse_component(*ctx);
    }
    if (!witness_path.empty()) {
      Json w = load_json_file(witness_path);
      bool ok = validate_witness(*ctx, *pred, sub, g, w);
      result = Json{{"witness_valid", ok}, {"witness", w}};
    } else if (pred_is_ideal_pred(*pred)) {
      if (ctx->M().size() != ctx->A().ring().size())
        throw ValidationError("ideal predicates need the regular module");
      Substructure ideal = close_left_ideal(ctx->A().ring(), sub.seeds);
      result = classify_ideal(*ctx, ideal, *pred).to_json();
    } else if (pred_is_component_pred(*pred)) {
      int idx = find_graded_index(*ctx, sub, submodule_name);
      result = classify_component(*ctx, idx, *g, *pred).to_json();
    } else {
      int idx = find_graded_index(*ctx, sub, submodule_name);
      result = classify_submodule(*ctx, idx, *pred).to_json();
    }
    Json report{{"command", "classify"},
                {"config_digest", cfg.digest},
                {"structure", cfg.name},
                {"submodule", submodule_name},
                {"predicate", predicate_name},
                {"component", component_str.empty() ? Json() : Json(component_str)},
                {"result", result}};
    if (timing) report["timing_seconds"] = clock.seconds();
    emit(report, out_path);
    return 0;
  }

  if (*enumerate) {
    StructureConfig cfg = load_structure_config(config_path);
    auto ctx = cfg.build();
    Json items = Json::array();
    auto add_items = [&](const Lattice& lat, const AddGroup& g) {
      for (const Substructure& s : lat.items) items.push_back(sub_json(g, s));
    };
    if (kind == "graded-submodules") {
      add_items(ctx->graded_submodules(), ctx->M().group());
    } else if (kind == "submodules") {
      add_items(ctx->all_submodules(), ctx->M().group());
    } else if (kind == "graded-left-ideals") {
      add_items(ctx->graded_left_ideals(), ctx->A().ring().group());
    } else if (kind == "graded-two-sided-ideals") {
      add_items(ctx->graded_two_sided_ideals(), ctx->A().ring().group());
    } else if (kind == "identity-component-ideals") {
      auto& comp = ctx->component(ctx->A().grading_group().identity());
      const Lattice& lat = comp.ctx->graded_two_sided_ideals();
      for (size_t i = 0; i < lat.items.size(); ++i)
        items.push_back(Json{
            {"generators", gens_json(ctx->A().ring().group(), comp.ideal_embgens[i])},
            {"size", lat.items[i].size()}});
    } else if (kind == "component-submodules") {
      if (component_str.empty())
        throw ValidationError("component-submodules needs --component");
      auto& comp = ctx->component(parse_component(*ctx));
      const Lattice& lat = comp.ctx->graded_submodules();
      for (size_t i = 0; i < lat.items.size(); ++i)
        items.push_back(
            Json{{"generators", gens_json(ctx->M().group(), comp.sub_embgens[i])},
                 {"size", lat.items[i].size()}});
    } else {
      throw ValidationError("unknown enumeration kind: " + kind);
    }
    Json report{{"command", "enumerate"},
                {"config_digest", cfg.digest},
                {"structure", cfg.name},
                {"kind", kind},
                {"count", items.size()},
                {"items", items}};
    if (timing) report["timing_seconds"] = clock.seconds();
    emit(report, out_path);
    return 0;
  }

  if (*tz) {
    StructureConfig cfg = load_structure_config(config_path);
    auto ctx = cfg.build();
    Substructure sub = cfg.named_submodule(*ctx, submodule_name);
    Json result;
    if (!witness_path.empty()) {
      Json w = load_json_file(witness_path);
      bool ok = validate_triple_zero(*ctx, sub, w);
      result = Json{{"witness_valid", ok}, {"witness", w}};
    } else {
      int idx = find_graded_index(*ctx, sub, submodule_name);
      auto found = find_classical_triple_zero(*ctx, idx);
      result = Json{{"found", found.has_value()},
                    {"witness", found ? triple_zero_json(*ctx, *found) : Json()}};
    }
    Json report{{"command", "triple-zero"},
                {"config_digest", cfg.digest},
                {"structure", cfg.name},
                {"submodule", submodule_name},
                {"result", result}};
    if (timing) report["timing_seconds"] = clock.seconds();
    emit(report, out_path);
    return 0;
  }

  if (*verify) {
    std::vector<StructureConfig> configs = load_corpus_dir(corpus_dir);
    std::vector<CorpusEntry> corpus;
    Json corpus_json = Json::array();
    for (const auto& cfg : configs) {
      corpus.push_back(CorpusEntry{cfg.name, cfg.build()});
      corpus_json.push_back(Json{{"name", cfg.name}, {"config_digest", cfg.digest}});
    }
    std::vector<std::string> suite;
    if (suite_str != "all") {
      std::stringstream ss(suite_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) suite.push_back(tok);
    }
    VerifyOptions opt;
    opt.u_cover_bound = u_cover_bound;
    SuiteResult res = run_corpus(corpus, suite, opt, worker_count());
    Json reports = Json::array();
    for (const auto& r : res.reports) reports.push_back(r.to_json());
    Json adequacy = Json::object();
    for (const auto& [id, n] : res.adequacy()) adequacy[id] = n;
    uint64_t violations = res.total_violations();
    Json report{{"command", "verify"},
                {"corpus", corpus_json},
                {"suite", suite_str},
                {"reports", reports},
                {"adequacy", adequacy},
                {"violations_total", violations}};
    if (timing) report["timing_seconds"] = clock.seconds();
    emit(report, out_path);
    return violations == 0 ? 0 : 1;
  }

  if (*search) {
    auto holds = pred_from_name(holds_name);
    auto fails = pred_from_name(fails_name);
    if (!holds || !fails) throw ValidationError("unknown predicate name");
    std::vector<StructureConfig> configs = load_family(family_path);
    std::vector<CorpusEntry> family;
    for (const auto& cfg : configs)
      family.push_back(CorpusEntry{cfg.name, cfg.build()});
    SearchResult res = search_separating_example(family, *holds, *fails);
    Json report{{"command", "search"},
                {"holds", holds_name},
                {"fails", fails_name},
                {"found", res.found},
                {"examined", res.examined},
                {"instance", res.instance}};
    if (timing) report["timing_seconds"] = clock.seconds();
    emit(report, out_path);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
