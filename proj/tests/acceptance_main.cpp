// Acceptance suite: runs each acceptance criterion end to end against the
// shipped corpus configs and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <random>

#include "gralab/config.hpp"
#include "gralab/theorems.hpp"

using namespace gralab;

namespace {

const char* kSourceDir = GRALAB_SOURCE_DIR;
int failures = 0;

struct Criterion {
  const char* id;
  bool ok = true;
  std::string detail;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void finish(double budget_seconds) {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("runtime ") +
                std::to_string(secs) + "s exceeds budget";
    }
    std::printf("%s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, secs,
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
  }
};

StructureConfig corpus_config(const std::string& file) {
  return load_structure_config(std::string(kSourceDir) + "/configs/corpus/" + file);
}

void criterion_1() {
  Criterion c{"criterion-1 graded matrix example reproduction"};
  auto ctx = corpus_config("matrix2-z8-g4.json").build();
  StructureConfig cfg = corpus_config("matrix2-z8-g4.json");
  Substructure zero = cfg.named_submodule(*ctx, "zero");
  int k = ctx->submodule_index(zero.set);
  c.require(k == 0, "zero submodule should be lattice index 0");
  Verdict cwp = classify_submodule(*ctx, k, Pred::GradedClassicalWeaklyPrime);
  c.require(cwp.holds, "K=0 must be graded classical weakly prime");
  Verdict cp = classify_submodule(*ctx, k, Pred::GradedClassicalPrime);
  c.require(!cp.holds, "K=0 must not be graded classical prime");
  auto tz = find_classical_triple_zero(*ctx, k);
  c.require(tz.has_value(), "a graded classical triple zero must exist");
  // The published witness (x = 2I, y = 2I, L = A*2I) replays cleanly.
  Json w{{"x", Json::array({2, 0, 0, 2})},
         {"y", Json::array({2, 0, 0, 2})},
         {"L", Json{{"generators", Json::array({Json::array({2, 0, 0, 2})})}}}};
  c.require(validate_triple_zero(*ctx, zero, w), "published triple zero must validate");
  c.finish(120.0);
}

void criterion_2() {
  Criterion c{"criterion-2 surrogate example reproduction"};
  {
    auto ctx = corpus_config("matrix2-z8-g4.json").build();
    StructureConfig cfg = corpus_config("matrix2-z8-g4.json");
    Substructure even = cfg.named_submodule(*ctx, "even");
    int k = ctx->submodule_index(even.set);
    c.require(k >= 0, "M2(2Z8) must be a graded submodule");
    Verdict v =
        classify_submodule(*ctx, k, Pred::GradedCompletelyClassicalWeaklyPrime);
    c.require(!v.holds, "M2(2Z8) must fail graded completely classical weakly prime");
    Json w{{"x", Json::array({1, 0, 0, 2})},
           {"y", Json::array({0, 1, 1, 0})},
           {"z", Json::array({1, 0, 0, 4})}};
    c.require(validate_witness(*ctx, Pred::GradedCompletelyClassicalWeaklyPrime, even,
                               std::nullopt, w),
              "explicit (x,y,z) witness must validate by direct arithmetic");
  }
  {
    auto ctx = corpus_config("matrix2-z2-g4.json").build();
    StructureConfig cfg = corpus_config("matrix2-z2-g4.json");
    Substructure zero = cfg.named_submodule(*ctx, "zero");
    int k = ctx->submodule_index(zero.set);
    uint32_t g = ctx->A().grading_group().encode(std::vector<uint32_t>{2});
    Verdict v = classify_component(*ctx, k, g, Pred::GPrime);
    c.require(!v.holds, "K=0 must fail 2-prime in graded M2(Z2)");
    c.require(!v.witness.is_null(), "2-prime failure needs an (I, L) witness");
    if (!v.witness.is_null()) {
      bool il_zero = true;
      for (const Json& iw : v.witness.at("I").at("generators"))
        for (const Json& lw : v.witness.at("L").at("generators")) {
          uint32_t a = ctx->A().ring().group().encode(iw.get<Coords>());
          uint32_t l = ctx->M().group().encode(lw.get<Coords>());
          if (ctx->M().act(a, l) != 0) il_zero = false;
        }
      c.require(il_zero, "witness must satisfy IL = 0");
    }
  }
  c.finish(60.0);
}

void criterion_3() {
  Criterion c{"criterion-3 theorem suite over the default corpus"};
  std::vector<StructureConfig> configs =
      load_corpus_dir(std::string(kSourceDir) + "/configs/corpus");
  c.require(configs.size() >= 12, "corpus must contain at least 12 structures");
  std::vector<CorpusEntry> corpus;
  for (const auto& cfg : configs) corpus.push_back({cfg.name, cfg.build()});
  SuiteResult res = run_corpus(corpus, {}, {});
  c.require(res.total_violations() == 0, "suite must report zero violations");
  auto adequacy = res.adequacy();
  for (const auto& id : theorem_ids())
    c.require(adequacy[id] >= 1,
              "theorem " + id + " needs a hypothesis-passing instance");
  c.finish(600.0);
}

void criterion_4() {
  Criterion c{"criterion-4 oracle equivalence"};
  std::vector<StructureConfig> configs =
      load_corpus_dir(std::string(kSourceDir) + "/configs/corpus");

  // Sandwich classification vs the naive double loop over (a in A, l in L).
  auto naive_sandwich = [](const GradedModule& m, uint32_t x, uint32_t y,
                           const Substructure& l, const DenseSet& k) {
    const FiniteRing& r = m.ring().ring();
    bool contained = true, zero = true;
    for (uint32_t a = 0; a < r.size(); ++a) {
      uint32_t p = r.mul(r.mul(x, a), y);
      for (uint32_t ll : l.members) {
        uint32_t v = m.act(p, ll);
        if (v != 0) zero = false;
        if (!k.test(v)) contained = false;
        if (!zero && !contained) return SandwichOutcome::NotContained;
      }
    }
    if (zero) return SandwichOutcome::ProductZero;
    return contained ? SandwichOutcome::Holds : SandwichOutcome::NotContained;
  };

  std::mt19937_64 rng(12345);
  uint64_t instances = 0, agreements = 0;
  for (const auto& cfg : configs) {
    auto ctx = cfg.build();
    const GradedModule& m = ctx->M();
    uint32_t per = m.size() <= 256 ? 76 : 16;
    const Lattice& lat = ctx->graded_submodules();
    const auto& h = ctx->A().homogeneous_elements();
    std::vector<uint32_t> middle;
    for (uint32_t i = 0; i < ctx->A().ring().rank(); ++i)
      middle.push_back(ctx->A().ring().group().basis_element(i));
    for (uint32_t t = 0; t < per; ++t) {
      uint32_t x = h[rng() % h.size()];
      uint32_t y = h[rng() % h.size()];
      const Substructure& l = lat.items[rng() % lat.items.size()];
      const Substructure& k = lat.items[rng() % lat.items.size()];
      ++instances;
      if (sandwich_test(m, x, y, middle, l, k.set) == naive_sandwich(m, x, y, l, k.set))
        ++agreements;
    }
  }
  c.require(instances >= 1000, "need at least 1000 sampled instances");
  c.require(agreements == instances, "sandwich oracle disagreement");

  // Graded-submodule enumeration vs the filter-all-subgroups oracle.
  for (const auto& cfg : configs) {
    auto ctx = cfg.build();
    const GradedModule& m = ctx->M();
    if (m.size() > 256) continue;
    Lattice all = enumerate_subgroups(m.group());
    std::vector<DenseSet> expect;
    for (const Substructure& s : all.items) {
      bool closed = true;
      for (uint32_t i = 0; i < m.ring().ring().rank() && closed; ++i) {
        uint32_t b = m.ring().ring().group().basis_element(i);
        for (uint32_t x : s.members)
          if (!s.set.test(m.act(b, x))) {
            closed = false;
            break;
          }
      }
      if (closed && is_graded(m, s)) expect.push_back(s.set);
    }
    std::sort(expect.begin(), expect.end(), [](const DenseSet& a, const DenseSet& b) {
      return DenseSet::compare(a, b) < 0;
    });
    const Lattice& lat = ctx->graded_submodules();
    bool same = lat.items.size() == expect.size();
    for (size_t i = 0; same && i < expect.size(); ++i)
      same = lat.items[i].set == expect[i];
    c.require(same, "lattice/oracle mismatch on " + cfg.name);
  }
  c.finish(600.0);
}

void criterion_5() {
  Criterion c{"criterion-5 classifier spot values"};
  {
    auto ctx = corpus_config("zmod-08.json").build();
    const Lattice& lat = ctx->graded_submodules();
    Substructure rad = graded_radical(*ctx, lat.items[0]);
    c.require(rad.members == std::vector<uint32_t>{0, 2, 4, 6},
              "Grad_{Z8}(0) must be {0,2,4,6}");
    c.require(classify_ideal(*ctx, lat.items[2], Pred::GradedWeaklyPrimeIdeal).holds,
              "2Z8 must be weakly prime");
    c.require(!classify_ideal(*ctx, lat.items[1], Pred::GradedWeaklyPrimeIdeal).holds,
              "4Z8 must not be weakly prime");
  }
  {
    auto z4 = corpus_config("zmod-04.json").build();
    c.require(is_u_module(*z4).holds, "Z4 over Z4 must be a u-module");
    auto ring = std::make_shared<GradedRing>(GradedRing::trivial(FiniteRing::zmod(2)));
    std::vector<Coords> action{{1, 0}, {0, 1}};
    auto mod = std::make_shared<GradedModule>(ring, Coords{2, 2}, action,
                                              std::vector<uint32_t>{0, 0});
    StructCtx klein("z2xz2-over-z2", ring, mod);
    c.require(!is_u_module(klein).holds, "Z2 x Z2 over Z2 must not be a u-module");
  }
  {
    auto m2 = corpus_config("matrix2-z2-g4.json").build();
    c.require(!is_left_duo(*m2).holds, "M2(Z2) must not be left Duo");
  }
  c.finish(600.0);
}

void criterion_6() {
  Criterion c{"criterion-6 determinism"};
  auto one_run = [&](uint32_t workers) {
    std::vector<StructureConfig> configs =
        load_corpus_dir(std::string(kSourceDir) + "/configs/corpus");
    std::vector<CorpusEntry> corpus;
    for (const auto& cfg : configs) corpus.push_back({cfg.name, cfg.build()});
    SuiteResult res = run_corpus(corpus, {"thm-quotient-down", "thm-duo-chain"}, {},
                                 workers);
    Json arr = Json::array();
    for (const auto& r : res.reports) arr.push_back(r.to_json());
    return arr.dump();
  };
  std::string a = one_run(1);
  std::string b = one_run(4);
  std::string d = one_run(1);
  c.require(a == b, "worker count must not change the report");
  c.require(a == d, "repeated runs must be byte-identical");

  auto classify_run = [&] {
    auto ctx = corpus_config("matrix2-z8-g4.json").build();
    return classify_submodule(*ctx, 0, Pred::GradedClassicalPrime).to_json().dump();
  };
  c.require(classify_run() == classify_run(), "classification must be deterministic");
  c.finish(600.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
