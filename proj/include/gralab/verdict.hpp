#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gralab/substructure.hpp"

namespace gralab {

using Json = nlohmann::json;  // object keys are sorted, so dumps are canonical

enum class Pred {
  // left ideals of a graded ring
  GradedPrimeIdeal,
  GradedWeaklyPrimeIdeal,
  GradedWeaklyPrimeElementwise,
  // left ideal of the identity component ring, quantifying two-sided ideals
  WeaklyPrimeLeftIdeal,
  // graded submodules
  GradedPrime,
  GradedWeaklyPrime,
  GradedClassicalPrime,
  GradedClassicalWeaklyPrime,
  GradedCompletelyClassicalWeaklyPrime,
  GradedWeakly2Absorbing,
  GradedCompletelyWeakly2Absorbing,
  // component predicates (take a group element g)
  GPrime,
  GClassicalWeaklyPrime,
};

const char* pred_name(Pred p);
std::optional<Pred> pred_from_name(const std::string& name);
bool pred_is_ideal_pred(Pred p);
bool pred_is_component_pred(Pred p);

// Classification result. A negative verdict always carries a witness that
// has been re-checked by the naive definitional evaluator, unless the failure
// is a hypothesis failure (e.g. the submodule is not proper).
struct Verdict {
  std::string predicate;
  bool holds = false;
  Json witness;             // null when none
  Json hypothesis_failure;  // null or string
  Json notes;               // null or object (e.g. cover bound)

  Json to_json() const {
    return Json{{"predicate", predicate},
                {"holds", holds},
                {"witness", witness},
                {"hypothesis_failure", hypothesis_failure},
                {"notes", notes}};
  }
};

struct TripleZero {
  uint32_t x = 0;
  uint32_t y = 0;
  int l_idx = -1;
};

Json elem_json(const AddGroup& g, uint32_t x);
Json gens_json(const AddGroup& g, const std::vector<uint32_t>& gens);
Json sub_json(const AddGroup& g, const Substructure& s);

}  // namespace gralab
