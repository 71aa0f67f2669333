#include "gralab/verdict.hpp"

#include <array>
#include <cstring>

namespace gralab {

namespace {

constexpr std::array<std::pair<Pred, const char*>, 13> kPredNames{{
    {Pred::GradedPrimeIdeal, "graded-prime-ideal"},
    {Pred::GradedWeaklyPrimeIdeal, "graded-weakly-prime-ideal"},
    {Pred::GradedWeaklyPrimeElementwise, "graded-weakly-prime-elementwise"},
    {Pred::WeaklyPrimeLeftIdeal, "weakly-prime-left-ideal"},
    {Pred::GradedPrime, "graded-prime"},
    {Pred::GradedWeaklyPrime, "graded-weakly-prime"},
    {Pred::GradedClassicalPrime, "graded-classical-prime"},
    {Pred::GradedClassicalWeaklyPrime, "graded-classical-weakly-prime"},
    {Pred::GradedCompletelyClassicalWeaklyPrime,
     "graded-completely-classical-weakly-prime"},
    {Pred::GradedWeakly2Absorbing, "graded-weakly-2-absorbing"},
    {Pred::GradedCompletelyWeakly2Absorbing, "graded-completely-weakly-2-absorbing"},
    {Pred::GPrime, "g-prime"},
    {Pred::GClassicalWeaklyPrime, "g-classical-weakly-prime"},
}};

}  // namespace

const char* pred_name(Pred p) {
  for (const auto& [pred, name] : kPredNames)
    if (pred == p) return name;
  return "?";
}

std::optional<Pred> pred_from_name(const std::string& name) {
  for (const auto& [pred, n] : kPredNames)
    if (name == n) return pred;
  return std::nullopt;
}

bool pred_is_ideal_pred(Pred p) {
  return p == Pred::GradedPrimeIdeal || p == Pred::GradedWeaklyPrimeIdeal ||
         p == Pred::GradedWeaklyPrimeElementwise || p == Pred::WeaklyPrimeLeftIdeal;
}

bool pred_is_component_pred(Pred p) {
  return p == Pred::GPrime || p == Pred::GClassicalWeaklyPrime;
}

Json elem_json(const AddGroup& g, uint32_t x) {
  Json arr = Json::array();
  for (uint32_t c : g.decode(x)) arr.push_back(c);
  return arr;
}

Json gens_json(const AddGroup& g, const std::vector<uint32_t>& gens) {
  Json arr = Json::array();
  for (uint32_t x : gens) arr.push_back(elem_json(g, x));
  return arr;
}

Json sub_json(const AddGroup& g, const Substructure& s) {
  return Json{{"generators", gens_json(g, s.addgens)}, {"size", s.size()}};
}

}  // namespace gralab
