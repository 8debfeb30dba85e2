#include "ddg/state.hpp"

#include "ddg/digest.hpp"

namespace ddg {

std::optional<std::string> find_violation(const GeneratorState& state) {
  const Bounds& b = state.bounds;
  if (b.lower.size() != b.upper.size()) return "bounds: lower/upper length mismatch";
  if (!b.dims.contains(state.d())) return "d=" + std::to_string(state.d()) + " outside its range";
  if (!b.components.contains(state.m())) return "m=" + std::to_string(state.m()) + " outside its range";
  if (!b.clusters.contains(state.kappa)) return "kappa=" + std::to_string(state.kappa) + " outside its range";
  for (const auto& dgc : state.dgcs)
    if (auto v = find_violation(dgc, b)) return v;
  return std::nullopt;
}

std::uint64_t state_digest(const GeneratorState& state) {
  Fnv1a h;
  h.add(static_cast<std::int64_t>(state.d()))
      .add(static_cast<std::int64_t>(state.m()))
      .add(static_cast<std::int64_t>(state.kappa));
  for (const auto& dgc : state.dgcs) h.add(parameter_digest(dgc));
  return h.value();
}

}  // namespace ddg
