#include <functional>

#include "rrs/property.hpp"
#include "rrs/search.hpp"
#include "rrs/statements.hpp"

namespace rrs {

namespace {

using Violation = std::function<std::optional<std::vector<Element>>(const Model&)>;

bool class_has_join(ModelClass c) {
  return c == ModelClass::residuated_quasi_directoid || c == ModelClass::pre_axioms_minus_g;
}

Violation compile(const SearchSpec& spec) {
  if (!spec.property) throw Error("search: no property given");
  const std::string& text = *spec.property;
  if (find_statement(text) != nullptr) {
    return [id = text](const Model& m) -> std::optional<std::vector<Element>> {
      StatementResult r = evaluate_statement(m, id);
      if (r.status != Status::fails) return std::nullopt;
      return std::move(r.witness);
    };
  }
  Property p = Property::parse(text);
  if (p.uses_join() && !class_has_join(spec.model_class)) {
    throw Error("search: property uses '|' but class " + std::string(to_string(spec.model_class)) +
                " has no join");
  }
  if (p.uses_zero() && spec.model_class != ModelClass::rrs_with_zero) {
    throw Error("search: property uses 0 but class " + std::string(to_string(spec.model_class)) +
                " has no zero");
  }
  return [p = std::move(p)](const Model& m) { return p.find_violation(m); };
}

}  // namespace

std::optional<Counterexample> counterexample_search(const SearchSpec& spec,
                                                    const SearchOptions& options) {
  const Violation violated = compile(spec);
  const EnumerateOptions eo{options.jobs, options.size_cap};
  for (std::size_t n = std::max<std::size_t>(1, options.min_size); n <= spec.size; ++n) {
    SearchSpec at = spec;
    at.size = n;
    std::optional<Counterexample> found;
    for_each_model(
        at,
        [&](const Model& m) {
          if (auto w = violated(m)) {
            found = Counterexample{m, std::move(*w)};
            return false;
          }
          return true;
        },
        eo);
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<Counterexample> all_counterexamples(const SearchSpec& spec,
                                                const EnumerateOptions& options) {
  const Violation violated = compile(spec);
  std::vector<Counterexample> out;
  for_each_model(
      spec,
      [&](const Model& m) {
        if (auto w = violated(m)) out.push_back({m, std::move(*w)});
        return true;
      },
      options);
  return out;
}

}  // namespace rrs
