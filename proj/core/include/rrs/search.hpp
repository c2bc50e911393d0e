#pragma once

// Exhaustive enumeration of finite models by class, optionally one per
// isomorphism class, and counterexample search over those streams.
//
// Generation: commutative monoid tables with designated unit, then the
// relations the class allows with (x,1) in R, then the residuum is solved
// rather than enumerated.  For each (y,z) residuation forces the R-column of
// y->z to equal {x : (x*y, z) in R}, so the admissible values of y->z are
// exactly the elements with that column and the search only branches on ties.
// Isomorph rejection walks a stabilizer chain over the key prefix
// (constants, mul, rel, join) so whole subtrees are cut before the residuum
// is expanded.  Output is always in canonical-key order, whatever the
// worker count.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrs/model.hpp"

namespace rrs {

enum class ModelClass {
  rrs,
  preordered_rrs,
  antisym_rrs,
  rrs_with_zero,
  residuated_quasi_directoid,
  pre_axioms_minus_g,
};

std::string_view to_string(ModelClass c) noexcept;
/// Accepts the hyphenated names ("preordered-rrs", "rrs-with-0", ...).
ModelClass parse_model_class(std::string_view name);
const std::vector<ModelClass>& all_model_classes();

/// The axioms of class c checked on m; statements the model's signature
/// cannot support (no join, no zero) are not-applicable.
PropertyReport class_report(const Model& m, ModelClass c);
/// class_report(m, c).all_hold(), with fast paths.
bool belongs_to_class(const Model& m, ModelClass c);

struct SearchSpec {
  std::size_t size = 1;
  ModelClass model_class = ModelClass::rrs;
  bool up_to_iso = true;
  /// Statement id or identity expression (see property.hpp).
  std::optional<std::string> property;
};

/// Default size cap per class; RRS_MAX_SIZE in the environment overrides it.
std::size_t default_size_cap(ModelClass c);

struct EnumerateOptions {
  unsigned jobs = 1;
  std::optional<std::size_t> size_cap;
  /// Emit only the least admissible residuum in each cell.  Tied values have
  /// equal R-columns, hence are theta-equivalent when R is a pre-order, so
  /// this keeps one model per (monoid, relation, join) prefix and every
  /// theta-quotient still appears.  Under up_to_iso only the prefix is
  /// canonical.  Ignored for pre-axioms-minus-g, whose residuum is free.
  bool collapse_residuum_ties = false;
};

/// Return false to stop the stream.
using ModelVisitor = std::function<bool(const Model&)>;

/// Streams the class at spec.size in canonical-key order.  Throws Error when
/// the size exceeds the cap.
void for_each_model(const SearchSpec& spec, const ModelVisitor& visit,
                    const EnumerateOptions& options = {});
std::vector<Model> enumerate(const SearchSpec& spec, const EnumerateOptions& options = {});
std::size_t count_models(const SearchSpec& spec, const EnumerateOptions& options = {});

struct Counterexample {
  Model model;
  std::vector<Element> witness;
};

struct SearchOptions {
  unsigned jobs = 1;
  std::size_t min_size = 1;
  std::optional<std::size_t> size_cap;
};

/// Scans sizes min_size..spec.size in order and returns the first model (in
/// canonical order) violating spec.property.  Throws Error when the property
/// is missing or does not parse.
std::optional<Counterexample> counterexample_search(const SearchSpec& spec,
                                                    const SearchOptions& options = {});

/// Every violating model at exactly spec.size.
std::vector<Counterexample> all_counterexamples(const SearchSpec& spec,
                                                const EnumerateOptions& options = {});

}  // namespace rrs
