#include "rrs/statements.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rrs/directoid.hpp"
#include "rrs/negation.hpp"

namespace rrs {

const std::vector<StatementInfo>& statement_catalog() {
  static const std::vector<StatementInfo> catalog = {
      {"monoid.associative", "x,y,z", "(x*y)*z = x*(y*z)"},
      {"monoid.commutative", "x,y", "x*y = y*x"},
      {"monoid.unit", "x", "1*x = x"},
      {"rrs.unit_top", "x", "(x,1) in R"},
      {"rrs.residuation", "x,y,z", "(x*y,z) in R <=> (x,y->z) in R"},
      {"relation.reflexive", "x", "(x,x) in R"},
      {"relation.transitive", "x,y,z", "(x,y) in R and (y,z) in R => (x,z) in R"},
      {"relation.antisymmetric", "x,y", "(x,y) in R and (y,x) in R => x = y"},
      {"rrs.basic.a", "x,y", "x->y = 1 => (x,y) in R"},
      {"rrs.basic.b", "x", "(x,1->1) in R"},
      {"rrs.basic.c", "x", "(1,x->1) in R"},
      {"rrs.basic.d", "x,y,z", "x->y = 1 => (z*x,y) in R"},
      {"rrs.basic.e", "x,y", "(x,y->1) in R"},
      {"rrs.antisym.i", "x,y", "R antisymmetric: (x,y) in R <=> x->y = 1"},
      {"rrs.antisym.ii", "x,y", "R antisymmetric and reflexive: (x*y,x) in R and (x*y,y) in R"},
      {"rrs.reflexive.a", "x", "R reflexive: (1,x->x) in R"},
      {"rrs.reflexive.b", "x,y", "R reflexive: ((x->y)*x,y) in R"},
      {"rrs.reflexive.c", "x,y", "R reflexive: (x,y->(x*y)) in R"},
      {"rrs.reflexive.d", "x", "R reflexive: (x,1->x) in R and (1->x,x) in R"},
      {"rrs.reflexive.e", "x,y", "R reflexive: (x,(x->y)->y) in R"},
      {"preorder.arith.a", "x,y,z", "x <= y => x*z <= y*z and z*x <= z*y"},
      {"preorder.arith.b", "x,y,z", "x <= y => y->z <= x->z and z->x <= z->y"},
      {"preorder.arith.c", "x,y,z", "x*(y->z) <= y->(x*z)"},
      {"preorder.arith.d", "x,y,z", "(x*y)->z <= x->(y->z)"},
      {"preorder.arith.e", "x,y,z", "x->(y->z) <= (x*y)->z"},
      {"preorder.arith.f", "x,y,z", "x->(y->z) <= y->(x->z)"},
      {"preorder.arith.g", "x,y,z", "(x->y)*(y->z) <= x->z"},
      {"preorder.arith.h", "x,y", "x*y <= x and x*y <= y"},
      {"preorder.arith.i", "x,y,z", "x->y <= (y->z)->(x->z)"},
      {"characterization.a", "x,y,z", "(A,*,1) is a commutative monoid"},
      {"characterization.b", "x,y,z", "R is a pre-order and (x,1) in R"},
      {"characterization.c", "x,y,z", "x->(y->z) and (x*y)->z are R-equivalent"},
      {"characterization.d", "x,y", "(x,y) in R <=> (1,x->y) in R"},
      {"characterization.equivalence", "", "(a) and (b) and (c) and (d) <=> pre-ordered RRS"},
      {"supremal.multiplication", "a,k",
       "k supremal for Z => a*k supremal for aZ, for every nonempty Z"},
      {"directoid.a", "x", "x|x = x"},
      {"directoid.b", "x,y", "x|(x|y) = x|y and y|(x|y) = x|y"},
      {"directoid.c", "x,y,z", "x|((x|y)|z) = (x|y)|z"},
      {"directoid.e", "x,y,z", "(A,*,1) is a commutative monoid"},
      {"directoid.f", "x", "x|1 = 1"},
      {"directoid.g", "x,y,z", "(x*y)|z = z <=> x|(y->z) = y->z"},
      {"theta.join_compatible", "x,y,u,v", "x theta y and u theta v => (x|u) theta (y|v)"},
      {"theta.ops_compatible", "x,y,u,v",
       "x theta y and u theta v => (x*u) theta (y*v) and (x->u) theta (y->v)"},
      {"theta.implication", "", "theta respects | => theta respects * and ->"},
      {"pocrim.monoid", "x,y,z", "A/theta: commutative monoid"},
      {"pocrim.residuation", "x,y,z", "A/theta: residuation"},
      {"pocrim.reflexive", "x", "A/theta: order reflexive"},
      {"pocrim.transitive", "x,y,z", "A/theta: order transitive"},
      {"pocrim.antisymmetric", "x,y", "A/theta: order antisymmetric"},
      {"pocrim.unit_top", "x", "A/theta: x <= 1"},
      {"identity.a", "x,y", "(x->y)*x <= y"},
      {"identity.b", "x,y,z", "(x*y)->z <= x->(y->z)"},
      {"identity.c", "x,y,z", "x->(y->z) <= (x*y)->z"},
      {"identity.d", "x,y", "x->(x|y) <= 1"},
      {"identity.e", "x,y", "1 <= x->(x|y)"},
      {"identity.f", "x,y,z", "x*z <= (x|y)*z"},
      {"equational.g", "x,y,z", "axiom g"},
      {"equational.identities", "x,y,z", "identities (a)-(f)"},
      {"equational.equivalence", "", "axiom g <=> identities (a)-(f), given the other axioms"},
      {"zero.absorbing", "x", "0*x = 0"},
      {"negation.zero_bottom", "x", "(0,x) in R"},
      {"negation.a", "", "1' and 0 are R-equivalent"},
      {"negation.b", "", "0' and 1 are R-equivalent"},
      {"negation.c", "x", "(x,x'') in R"},
      {"negation.d", "x", "(x*x',0) in R"},
      {"negation.antisym.zero_arrow", "x", "0->x = 1"},
      {"negation.antisym.constants", "", "0->0 = 1 and 1->0 = 0"},
      {"negation.antisym.contradiction", "x", "x*x' = 0"},
      {"negation.preorder.a", "x,y", "x <= y => y' <= x'"},
      {"negation.preorder.b", "x", "x <= x'' and x' is R-equivalent to x'''"},
      {"negation.preorder.c", "x,y", "(x*y)' is R-equivalent to x->y'"},
      {"negation.preorder.d", "x,y", "x->y' is R-equivalent to y->x'"},
      {"negation.preorder.e", "x,y", "(x->y)*y' <= x'"},
      {"negation.preorder.f", "x,y", "x->y <= y'->x'"},
      {"negation.double.i", "x,y", "x'' = x => x->y is R-equivalent to (x*y')'"},
      {"negation.double.ii", "x,y", "x'' = x => y'->x' <= x->y"},
  };
  return catalog;
}

const StatementInfo* find_statement(std::string_view id) noexcept {
  const auto& c = statement_catalog();
  const auto it = std::find_if(c.begin(), c.end(), [&](const StatementInfo& s) { return s.id == id; });
  return it == c.end() ? nullptr : &*it;
}

namespace {

constexpr std::size_t kMaxBuiltDirectoids = 4096;
constexpr std::size_t kMaxSupremalSize = 10;

using Checker = std::function<PropertyReport(const Model&)>;

struct Group {
  std::vector<std::string_view> prefixes;
  Checker run;
};

std::vector<std::string> ids_with_prefix(std::string_view prefix) {
  std::vector<std::string> out;
  for (const auto& s : statement_catalog()) {
    if (s.id.substr(0, prefix.size()) == prefix) out.emplace_back(s.id);
  }
  return out;
}

PropertyReport skip_prefixes(const std::vector<std::string_view>& prefixes,
                             const std::string& reason) {
  PropertyReport r;
  for (auto p : prefixes) {
    for (auto& id : ids_with_prefix(p)) r.add_not_applicable(id, reason);
  }
  return r;
}

/// Combines per-directoid reports statement by statement: fails if any
/// directoid fails, holds if none fails and at least one holds.
PropertyReport merge_directoid_reports(const std::vector<PropertyReport>& reports) {
  PropertyReport out;
  if (reports.empty()) return out;
  for (const auto& first : reports.front().items()) {
    const StatementResult* failure = nullptr;
    std::size_t failing_index = 0;
    bool any_hold = false;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const StatementResult* item = reports[i].find(first.id);
      if (item == nullptr) continue;
      if (item->status == Status::fails && failure == nullptr) {
        failure = item;
        failing_index = i;
      }
      any_hold = any_hold || item->status == Status::holds;
    }
    if (failure != nullptr) {
      StatementResult r = *failure;
      if (reports.size() > 1) {
        r.note = "directoid #" + std::to_string(failing_index) +
                 (r.note.empty() ? "" : ": " + r.note);
      }
      out.add(std::move(r));
    } else if (any_hold) {
      out.add_holds(first.id);
    } else {
      out.add(first);
    }
  }
  return out;
}

/// The join tables to evaluate directoid statements on: the model's own, or
/// every quasi-directoid of a pre-ordered system.  Empty with a reason when
/// neither applies.
std::vector<QuasiDirectoid> directoids_for(const Model& m, std::string& reason) {
  if (m.join) return {QuasiDirectoid(m)};
  if (!is_preordered_rrs(m)) {
    reason = "no join table and not a pre-ordered residuated system";
    return {};
  }
  if (count_quasi_directoids(m) > kMaxBuiltDirectoids) {
    reason = "too many quasi-directoids to build";
    return {};
  }
  return build_quasi_directoids(m);
}

Checker per_directoid(std::vector<std::string_view> prefixes,
                      std::function<PropertyReport(const QuasiDirectoid&)> f) {
  return [prefixes, f](const Model& m) {
    std::string reason;
    const auto qs = directoids_for(m, reason);
    if (qs.empty()) return skip_prefixes(prefixes, reason);
    std::vector<PropertyReport> reports;
    reports.reserve(qs.size());
    for (const auto& q : qs) reports.push_back(f(q));
    return merge_directoid_reports(reports);
  };
}

PropertyReport quotient_pocrim(const QuasiDirectoid& q) {
  if (!is_residuated_quasi_directoid(q).all_hold()) {
    return skip_prefixes({"pocrim."}, "not a residuated quasi-directoid");
  }
  if (is_theta_congruence(q).status("theta.join_compatible") != Status::holds) {
    return skip_prefixes({"pocrim."}, "theta is not a congruence of the join");
  }
  const Model sys = induced_system(q);
  return is_pocrim(quotient(QuasiDirectoid(sys), theta(sys)));
}

PropertyReport supremal_all(const Model& m) {
  PropertyReport out;
  if (!is_preordered_rrs(m)) {
    out.add_not_applicable("supremal.multiplication", "not a pre-ordered residuated system");
    return out;
  }
  if (m.size > kMaxSupremalSize) {
    out.add_not_applicable("supremal.multiplication", "universe too large for subset scan");
    return out;
  }
  const std::uint64_t subsets = std::uint64_t{1} << m.size;
  for (Element a = 0; a < m.size; ++a) {
    for (std::uint64_t bits = 1; bits < subsets; ++bits) {
      SubsetMask z(m.size);
      for (Element x = 0; x < m.size; ++x) {
        if (((bits >> x) & 1U) != 0) z.insert(x);
      }
      const PropertyReport r = check_supremal_multiplication(m, z, a);
      const StatementResult* f = r.first_failure();
      if (f == nullptr) continue;
      std::string members;
      for (Element x : z.elements()) {
        members += (members.empty() ? "" : ",") + std::to_string(x);
      }
      out.add({"supremal.multiplication", Status::fails, {a, f->witness.at(0)},
               "Z = {" + members + "}"});
      return out;
    }
  }
  out.add_holds("supremal.multiplication");
  return out;
}

Checker with_zero(std::vector<std::string_view> prefixes,
                  std::function<PropertyReport(const Model&)> f) {
  return [prefixes, f](const Model& m) {
    if (!m.zero) return skip_prefixes(prefixes, "model has no zero");
    return f(m);
  };
}

const std::vector<Group>& groups() {
  static const std::vector<Group> g = {
      {{"monoid."}, check_commutative_monoid},
      {{"rrs.unit_top"}, check_unit_top},
      {{"rrs.residuation"}, check_residuation},
      {{"rrs.basic."}, verify_basic_props},
      {{"rrs.antisym."}, verify_antisym_props},
      {{"rrs.reflexive."}, verify_reflexive_props},
      {{"preorder.arith."}, verify_preorder_arithmetic},
      {{"characterization."}, check_characterization},
      {{"supremal."}, supremal_all},
      {{"directoid."}, per_directoid({"directoid."}, is_residuated_quasi_directoid)},
      {{"theta."}, per_directoid({"theta."}, is_theta_congruence)},
      {{"pocrim."}, per_directoid({"pocrim."}, quotient_pocrim)},
      {{"identity."}, per_directoid({"identity."}, check_residuation_identities)},
      {{"equational."}, per_directoid({"equational."}, check_equational_equivalence)},
      {{"zero."}, with_zero({"zero."}, check_zero_absorbing)},
      {{"negation.zero_bottom", "negation.a", "negation.b", "negation.c", "negation.d"},
       with_zero({"negation.zero_bottom", "negation.a", "negation.b", "negation.c", "negation.d"},
                 verify_zero_props)},
      {{"negation.antisym."}, with_zero({"negation.antisym."}, verify_antisym_zero_props)},
      {{"negation.preorder."}, with_zero({"negation.preorder."}, verify_preorder_negation)},
      {{"negation.double."}, with_zero({"negation.double."}, verify_double_negation_props)},
  };
  return g;
}

bool owns(const Group& g, std::string_view id) {
  return std::any_of(g.prefixes.begin(), g.prefixes.end(), [&](std::string_view p) {
    // Dotted prefixes match a family; full ids match exactly.
    return p.back() == '.' ? id.substr(0, p.size()) == p : id == p;
  });
}

}  // namespace

PropertyReport run_all_statements(const Model& m) {
  m.validate_shape();
  PropertyReport out;
  for (const auto& g : groups()) out.append(g.run(m));
  return out;
}

StatementResult evaluate_statement(const Model& m, std::string_view id) {
  if (find_statement(id) == nullptr) throw Error("unknown statement id '" + std::string(id) + "'");
  for (const auto& g : groups()) {
    if (!owns(g, id)) continue;
    const PropertyReport r = g.run(m);
    if (const StatementResult* s = r.find(id)) return *s;
  }
  throw Error("statement '" + std::string(id) + "' was not reported by its checker");
}

}  // namespace rrs

namespace rrs {

std::string_view version() noexcept { return RRS_VERSION; }

}  // namespace rrs
