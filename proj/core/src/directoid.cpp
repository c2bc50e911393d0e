#include "rrs/directoid.hpp"

#include <algorithm>
#include <string>

#include "scan.hpp"

namespace rrs {

using detail::check;
using T1 = std::array<Element, 1>;
using T2 = std::array<Element, 2>;
using T3 = std::array<Element, 3>;
using T4 = std::array<Element, 4>;

namespace {

// Folds a sub-report into one statement: holds iff every item holds, else
// the first failing item's witness with its id as the note.
void fold(PropertyReport& out, std::string id, const PropertyReport& sub) {
  if (const auto* f = sub.first_failure()) {
    out.add({std::move(id), Status::fails, f->witness, f->id});
  } else {
    out.add_holds(std::move(id));
  }
}

PropertyReport preorder_with_top(const Model& m) {
  PropertyReport r;
  check<1>(r, "reflexive", m.size, [&](const T1& t) { return m.rel.holds(t[0], t[0]); });
  detail::record<3>(r, "transitive", transitivity_violation(m.rel));
  check<1>(r, "unit_top", m.size, [&](const T1& t) { return m.rel.holds(t[0], m.unit); });
  return r;
}

void require_preordered(const Model& m, const char* op) {
  if (!is_preordered_rrs(m)) {
    throw PreconditionError(std::string(op) + ": model is not a pre-ordered residuated system");
  }
}

bool axiom_a(const OpTable& j, Element x) { return j(x, x) == x; }

bool axiom_b(const OpTable& j, Element x, Element y) {
  const Element xy = j(x, y);
  return j(x, xy) == xy && j(y, xy) == xy;
}

bool axiom_c(const OpTable& j, Element x, Element y, Element z) {
  const Element rhs = j(j(x, y), z);
  return j(x, rhs) == rhs;
}

bool axiom_g(const Model& m, Element x, Element y, Element z) {
  const OpTable& j = *m.join;
  const Element yz = m.arrow(y, z);
  return (j(m.mul(x, y), z) == z) == (j(x, yz) == yz);
}

// u <= v written equationally as u|v = v.
bool leq(const OpTable& j, Element u, Element v) { return j(u, v) == v; }

bool identity_a(const Model& m, Element x, Element y) {
  return leq(*m.join, m.mul(m.arrow(x, y), x), y);
}
bool identity_b(const Model& m, Element x, Element y, Element z) {
  return leq(*m.join, m.arrow(m.mul(x, y), z), m.arrow(x, m.arrow(y, z)));
}
bool identity_c(const Model& m, Element x, Element y, Element z) {
  return leq(*m.join, m.arrow(x, m.arrow(y, z)), m.arrow(m.mul(x, y), z));
}
bool identity_d(const Model& m, Element x, Element y) {
  return leq(*m.join, m.arrow(x, (*m.join)(x, y)), m.unit);
}
bool identity_e(const Model& m, Element x, Element y) {
  return leq(*m.join, m.unit, m.arrow(x, (*m.join)(x, y)));
}
bool identity_f(const Model& m, Element x, Element y, Element z) {
  return leq(*m.join, m.mul(x, z), m.mul((*m.join)(x, y), z));
}

ThetaPartition partition_from(std::size_t n, auto&& equivalent) {
  ThetaPartition p;
  p.class_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (p.class_of[x] != n) continue;
    const std::size_t id = p.count++;
    for (std::size_t y = x; y < n; ++y) {
      if (p.class_of[y] == n && equivalent(static_cast<Element>(x), static_cast<Element>(y))) {
        p.class_of[y] = id;
      }
    }
  }
  return p;
}

ThetaPartition equational_theta(const QuasiDirectoid& q) {
  return partition_from(q.size(),
                        [&](Element x, Element y) { return q.below(x, y) && q.below(y, x); });
}

}  // namespace

QuasiDirectoid::QuasiDirectoid(Model m) : model_(std::move(m)) {
  if (!model_.join) throw PreconditionError("quasi-directoid requires a join table");
  model_.validate_shape();
}

std::vector<std::vector<Element>> ThetaPartition::classes() const {
  std::vector<std::vector<Element>> out(count);
  for (std::size_t x = 0; x < class_of.size(); ++x) {
    out[class_of[x]].push_back(static_cast<Element>(x));
  }
  return out;
}

bool is_preordered_rrs(const Model& m) { return is_rrs(m) && is_preorder(m.rel); }

PropertyReport verify_preorder_arithmetic(const Model& m) {
  PropertyReport r;
  if (!is_preordered_rrs(m)) {
    detail::skip_all(r,
                     {"preorder.arith.a", "preorder.arith.b", "preorder.arith.c",
                      "preorder.arith.d", "preorder.arith.e", "preorder.arith.f",
                      "preorder.arith.g", "preorder.arith.h", "preorder.arith.i"},
                     "not a pre-ordered residuated system");
    return r;
  }
  const auto& R = m.rel;
  const auto mul = [&](Element a, Element b) { return m.mul(a, b); };
  const auto to = [&](Element a, Element b) { return m.arrow(a, b); };
  const std::size_t n = m.size;

  check<3>(r, "preorder.arith.a", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return !R.holds(x, y) || (R.holds(mul(x, z), mul(y, z)) && R.holds(mul(z, x), mul(z, y)));
  });
  check<3>(r, "preorder.arith.b", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return !R.holds(x, y) || (R.holds(to(y, z), to(x, z)) && R.holds(to(z, x), to(z, y)));
  });
  check<3>(r, "preorder.arith.c", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return R.holds(mul(x, to(y, z)), to(y, mul(x, z)));
  });
  check<3>(r, "preorder.arith.d", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return R.holds(to(mul(x, y), z), to(x, to(y, z)));
  });
  check<3>(r, "preorder.arith.e", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return R.holds(to(x, to(y, z)), to(mul(x, y), z));
  });
  check<3>(r, "preorder.arith.f", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return R.holds(to(x, to(y, z)), to(y, to(x, z)));
  });
  check<3>(r, "preorder.arith.g", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return R.holds(mul(to(x, y), to(y, z)), to(x, z));
  });
  check<2>(r, "preorder.arith.h", n, [&](const T2& t) {
    const Element xy = mul(t[0], t[1]);
    return R.holds(xy, t[1]) && R.holds(xy, t[0]);
  });
  check<3>(r, "preorder.arith.i", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    return R.holds(to(x, y), to(to(y, z), to(x, z)));
  });
  return r;
}

PropertyReport check_characterization(const Model& m) {
  PropertyReport r;
  const auto& R = m.rel;
  const std::size_t n = m.size;
  fold(r, "characterization.a", check_commutative_monoid(m));
  fold(r, "characterization.b", preorder_with_top(m));
  check<3>(r, "characterization.c", n, [&](const T3& t) {
    const auto [x, y, z] = t;
    const Element curried = m.arrow(x, m.arrow(y, z));
    const Element uncurried = m.arrow(m.mul(x, y), z);
    return R.holds(uncurried, curried) && R.holds(curried, uncurried);
  });
  check<2>(r, "characterization.d", n, [&](const T2& t) {
    return R.holds(t[0], t[1]) == R.holds(m.unit, m.arrow(t[0], t[1]));
  });
  const bool conjunction = r.all_hold();
  if (conjunction == is_preordered_rrs(m)) {
    r.add_holds("characterization.equivalence");
  } else {
    r.add({"characterization.equivalence", Status::fails, {},
           conjunction ? "conditions hold but model is not pre-ordered residuated"
                       : "model is pre-ordered residuated but a condition fails"});
  }
  return r;
}

SubsetMask quasi_join_candidates(const Model& m, Element x, Element y) {
  require_preordered(m, "quasi_join_candidates");
  if (x >= m.size || y >= m.size) throw std::out_of_range("quasi_join_candidates: index");
  if (m.rel.holds(x, y)) return SubsetMask::of(m.size, {y});
  if (m.rel.holds(y, x)) return SubsetMask::of(m.size, {x});
  return upper_cone(m, x, y);
}

std::size_t count_quasi_directoids(const Model& m) {
  require_preordered(m, "count_quasi_directoids");
  std::size_t count = 1;
  for (Element x = 0; x < m.size; ++x) {
    for (Element y = x + 1; y < m.size; ++y) {
      if (incomparable(m.rel, x, y)) count *= upper_cone(m, x, y).count();
    }
  }
  return count;
}

std::vector<QuasiDirectoid> build_quasi_directoids(const Model& m) {
  require_preordered(m, "build_quasi_directoids");
  const auto n = static_cast<Element>(m.size);
  OpTable join(m.size);
  struct Choice {
    Element x, y;
    std::vector<Element> options;
  };
  std::vector<Choice> choices;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m.rel.holds(x, y)) {
        join.set(x, y, y);
      } else if (m.rel.holds(y, x)) {
        join.set(x, y, x);
      } else if (x < y) {
        choices.push_back({x, y, upper_cone(m, x, y).elements()});
      }
    }
  }

  std::vector<QuasiDirectoid> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  // An empty cone on an incomparable pair leaves no admissible table.
  for (const auto& c : choices) {
    if (c.options.empty()) return out;
  }
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const Element v = choices[i].options[pick[i]];
      join.set(choices[i].x, choices[i].y, v);
      join.set(choices[i].y, choices[i].x, v);
    }
    Model q = m;
    q.join = join;
    out.emplace_back(std::move(q));

    bool advanced = false;
    for (std::size_t i = choices.size(); i > 0 && !advanced; --i) {
      if (++pick[i - 1] < choices[i - 1].options.size()) {
        advanced = true;
      } else {
        pick[i - 1] = 0;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(), [](const QuasiDirectoid& a, const QuasiDirectoid& b) {
    return std::lexicographical_compare(a.join().entries().begin(), a.join().entries().end(),
                                        b.join().entries().begin(), b.join().entries().end());
  });
  return out;
}

bool satisfies_quasi_directoid_axioms(const OpTable& join) noexcept {
  const auto n = static_cast<Element>(join.size());
  for (Element x = 0; x < n; ++x) {
    if (!axiom_a(join, x)) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!axiom_b(join, x, y)) return false;
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!axiom_c(join, x, y, z)) return false;
      }
    }
  }
  return true;
}

bool satisfies_axiom_g(const Model& m) noexcept {
  const auto n = static_cast<Element>(m.size);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!axiom_g(m, x, y, z)) return false;
      }
    }
  }
  return true;
}

bool satisfies_residuation_identities(const Model& m) noexcept {
  const auto n = static_cast<Element>(m.size);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!identity_a(m, x, y) || !identity_d(m, x, y) || !identity_e(m, x, y)) return false;
      for (Element z = 0; z < n; ++z) {
        if (!identity_b(m, x, y, z) || !identity_c(m, x, y, z) || !identity_f(m, x, y, z)) {
          return false;
        }
      }
    }
  }
  return true;
}

PropertyReport is_quasi_directoid(const QuasiDirectoid& q) {
  PropertyReport r;
  const OpTable& j = q.join();
  check<1>(r, "directoid.a", q.size(), [&](const T1& t) { return axiom_a(j, t[0]); });
  check<2>(r, "directoid.b", q.size(), [&](const T2& t) { return axiom_b(j, t[0], t[1]); });
  check<3>(r, "directoid.c", q.size(),
           [&](const T3& t) { return axiom_c(j, t[0], t[1], t[2]); });
  return r;
}

PropertyReport is_residuated_quasi_directoid(const QuasiDirectoid& q) {
  PropertyReport r = is_quasi_directoid(q);
  const Model& m = q.model();
  fold(r, "directoid.e", check_commutative_monoid(m));
  check<1>(r, "directoid.f", q.size(),
           [&](const T1& t) { return q.join()(t[0], m.unit) == m.unit; });
  check<3>(r, "directoid.g", q.size(),
           [&](const T3& t) { return axiom_g(m, t[0], t[1], t[2]); });
  return r;
}

BinRel induced_relation(const QuasiDirectoid& q) {
  BinRel r(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    for (Element y = 0; y < q.size(); ++y) {
      if (q.below(x, y)) r.set(x, y);
    }
  }
  return r;
}

Model induced_system(const QuasiDirectoid& q) {
  if (!is_residuated_quasi_directoid(q).all_hold()) {
    throw PreconditionError("induced_system: not a residuated quasi-directoid");
  }
  Model m = q.model();
  m.rel = induced_relation(q);
  if (!is_preordered_rrs(m)) {
    throw Error("induced_system: induced system is not a pre-ordered residuated system");
  }
  return m;
}

PropertyReport check_supremal_multiplication(const Model& m, const SubsetMask& z_set, Element a) {
  require_preordered(m, "check_supremal_multiplication");
  if (a >= m.size) throw std::out_of_range("check_supremal_multiplication: element");
  const SubsetMask sup = supremal_elements(m, z_set);
  SubsetMask scaled(m.size);
  for (Element z : z_set.elements()) scaled.insert(m.mul(a, z));
  const SubsetMask scaled_sup = supremal_elements(m, scaled);
  PropertyReport r;
  for (Element k : sup.elements()) {
    if (!scaled_sup.contains(m.mul(a, k))) {
      r.add_fails("supremal.multiplication", {k});
      return r;
    }
  }
  r.add_holds("supremal.multiplication");
  return r;
}

ThetaPartition theta(const Model& m) {
  const bool relational = is_preorder(m.rel);
  if (!relational && !m.join) {
    throw PreconditionError("theta: relation is not a pre-order and no join table is present");
  }
  std::optional<ThetaPartition> from_rel;
  if (relational) {
    from_rel = partition_from(
        m.size, [&](Element x, Element y) { return m.rel.holds(x, y) && m.rel.holds(y, x); });
  }
  if (!m.join) return *from_rel;
  ThetaPartition from_join = equational_theta(QuasiDirectoid(m));
  if (from_rel && *from_rel != from_join) {
    throw Error("theta: relational and equational partitions disagree");
  }
  return from_join;
}

PropertyReport is_theta_congruence(const QuasiDirectoid& q) {
  PropertyReport r;
  if (!is_residuated_quasi_directoid(q).all_hold()) {
    detail::skip_all(r, {"theta.join_compatible", "theta.ops_compatible", "theta.implication"},
                     "not a residuated quasi-directoid");
    return r;
  }
  const ThetaPartition p = equational_theta(q);
  const Model& m = q.model();
  const auto compatible = [&](const OpTable& op) {
    return [&p, &op](const T4& t) {
      const auto [x, x2, y, y2] = t;
      if (!p.same(x, x2) || !p.same(y, y2)) return true;
      return p.same(op(x, y), op(x2, y2));
    };
  };
  check<4>(r, "theta.join_compatible", q.size(), compatible(q.join()));
  const auto mul_ok = compatible(m.mul);
  const auto arrow_ok = compatible(m.arrow);
  check<4>(r, "theta.ops_compatible", q.size(),
           [&](const T4& t) { return mul_ok(t) && arrow_ok(t); });
  const bool join_ok = r.status("theta.join_compatible") == Status::holds;
  const bool ops_ok = r.status("theta.ops_compatible") == Status::holds;
  if (!join_ok || ops_ok) {
    r.add_holds("theta.implication");
  } else {
    r.add({"theta.implication", Status::fails, {}, "join-compatible but not a congruence"});
  }
  return r;
}

Model quotient(const QuasiDirectoid& q, const ThetaPartition& p) {
  const ThetaPartition expected = equational_theta(q);
  if (p != expected) throw PreconditionError("quotient: partition is not theta of q");
  const Model& m = q.model();
  const auto classes = p.classes();
  const std::size_t k = p.count;

  const auto induced_table = [&](const OpTable& op, const char* name) {
    OpTable t(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        const Element rep = static_cast<Element>(p.class_of[op(classes[a][0], classes[b][0])]);
        for (Element x : classes[a]) {
          for (Element y : classes[b]) {
            if (p.class_of[op(x, y)] != rep) {
              throw PreconditionError(std::string("quotient: ") + name +
                                      " is not well-defined on classes, witness (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
            }
          }
        }
        t.set(static_cast<Element>(a), static_cast<Element>(b), rep);
      }
    }
    return t;
  };

  Model out;
  out.size = k;
  out.join = induced_table(q.join(), "join");
  out.mul = induced_table(m.mul, "multiplication");
  out.arrow = induced_table(m.arrow, "residuum");
  out.unit = static_cast<Element>(p.class_of[m.unit]);
  if (m.zero) out.zero = static_cast<Element>(p.class_of[*m.zero]);
  out.rel = BinRel(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (q.below(classes[a][0], classes[b][0])) {
        out.rel.set(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  }
  if (!is_partial_order(out.rel)) throw Error("quotient: induced order is not a partial order");
  return out;
}

PropertyReport is_pocrim(const Model& m) {
  PropertyReport r;
  fold(r, "pocrim.monoid", check_commutative_monoid(m));
  fold(r, "pocrim.residuation", check_residuation(m));
  check<1>(r, "pocrim.reflexive", m.size, [&](const T1& t) { return m.rel.holds(t[0], t[0]); });
  detail::record<3>(r, "pocrim.transitive", transitivity_violation(m.rel));
  check<2>(r, "pocrim.antisymmetric", m.size, [&](const T2& t) {
    return t[0] == t[1] || !(m.rel.holds(t[0], t[1]) && m.rel.holds(t[1], t[0]));
  });
  check<1>(r, "pocrim.unit_top", m.size, [&](const T1& t) { return m.rel.holds(t[0], m.unit); });
  return r;
}

PropertyReport check_residuation_identities(const QuasiDirectoid& q) {
  PropertyReport r;
  const Model& m = q.model();
  const std::size_t n = q.size();
  check<2>(r, "identity.a", n, [&](const T2& t) { return identity_a(m, t[0], t[1]); });
  check<3>(r, "identity.b", n, [&](const T3& t) { return identity_b(m, t[0], t[1], t[2]); });
  check<3>(r, "identity.c", n, [&](const T3& t) { return identity_c(m, t[0], t[1], t[2]); });
  check<2>(r, "identity.d", n, [&](const T2& t) { return identity_d(m, t[0], t[1]); });
  check<2>(r, "identity.e", n, [&](const T2& t) { return identity_e(m, t[0], t[1]); });
  check<3>(r, "identity.f", n, [&](const T3& t) { return identity_f(m, t[0], t[1], t[2]); });
  return r;
}

PropertyReport check_equational_equivalence(const QuasiDirectoid& q) {
  PropertyReport r;
  const Model& m = q.model();
  const bool pre_axioms = satisfies_quasi_directoid_axioms(q.join()) &&
                          is_commutative_monoid(m.mul, m.unit) &&
                          [&] {
                            for (Element x = 0; x < q.size(); ++x) {
                              if (q.join()(x, m.unit) != m.unit) return false;
                            }
                            return true;
                          }();
  if (!pre_axioms) {
    detail::skip_all(r, {"equational.g", "equational.identities", "equational.equivalence"},
                     "axioms other than g do not all hold");
    return r;
  }
  check<3>(r, "equational.g", q.size(), [&](const T3& t) { return axiom_g(m, t[0], t[1], t[2]); });
  fold(r, "equational.identities", check_residuation_identities(q));
  const bool g = r.status("equational.g") == Status::holds;
  const bool ids = r.status("equational.identities") == Status::holds;
  if (g == ids) {
    r.add_holds("equational.equivalence");
  } else {
    r.add({"equational.equivalence", Status::fails, {},
           g ? "g holds but an identity fails" : "identities hold but g fails"});
  }
  return r;
}

}  // namespace rrs
