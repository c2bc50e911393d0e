#include "rrs/negation.hpp"

#include "rrs/directoid.hpp"
#include "scan.hpp"

namespace rrs {

using detail::check;
using T1 = std::array<Element, 1>;
using T2 = std::array<Element, 2>;

namespace {

Element zero_of(const Model& m, const char* op) {
  if (!m.zero) throw PreconditionError(std::string(op) + ": model has no zero");
  return *m.zero;
}

bool zero_absorbs(const Model& m, Element zero) {
  for (Element x = 0; x < m.size; ++x) {
    if (m.mul(zero, x) != zero || m.mul(x, zero) != zero) return false;
  }
  return true;
}

}  // namespace

PropertyReport check_zero_absorbing(const Model& m) {
  const Element zero = zero_of(m, "check_zero_absorbing");
  PropertyReport r;
  check<1>(r, "zero.absorbing", m.size, [&](const T1& t) {
    return m.mul(zero, t[0]) == zero && m.mul(t[0], zero) == zero;
  });
  return r;
}

Element negate(const Model& m, Element x) {
  const Element zero = zero_of(m, "negate");
  if (x >= m.size) throw std::out_of_range("negate: element out of range");
  return m.arrow(x, zero);
}

PropertyReport verify_zero_props(const Model& m) {
  const Element zero = zero_of(m, "verify_zero_props");
  PropertyReport r;
  const auto ids = {"negation.zero_bottom", "negation.a", "negation.b", "negation.c",
                    "negation.d"};
  if (!is_rrs(m)) {
    detail::skip_all(r, ids, "not a residuated relational system");
    return r;
  }
  if (!zero_absorbs(m, zero)) {
    detail::skip_all(r, ids, "zero is not absorbing");
    return r;
  }
  if (!is_reflexive(m.rel)) {
    detail::skip_all(r, ids, "relation is not reflexive");
    return r;
  }
  const auto& R = m.rel;
  const Element one = m.unit;
  const auto neg = [&](Element x) { return m.arrow(x, zero); };
  check<1>(r, "negation.zero_bottom", m.size, [&](const T1& t) { return R.holds(zero, t[0]); });
  {
    const Element n1 = neg(one);
    if (R.holds(zero, n1) && R.holds(n1, zero)) {
      r.add_holds("negation.a");
    } else {
      r.add_fails("negation.a", {});
    }
    const Element n0 = neg(zero);
    if (R.holds(one, n0) && R.holds(n0, one)) {
      r.add_holds("negation.b");
    } else {
      r.add_fails("negation.b", {});
    }
  }
  check<1>(r, "negation.c", m.size, [&](const T1& t) { return R.holds(t[0], neg(neg(t[0]))); });
  check<1>(r, "negation.d", m.size,
           [&](const T1& t) { return R.holds(m.mul(t[0], neg(t[0])), zero); });
  return r;
}

PropertyReport verify_antisym_zero_props(const Model& m) {
  const Element zero = zero_of(m, "verify_antisym_zero_props");
  PropertyReport r;
  const auto ids = {"negation.antisym.zero_arrow", "negation.antisym.constants",
                    "negation.antisym.contradiction"};
  if (!is_rrs(m) || !zero_absorbs(m, zero) || !is_reflexive(m.rel)) {
    detail::skip_all(r, ids, "not a reflexive residuated relational system with 0");
    return r;
  }
  if (!is_antisymmetric(m.rel)) {
    detail::skip_all(r, ids, "relation is not antisymmetric");
    return r;
  }
  check<1>(r, "negation.antisym.zero_arrow", m.size,
           [&](const T1& t) { return m.arrow(zero, t[0]) == m.unit; });
  if (m.arrow(zero, zero) == m.unit && m.arrow(m.unit, zero) == zero) {
    r.add_holds("negation.antisym.constants");
  } else {
    r.add_fails("negation.antisym.constants", {});
  }
  check<1>(r, "negation.antisym.contradiction", m.size,
           [&](const T1& t) { return m.mul(t[0], m.arrow(t[0], zero)) == zero; });
  return r;
}

PropertyReport verify_preorder_negation(const Model& m) {
  const Element zero = zero_of(m, "verify_preorder_negation");
  PropertyReport r;
  if (!is_preordered_rrs(m) || !zero_absorbs(m, zero)) {
    detail::skip_all(r,
                     {"negation.preorder.a", "negation.preorder.b", "negation.preorder.c",
                      "negation.preorder.d", "negation.preorder.e", "negation.preorder.f"},
                     "not a pre-ordered residuated system with absorbing 0");
    return r;
  }
  const auto& R = m.rel;
  const auto neg = [&](Element x) { return m.arrow(x, zero); };
  const auto to = [&](Element a, Element b) { return m.arrow(a, b); };
  check<2>(r, "negation.preorder.a", m.size, [&](const T2& t) {
    return !R.holds(t[0], t[1]) || R.holds(neg(t[1]), neg(t[0]));
  });
  check<1>(r, "negation.preorder.b", m.size, [&](const T1& t) {
    const Element x = t[0];
    const Element x1 = neg(x);
    const Element x2 = neg(x1);
    const Element x3 = neg(x2);
    return R.holds(x, x2) && R.holds(x1, x3) && R.holds(x3, x1);
  });
  check<2>(r, "negation.preorder.c", m.size, [&](const T2& t) {
    const auto [x, y] = t;
    const Element lhs = neg(m.mul(x, y));
    const Element rhs = to(x, neg(y));
    return R.holds(lhs, rhs) && R.holds(rhs, lhs);
  });
  check<2>(r, "negation.preorder.d", m.size, [&](const T2& t) {
    const auto [x, y] = t;
    const Element a = to(x, neg(y));
    const Element b = to(y, neg(x));
    return R.holds(a, b) && R.holds(b, a);
  });
  check<2>(r, "negation.preorder.e", m.size, [&](const T2& t) {
    const auto [x, y] = t;
    return R.holds(m.mul(to(x, y), neg(y)), neg(x));
  });
  check<2>(r, "negation.preorder.f", m.size, [&](const T2& t) {
    const auto [x, y] = t;
    return R.holds(to(x, y), to(neg(y), neg(x)));
  });
  return r;
}

std::optional<Element> double_negation_violation(const Model& m) {
  const Element zero = zero_of(m, "satisfies_double_negation");
  for (Element x = 0; x < m.size; ++x) {
    if (m.arrow(m.arrow(x, zero), zero) != x) return x;
  }
  return std::nullopt;
}

bool satisfies_double_negation(const Model& m) { return !double_negation_violation(m); }

PropertyReport verify_double_negation_props(const Model& m) {
  const Element zero = zero_of(m, "verify_double_negation_props");
  PropertyReport r;
  if (!is_preordered_rrs(m) || !zero_absorbs(m, zero)) {
    detail::skip_all(r, {"negation.double.i", "negation.double.ii"},
                     "not a pre-ordered residuated system with absorbing 0");
    return r;
  }
  if (!satisfies_double_negation(m)) {
    detail::skip_all(r, {"negation.double.i", "negation.double.ii"},
                     "law of double negation fails");
    return r;
  }
  const auto& R = m.rel;
  const auto neg = [&](Element x) { return m.arrow(x, zero); };
  check<2>(r, "negation.double.i", m.size, [&](const T2& t) {
    const auto [x, y] = t;
    const Element a = m.arrow(x, y);
    const Element b = neg(m.mul(x, neg(y)));
    return R.holds(a, b) && R.holds(b, a);
  });
  check<2>(r, "negation.double.ii", m.size, [&](const T2& t) {
    const auto [x, y] = t;
    return R.holds(m.arrow(neg(y), neg(x)), m.arrow(x, y));
  });
  return r;
}

}  // namespace rrs
