#include "rrs/model.hpp"

#include <string>

#include "scan.hpp"

namespace rrs {

using detail::check;
using T1 = std::array<Element, 1>;
using T2 = std::array<Element, 2>;
using T3 = std::array<Element, 3>;

OpTable::OpTable(std::size_t size, Element fill) : size_(size), entries_(size * size, fill) {
  if (size == 0 || size > kMaxUniverse) throw Error("operation table size out of range");
  if (fill >= size) throw Error("operation table fill value outside the carrier");
}

OpTable OpTable::from_entries(std::size_t size, std::span<const int> entries) {
  if (entries.size() != size * size) {
    throw Error("operation table needs " + std::to_string(size * size) + " entries, got " +
                std::to_string(entries.size()));
  }
  OpTable t(size);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || static_cast<std::size_t>(entries[i]) >= size) {
      throw Error("operation table entry " + std::to_string(entries[i]) +
                  " outside the carrier of size " + std::to_string(size));
    }
    t.entries_[i] = static_cast<Element>(entries[i]);
  }
  return t;
}

void OpTable::set(Element x, Element y, Element value) {
  if (x >= size_ || y >= size_ || value >= size_) {
    throw std::out_of_range("operation table index or value out of range");
  }
  entries_[x * size_ + y] = value;
}

void Model::validate_shape() const {
  if (size == 0 || size > kMaxUniverse) throw Error("model size out of range");
  if (mul.size() != size) throw Error("multiplication table has the wrong size");
  if (arrow.size() != size) throw Error("residuum table has the wrong size");
  if (rel.size() != size) throw Error("relation has the wrong size");
  if (unit >= size) throw Error("unit outside the carrier");
  if (zero && *zero >= size) throw Error("zero outside the carrier");
  if (join && join->size() != size) throw Error("join table has the wrong size");
}

bool is_commutative_monoid(const OpTable& mul, Element unit) noexcept {
  const std::size_t n = mul.size();
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    if (mul(unit, ex) != ex || mul(ex, unit) != ex) return false;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (mul(ex, static_cast<Element>(y)) != mul(static_cast<Element>(y), ex)) return false;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = mul(static_cast<Element>(x), static_cast<Element>(y));
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(xy, static_cast<Element>(z)) !=
            mul(static_cast<Element>(x), mul(static_cast<Element>(y), static_cast<Element>(z)))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool satisfies_residuation(const Model& m) noexcept {
  const std::size_t n = m.size;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      const Element yz = m.arrow(static_cast<Element>(y), static_cast<Element>(z));
      for (std::size_t x = 0; x < n; ++x) {
        const Element xy = m.mul(static_cast<Element>(x), static_cast<Element>(y));
        if (m.rel.holds(xy, static_cast<Element>(z)) != m.rel.holds(static_cast<Element>(x), yz)) {
          return false;
        }
      }
    }
  }
  return true;
}

PropertyReport check_commutative_monoid(const Model& m) {
  PropertyReport r;
  const auto& mul = m.mul;
  check<3>(r, "monoid.associative", m.size,
           [&](const T3& t) { return mul(mul(t[0], t[1]), t[2]) == mul(t[0], mul(t[1], t[2])); });
  check<2>(r, "monoid.commutative", m.size,
           [&](const T2& t) { return mul(t[0], t[1]) == mul(t[1], t[0]); });
  check<1>(r, "monoid.unit", m.size, [&](const T1& t) {
    return mul(m.unit, t[0]) == t[0] && mul(t[0], m.unit) == t[0];
  });
  return r;
}

PropertyReport check_unit_top(const Model& m) {
  PropertyReport r;
  check<1>(r, "rrs.unit_top", m.size, [&](const T1& t) { return m.rel.holds(t[0], m.unit); });
  return r;
}

PropertyReport check_residuation(const Model& m) {
  PropertyReport r;
  check<3>(r, "rrs.residuation", m.size, [&](const T3& t) {
    const auto [x, y, z] = t;
    return m.rel.holds(m.mul(x, y), z) == m.rel.holds(x, m.arrow(y, z));
  });
  return r;
}

bool is_rrs(const Model& m) {
  return is_commutative_monoid(m.mul, m.unit) && check_unit_top(m).all_hold() &&
         satisfies_residuation(m);
}

SubsetMask upper_cone(const Model& m, Element a, Element b) {
  if (a >= m.size || b >= m.size) throw std::out_of_range("upper_cone: element out of range");
  return SubsetMask(m.size, m.rel.row(a) & m.rel.row(b));
}

SubsetMask supremal_elements(const Model& m, const SubsetMask& z_set) {
  if (z_set.empty()) throw PreconditionError("supremal_elements: Z must be nonempty");
  if (z_set.size() != m.size) throw Error("supremal_elements: subset size mismatch");
  std::uint64_t bounds = full_mask(m.size);
  for (Element z : z_set.elements()) bounds &= m.rel.row(z);
  SubsetMask out(m.size);
  for (Element k : SubsetMask(m.size, bounds).elements()) {
    const std::uint64_t others = bounds & ~(std::uint64_t{1} << k);
    if ((others & ~m.rel.row(k)) == 0) out.insert(k);
  }
  return out;
}

SubsetMask supremal_elements_for_pair(const Model& m, Element a, Element b) {
  const SubsetMask cone = upper_cone(m, a, b);
  SubsetMask out(m.size);
  for (Element w : cone.elements()) {
    bool ok = true;
    for (Element z : cone.elements()) {
      if (z != w && !m.rel.holds(w, z)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(w);
  }
  return out;
}

PropertyReport verify_basic_props(const Model& m) {
  PropertyReport r;
  if (!is_rrs(m)) {
    detail::skip_all(r, {"rrs.basic.a", "rrs.basic.b", "rrs.basic.c", "rrs.basic.d", "rrs.basic.e"},
                     "not a residuated relational system");
    return r;
  }
  const Element one = m.unit;
  check<2>(r, "rrs.basic.a", m.size,
           [&](const T2& t) { return m.arrow(t[0], t[1]) != one || m.rel.holds(t[0], t[1]); });
  check<1>(r, "rrs.basic.b", m.size,
           [&](const T1& t) { return m.rel.holds(t[0], m.arrow(one, one)); });
  check<1>(r, "rrs.basic.c", m.size,
           [&](const T1& t) { return m.rel.holds(one, m.arrow(t[0], one)); });
  check<3>(r, "rrs.basic.d", m.size, [&](const T3& t) {
    const auto [x, y, z] = t;
    return m.arrow(x, y) != one || m.rel.holds(m.mul(z, x), y);
  });
  check<2>(r, "rrs.basic.e", m.size,
           [&](const T2& t) { return m.rel.holds(t[0], m.arrow(t[1], one)); });
  return r;
}

PropertyReport verify_antisym_props(const Model& m) {
  PropertyReport r;
  if (!is_rrs(m)) {
    detail::skip_all(r, {"rrs.antisym.i", "rrs.antisym.ii"}, "not a residuated relational system");
    return r;
  }
  if (!is_antisymmetric(m.rel)) {
    detail::skip_all(r, {"rrs.antisym.i", "rrs.antisym.ii"}, "relation is not antisymmetric");
    return r;
  }
  check<2>(r, "rrs.antisym.i", m.size, [&](const T2& t) {
    return m.rel.holds(t[0], t[1]) == (m.arrow(t[0], t[1]) == m.unit);
  });
  if (!is_reflexive(m.rel)) {
    r.add_not_applicable("rrs.antisym.ii", "relation is not reflexive");
    return r;
  }
  check<2>(r, "rrs.antisym.ii", m.size, [&](const T2& t) {
    const Element xy = m.mul(t[0], t[1]);
    return m.rel.holds(xy, t[1]) && m.rel.holds(xy, t[0]);
  });
  return r;
}

PropertyReport verify_reflexive_props(const Model& m) {
  PropertyReport r;
  const auto ids = {"rrs.reflexive.a", "rrs.reflexive.b", "rrs.reflexive.c", "rrs.reflexive.d",
                    "rrs.reflexive.e"};
  if (!is_rrs(m)) {
    detail::skip_all(r, ids, "not a residuated relational system");
    return r;
  }
  if (!is_reflexive(m.rel)) {
    detail::skip_all(r, ids, "relation is not reflexive");
    return r;
  }
  const Element one = m.unit;
  const auto& R = m.rel;
  check<1>(r, "rrs.reflexive.a", m.size,
           [&](const T1& t) { return R.holds(one, m.arrow(t[0], t[0])); });
  check<2>(r, "rrs.reflexive.b", m.size, [&](const T2& t) {
    return R.holds(m.mul(m.arrow(t[0], t[1]), t[0]), t[1]);
  });
  check<2>(r, "rrs.reflexive.c", m.size,
           [&](const T2& t) { return R.holds(t[0], m.arrow(t[1], m.mul(t[0], t[1]))); });
  check<1>(r, "rrs.reflexive.d", m.size, [&](const T1& t) {
    const Element ox = m.arrow(one, t[0]);
    return R.holds(t[0], ox) && R.holds(ox, t[0]);
  });
  check<2>(r, "rrs.reflexive.e", m.size, [&](const T2& t) {
    return R.holds(t[0], m.arrow(m.arrow(t[0], t[1]), t[1]));
  });
  return r;
}

}  // namespace rrs
