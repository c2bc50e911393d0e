#include "rrs/relation.hpp"

#include <string>

namespace rrs {

namespace {

void check_size(std::size_t size) {
  if (size == 0 || size > kMaxUniverse) {
    throw Error("carrier size must be in 1.." + std::to_string(kMaxUniverse) + ", got " +
                std::to_string(size));
  }
}

}  // namespace

std::uint64_t full_mask(std::size_t size) noexcept {
  return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

SubsetMask::SubsetMask(std::size_t size, std::uint64_t bits) : size_(size), bits_(bits) {
  check_size(size);
  if ((bits & ~full_mask(size)) != 0) {
    throw Error("subset mask has members outside the carrier");
  }
}

SubsetMask SubsetMask::full(std::size_t size) { return SubsetMask(size, full_mask(size)); }

SubsetMask SubsetMask::of(std::size_t size, std::initializer_list<Element> elements) {
  return of(size, std::span<const Element>(elements.begin(), elements.size()));
}

SubsetMask SubsetMask::of(std::size_t size, std::span<const Element> elements) {
  SubsetMask m(size);
  for (Element e : elements) m.insert(e);
  return m;
}

void SubsetMask::insert(Element x) {
  if (x >= size_) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  bits_ |= std::uint64_t{1} << x;
}

void SubsetMask::erase(Element x) {
  if (x >= size_) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  bits_ &= ~(std::uint64_t{1} << x);
}

std::vector<Element> SubsetMask::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(b)));
  }
  return out;
}

BinRel::BinRel(std::size_t size) : rows_(size, 0) { check_size(size); }

BinRel BinRel::full(std::size_t size) {
  BinRel r(size);
  for (auto& row : r.rows_) row = full_mask(size);
  return r;
}

BinRel BinRel::identity(std::size_t size) {
  BinRel r(size);
  for (std::size_t x = 0; x < size; ++x) r.rows_[x] = std::uint64_t{1} << x;
  return r;
}

BinRel BinRel::from_pairs(std::size_t size,
                          std::initializer_list<std::pair<Element, Element>> pairs) {
  BinRel r(size);
  for (auto [x, y] : pairs) r.set(x, y);
  return r;
}

BinRel BinRel::from_matrix(std::size_t size, std::span<const int> entries) {
  BinRel r(size);
  if (entries.size() != size * size) {
    throw Error("relation matrix needs " + std::to_string(size * size) + " entries, got " +
                std::to_string(entries.size()));
  }
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      int v = entries[x * size + y];
      if (v != 0 && v != 1) throw Error("relation entries must be 0 or 1");
      if (v == 1) r.rows_[x] |= std::uint64_t{1} << y;
    }
  }
  return r;
}

void BinRel::set(Element x, Element y, bool value) {
  if (x >= size() || y >= size()) throw std::out_of_range("relation index out of range");
  if (value) {
    rows_[x] |= std::uint64_t{1} << y;
  } else {
    rows_[x] &= ~(std::uint64_t{1} << y);
  }
}

void BinRel::set_row(Element x, std::uint64_t bits) {
  if (x >= size()) throw std::out_of_range("relation index out of range");
  rows_[x] = bits & full_mask(size());
}

std::uint64_t BinRel::column(Element y) const noexcept {
  std::uint64_t col = 0;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    col |= ((rows_[x] >> y) & 1U) << x;
  }
  return col;
}

bool is_reflexive(const BinRel& r) noexcept {
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (!r.holds(static_cast<Element>(x), static_cast<Element>(x))) return false;
  }
  return true;
}

std::optional<std::array<Element, 3>> transitivity_violation(const BinRel& r) {
  const auto n = static_cast<Element>(r.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!r.holds(x, y)) continue;
      // every z reachable from y must be reachable from x
      std::uint64_t missing = r.row(y) & ~r.row(x);
      if (missing != 0) {
        return std::array<Element, 3>{x, y, static_cast<Element>(std::countr_zero(missing))};
      }
    }
  }
  return std::nullopt;
}

bool is_transitive(const BinRel& r) noexcept {
  for (std::size_t x = 0; x < r.size(); ++x) {
    std::uint64_t reach = 0;
    for (std::uint64_t b = r.row(static_cast<Element>(x)); b != 0; b &= b - 1) {
      reach |= r.row(static_cast<Element>(std::countr_zero(b)));
    }
    if ((reach & ~r.row(static_cast<Element>(x))) != 0) return false;
  }
  return true;
}

bool is_antisymmetric(const BinRel& r) noexcept {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = x + 1; y < r.size(); ++y) {
      if (r.holds(static_cast<Element>(x), static_cast<Element>(y)) &&
          r.holds(static_cast<Element>(y), static_cast<Element>(x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_preorder(const BinRel& r) noexcept { return is_reflexive(r) && is_transitive(r); }

bool is_partial_order(const BinRel& r) noexcept { return is_preorder(r) && is_antisymmetric(r); }

bool incomparable(const BinRel& r, Element x, Element y) {
  if (x >= r.size() || y >= r.size()) throw std::out_of_range("element index out of range");
  return !r.holds(x, y) && !r.holds(y, x);
}

SubsetMask star(const BinRel& r, const SubsetMask& x_set) {
  if (x_set.size() != r.size()) throw Error("subset and relation sizes differ");
  std::uint64_t acc = full_mask(r.size());
  for (Element x : x_set.elements()) acc &= r.row(x);
  return SubsetMask(r.size(), acc);
}

SubsetMask dagger(const BinRel& r, const SubsetMask& y_set) {
  if (y_set.size() != r.size()) throw Error("subset and relation sizes differ");
  std::uint64_t acc = full_mask(r.size());
  for (Element y : y_set.elements()) acc &= r.column(y);
  return SubsetMask(r.size(), acc);
}

bool is_polarity_pair(const BinRel& r, std::size_t max_size) {
  const std::size_t n = r.size();
  if (n > max_size) {
    throw Error("polarity check is exhaustive over 4^n subset pairs; n=" + std::to_string(n) +
                " exceeds cap " + std::to_string(max_size));
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint64_t> stars(subsets);
  std::vector<std::uint64_t> daggers(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) {
    SubsetMask m(n, s);
    stars[s] = star(r, m).bits();
    daggers[s] = dagger(r, m).bits();
  }
  for (std::uint64_t x1 = 0; x1 < subsets; ++x1) {
    for (std::uint64_t x2 = 0; x2 < subsets; ++x2) {
      bool lhs = (x1 & ~daggers[x2]) == 0;
      bool rhs = (x2 & ~stars[x1]) == 0;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<std::array<Element, 2>> galois_violation(const MapTable& f, const MapTable& g,
                                                       const BinRel& r) {
  const std::size_t n = r.size();
  if (f.size() != n || g.size() != n) throw Error("map tables must match the relation size");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (f[x] >= n || g[y] >= n) throw Error("map image outside the carrier");
      bool lhs = r.holds(static_cast<Element>(x), g[y]);
      bool rhs = r.holds(f[x], static_cast<Element>(y));
      if (lhs != rhs) return std::array<Element, 2>{static_cast<Element>(x),
                                                    static_cast<Element>(y)};
    }
  }
  return std::nullopt;
}

bool is_galois_connection(const MapTable& f, const MapTable& g, const BinRel& r) {
  return !galois_violation(f, g, r).has_value();
}

bool is_residuated_map_pair(const MapTable& f, const MapTable& g, const BinRel& r1,
                            const BinRel& r2) {
  const std::size_t b_size = r1.size();
  const std::size_t c_size = r2.size();
  if (f.size() != b_size || g.size() != c_size) {
    throw Error("residuated pair: f must be defined on B and g on C");
  }
  for (Element img : f) {
    if (img >= c_size) throw Error("residuated pair: f maps outside C");
  }
  for (Element img : g) {
    if (img >= b_size) throw Error("residuated pair: g maps outside B");
  }
  for (std::size_t b = 0; b < b_size; ++b) {
    for (std::size_t c = 0; c < c_size; ++c) {
      if (r2.holds(f[b], static_cast<Element>(c)) != r1.holds(static_cast<Element>(b), g[c])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rrs
