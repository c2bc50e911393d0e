#include "rrs/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rrs {

std::vector<std::uint8_t> serialize(const Model& m) {
  const std::size_t n = m.size;
  std::vector<std::uint8_t> key;
  key.reserve(5 + 4 * n * n);
  key.push_back(static_cast<std::uint8_t>(n));
  key.push_back(m.unit);
  key.push_back(m.zero ? 1 : 0);
  key.push_back(m.zero.value_or(0));
  key.push_back(m.join ? 1 : 0);
  for (Element e : m.mul.entries()) key.push_back(e);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) key.push_back(m.rel.holds(x, y) ? 1 : 0);
  }
  if (m.join) {
    for (Element e : m.join->entries()) key.push_back(e);
  }
  for (Element e : m.arrow.entries()) key.push_back(e);
  return key;
}

Model permute(const Model& m, std::span<const Element> perm) {
  const std::size_t n = m.size;
  if (perm.size() != n) throw Error("permute: permutation size mismatch");
  const auto relabel = [&](const OpTable& t) {
    OpTable out(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) out.set(perm[x], perm[y], perm[t(x, y)]);
    }
    return out;
  };
  Model out;
  out.size = n;
  out.unit = perm[m.unit];
  if (m.zero) out.zero = perm[*m.zero];
  out.mul = relabel(m.mul);
  out.arrow = relabel(m.arrow);
  if (m.join) out.join = relabel(*m.join);
  out.rel = BinRel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m.rel.holds(x, y)) out.rel.set(perm[x], perm[y]);
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void check_canonical_size(std::size_t n) {
  if (n > kMaxCanonicalSize) {
    throw Error("canonicalize: size " + std::to_string(n) + " exceeds " +
                std::to_string(kMaxCanonicalSize));
  }
}

}  // namespace

CanonicalForm canonicalize(const Model& m) {
  check_canonical_size(m.size);
  CanonicalForm best{serialize(m)};
  for (const auto& p : all_permutations(m.size)) {
    auto key = serialize(permute(m, p));
    if (key < best.key) best.key = std::move(key);
  }
  return best;
}

Model canonical_model(const Model& m) {
  check_canonical_size(m.size);
  Model best = m;
  auto best_key = serialize(m);
  for (const auto& p : all_permutations(m.size)) {
    Model candidate = permute(m, p);
    auto key = serialize(candidate);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return best;
}

bool isomorphic(const Model& a, const Model& b) {
  return a.size == b.size && canonicalize(a) == canonicalize(b);
}

}  // namespace rrs
