#pragma once

// Lexicographic tuple scans shared by the statement checkers.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rrs/relation.hpp"
#include "rrs/report.hpp"

namespace rrs::detail {

template <std::size_t K, class Pred>
std::optional<std::array<Element, K>> first_violation(std::size_t n, Pred&& holds) {
  std::array<Element, K> t{};
  while (true) {
    if (!holds(t)) return t;
    std::size_t i = K;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if constexpr (K == 0) return std::nullopt;
  }
}

template <std::size_t K>
void record(PropertyReport& report, std::string id,
            const std::optional<std::array<Element, K>>& violation) {
  if (violation) {
    report.add_fails(std::move(id), std::vector<Element>(violation->begin(), violation->end()));
  } else {
    report.add_holds(std::move(id));
  }
}

template <std::size_t K, class Pred>
void check(PropertyReport& report, std::string id, std::size_t n, Pred&& holds) {
  record<K>(report, std::move(id), first_violation<K>(n, std::forward<Pred>(holds)));
}

inline void skip_all(PropertyReport& report, std::initializer_list<const char*> ids,
                     const std::string& reason) {
  for (const char* id : ids) report.add_not_applicable(id, reason);
}

}  // namespace rrs::detail
