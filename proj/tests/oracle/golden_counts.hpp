#pragma once

// Model counts frozen from the brute-force census (print_census) before the
// pruned generator was compared against them.  Do not regenerate these from
// the library.

#include <cstdint>
#include <string_view>

namespace oracle {

struct GoldenCount {
  std::string_view model_class;
  int size;
  std::uint64_t labelled;
  std::uint64_t iso;
};

inline constexpr GoldenCount kGoldenCounts[] = {
    {"rrs", 1, 1, 1},
    {"preordered-rrs", 1, 1, 1},
    {"antisym-rrs", 1, 1, 1},
    {"rrs-with-0", 1, 1, 1},
    {"residuated-quasi-directoid", 1, 1, 1},
    {"pre-axioms-minus-g", 1, 1, 1},
    {"rrs", 2, 70, 35},
    {"preordered-rrs", 2, 66, 33},
    {"antisym-rrs", 2, 6, 3},
    {"rrs-with-0", 2, 36, 18},
    {"residuated-quasi-directoid", 2, 66, 33},
    {"pre-axioms-minus-g", 2, 128, 64},
    {"rrs", 3, 549369, 91606},
    {"preordered-rrs", 3, 533061, 88884},
    {"antisym-rrs", 3, 1992, 336},
    {"rrs-with-0", 3, 367362, 61227},
    {"residuated-quasi-directoid", 3, 537681, 89654},
    {"pre-axioms-minus-g", 3, 7971615, 1328724},
};

}  // namespace oracle
