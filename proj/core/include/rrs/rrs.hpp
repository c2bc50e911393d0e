#pragma once

// Umbrella header for the rrs workbench library.

#include <string_view>

#include "rrs/canonical.hpp"
#include "rrs/directoid.hpp"
#include "rrs/json_io.hpp"
#include "rrs/model.hpp"
#include "rrs/negation.hpp"
#include "rrs/property.hpp"
#include "rrs/relation.hpp"
#include "rrs/report.hpp"
#include "rrs/search.hpp"
#include "rrs/statements.hpp"

namespace rrs {

std::string_view version() noexcept;

}  // namespace rrs
