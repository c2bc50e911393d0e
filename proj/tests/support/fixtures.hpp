#pragma once

#include <string>

#include "rrs/json_io.hpp"
#include "rrs/model.hpp"

namespace rrs::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(RRS_FIXTURE_DIR) + "/" + name + ".json";
}

inline Model fixture(const std::string& name) { return load_model(fixture_path(name)); }

}  // namespace rrs::testing
