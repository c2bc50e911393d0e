#pragma once

// JSON encoding of models, relations and reports.
//
// Model:    {"size": n, "unit": u, "zero": z|null, "mul": [n*n], "arrow": [n*n],
//            "rel": [n*n of 0/1], "join": [n*n]|null}     (row-major)
// Relation: {"size": n, "rel": [n*n of 0/1]}
// Subsets are sorted index arrays.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "rrs/model.hpp"
#include "rrs/report.hpp"

namespace rrs {

nlohmann::json to_json(const Model& m);
nlohmann::json to_json(const BinRel& r);
nlohmann::json to_json(const SubsetMask& s);
nlohmann::json to_json(const PropertyReport& report);

/// Throws Error with a diagnostic on missing fields, wrong types or
/// out-of-range entries.
Model model_from_json(const nlohmann::json& j);
BinRel relation_from_json(const nlohmann::json& j);
SubsetMask subset_from_json(std::size_t size, const nlohmann::json& j);

Model load_model(const std::filesystem::path& path);
BinRel load_relation(const std::filesystem::path& path);

}  // namespace rrs
