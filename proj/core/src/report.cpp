#include "rrs/report.hpp"

#include <algorithm>

namespace rrs {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

void PropertyReport::add_holds(std::string id) {
  items_.push_back({std::move(id), Status::holds, {}, {}});
}

void PropertyReport::add_fails(std::string id, std::vector<Element> witness) {
  items_.push_back({std::move(id), Status::fails, std::move(witness), {}});
}

void PropertyReport::add_not_applicable(std::string id, std::string reason) {
  items_.push_back({std::move(id), Status::not_applicable, {}, std::move(reason)});
}

void PropertyReport::add(StatementResult r) { items_.push_back(std::move(r)); }

void PropertyReport::append(const PropertyReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

const StatementResult* PropertyReport::find(std::string_view id) const noexcept {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [&](const StatementResult& r) { return r.id == id; });
  return it == items_.end() ? nullptr : &*it;
}

Status PropertyReport::status(std::string_view id) const {
  const auto* r = find(id);
  if (r == nullptr) throw Error("report has no statement '" + std::string(id) + "'");
  return r->status;
}

bool PropertyReport::ok() const noexcept { return first_failure() == nullptr; }

bool PropertyReport::all_hold() const noexcept {
  return std::all_of(items_.begin(), items_.end(),
                     [](const StatementResult& r) { return r.status == Status::holds; });
}

bool PropertyReport::any_not_applicable() const noexcept {
  return std::any_of(items_.begin(), items_.end(),
                     [](const StatementResult& r) { return r.status == Status::not_applicable; });
}

const StatementResult* PropertyReport::first_failure() const noexcept {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [](const StatementResult& r) { return r.status == Status::fails; });
  return it == items_.end() ? nullptr : &*it;
}

}  // namespace rrs
