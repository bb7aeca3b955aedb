#pragma once

#include <string>

namespace tracts {

// Three-valued outcome for properties that cannot always be decided
// exhaustively. Refuted always carries a checkable witness description;
// Unknown carries the bound that was searched.
struct PropertyVerdict {
  enum class Status { Proven, Refuted, Unknown };

  Status status = Status::Unknown;
  std::string witness;
  std::string search_bound;

  static PropertyVerdict proven(std::string bound = {}) {
    return {Status::Proven, {}, std::move(bound)};
  }
  static PropertyVerdict refuted(std::string w) { return {Status::Refuted, std::move(w), {}}; }
  static PropertyVerdict unknown(std::string bound) {
    return {Status::Unknown, {}, std::move(bound)};
  }

  bool proven_p() const { return status == Status::Proven; }
  bool refuted_p() const { return status == Status::Refuted; }
  bool unknown_p() const { return status == Status::Unknown; }
};

std::string to_string(PropertyVerdict::Status s);

}  // namespace tracts
