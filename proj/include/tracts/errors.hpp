#pragma once

#include <stdexcept>
#include <string>

namespace tracts {

struct TractError : std::runtime_error {
  explicit TractError(const std::string& what) : std::runtime_error(what) {}
};

struct TractMismatchError : TractError {
  explicit TractMismatchError(const std::string& what) : TractError(what) {}
};

struct InfiniteTractError : TractError {
  explicit InfiniteTractError(const std::string& what) : TractError(what) {}
};

struct EnumLimitError : TractError {
  explicit EnumLimitError(const std::string& what) : TractError(what) {}
};

struct MorphismDomainError : TractError {
  explicit MorphismDomainError(const std::string& what) : TractError(what) {}
};

struct ValidationError : TractError {
  explicit ValidationError(const std::string& what) : TractError(what) {}
};

struct UnsupportedTractError : TractError {
  explicit UnsupportedTractError(const std::string& what) : TractError(what) {}
};

}  // namespace tracts
