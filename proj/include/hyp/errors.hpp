#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  enum class Kind { Disconnected, DuplicateEdge, Loop, OutOfRange, Parse };

  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Raised when the number of geodesics between two points exceeds the cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t cap)
      : Error("geodesic count exceeds cap " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

/// A computed hyperbolicity value fell off the quarter grid.
class GridViolation : public Error {
 public:
  using Error::Error;
};

class InvalidProfile : public Error {
 public:
  using Error::Error;
};

}  // namespace hyp
