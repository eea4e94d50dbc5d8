#pragma once

#include <stdexcept>
#include <string>

namespace packdom {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller handed us something that violates a documented precondition:
/// malformed files, out-of-range vertices, a set that is not a packing, a
/// graph that is not subcubic.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An internal assertion of the construction failed. The payload carries a
/// JSON dump of whatever state was available so the instance can be replayed.
class ConsistencyError : public Error {
 public:
  ConsistencyError(const std::string& what, std::string dump = {})
      : Error(what), dump_(std::move(dump)) {}

  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

/// An exponential search refused to run past its configured size cap.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace packdom
