#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csglab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Recipe or operation parameters outside their admissible range.
class ParameterViolation : public Error {
 public:
  using Error::Error;
};

/// A cost-sharing table fails one of the monotonicity / lower-bound / base-cost properties.
class SchemeViolationError : public Error {
 public:
  using Error::Error;
};

/// The game admits no feasible strategy profile.
class InfeasibleGame : public Error {
 public:
  using Error::Error;
};

class InfeasibleProfile : public Error {
 public:
  using Error::Error;
};

class InfeasibleFlow : public Error {
 public:
  using Error::Error;
};

class NotSeriesParallel : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class StepCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A proof-level invariant did not hold at run time. Always an implementation bug.
class InternalAssertion : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

/// A constructed instance disagrees with the closed-form values it is built to reproduce.
class SelfCheckFailed : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, documents, profiles).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Too many paths or profiles for exhaustive analysis.
class PathExplosion : public Error {
 public:
  PathExplosion(std::size_t cap, std::size_t count)
      : Error("path explosion: " + std::to_string(count) + " exceeds cap " + std::to_string(cap)),
        cap_(cap),
        count_(count) {}

  std::size_t cap() const noexcept { return cap_; }
  /// Number reached when the cap tripped (a lower bound on the true count).
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t cap_;
  std::size_t count_;
};

}  // namespace csglab
