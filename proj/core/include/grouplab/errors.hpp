#ifndef GROUPLAB_ERRORS_HPP
#define GROUPLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grouplab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cycle-notation parsing
struct MalformedCycle : Error { using Error::Error; };
struct PointRepeated : Error { using Error::Error; };
struct PointOutOfRange : Error { using Error::Error; };

// permutation / group arithmetic
struct DegreeMismatch : Error { using Error::Error; };

struct CapExceeded : Error {
  uint64_t order;
  explicit CapExceeded(uint64_t ord, const std::string& what)
      : Error(what), order(ord) {}
};

struct NotInAmbient : Error { using Error::Error; };
struct SeriesTooLong : Error { using Error::Error; };
struct PrimeDoesNotDivide : Error { using Error::Error; };
struct IndexTooLarge : Error { using Error::Error; };
struct RadicalNotSubgroup : Error { using Error::Error; };

// cycle-type combinatorics
struct OddPermutation : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };
struct NoSuitablePrime : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };

// group construction
struct BadSpec : Error { using Error::Error; };
struct UnsupportedParameter : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };

// graphs
struct VertexUniverseMismatch : Error { using Error::Error; };

// harness / cli
struct UnknownCheck : Error { using Error::Error; };

}  // namespace grouplab

#endif
