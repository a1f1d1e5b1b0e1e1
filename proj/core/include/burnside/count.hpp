#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace burnside {

/// Exact arbitrary-precision integer. Every set size, fixed-point count and
/// orbit count in the library is a Count; fixed-width arithmetic never
/// touches them.
using Count = boost::multiprecision::cpp_int;

/// Bad arguments: a violated precondition that the caller can fix.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact enumeration would visit more elements than the configured cap.
/// Oracles are exact or absent, so this is raised instead of sampling.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction did not (e.g. |G| failed to
/// divide a Burnside fixed-point sum). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// base^exp over Count.
Count power(const Count& base, std::uint64_t exp);

/// numerator / denominator, throwing InternalError unless the division is
/// exact. `what` names the identity being relied upon.
Count exact_divide(const Count& numerator, const Count& denominator,
                   const std::string& what);

inline std::string to_decimal(const Count& value) { return value.str(); }

}  // namespace burnside
