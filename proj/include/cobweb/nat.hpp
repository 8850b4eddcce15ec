#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cobweb {

// Arbitrary-precision integers. `Nat` is used where a value is a count and
// therefore never negative; `Int` where signs are meaningful (Möbius values,
// determinants, polynomial coefficients). Both share one backend so they mix
// freely in arithmetic.
using Int = boost::multiprecision::cpp_int;
using Nat = boost::multiprecision::cpp_int;

inline constexpr const char* kVersion = "0.1.0";

// Thrown when an operation's desk-scale guard would be exceeded.
class guard_exceeded : public std::runtime_error {
 public:
  guard_exceeded(const std::string& what_guard, std::string limit, std::string actual)
      : std::runtime_error(what_guard + " exceeds guard (limit " + limit + ", got " + actual + ")"),
        limit_(std::move(limit)),
        actual_(std::move(actual)) {}

  const std::string& limit() const noexcept { return limit_; }
  const std::string& actual() const noexcept { return actual_; }

 private:
  std::string limit_;
  std::string actual_;
};

// Whether desk-scale guards are enforced.
enum class Limits { enforced, lifted };

template <typename Value, typename Bound>
void check_guard(Limits limits, const char* what, const Value& actual, const Bound& limit) {
  if (limits == Limits::enforced && actual > limit) {
    throw guard_exceeded(what, Int(limit).str(), Int(actual).str());
  }
}

// Division that must be exact. A nonzero remainder means an arithmetic bug,
// not bad input, hence logic_error.
inline Nat exact_div(const Nat& numerator, const Nat& denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  Nat quotient;
  Nat remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: inexact division " + numerator.str() + " / " +
                           denominator.str());
  }
  return quotient;
}

inline std::string to_string(const Int& value) { return value.str(); }

}  // namespace cobweb
