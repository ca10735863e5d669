#pragma once

// Scalar types and precision control.
//
// Every numerical routine in the library is a template over the scalar type.
// Two instantiations are provided: `double` ("fast" mode) and `HighPrecision`,
// an MPFR-backed float whose precision is set per computation through a
// PrecisionScope.

#include <boost/multiprecision/mpfr.hpp>

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

namespace superosc {

using HighPrecision = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_high_precision_v = std::is_same_v<T, HighPrecision>;

/// Sets the working precision of HighPrecision values created inside the
/// scope and restores the previous value on exit.
///
/// MPFR default precision is process-wide in the Boost release this builds
/// against, so scopes must not be opened concurrently from different threads
/// with different digit counts.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10)
      : previous_(HighPrecision::default_precision()) {
    HighPrecision::default_precision(digits10);
  }
  ~PrecisionScope() { HighPrecision::default_precision(previous_); }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned previous_;
};

/// Significant decimal digits carried by T in the current context.
template <class T>
int working_digits() {
  if constexpr (is_high_precision_v<T>) {
    return static_cast<int>(HighPrecision::default_precision());
  } else {
    return std::numeric_limits<T>::digits10;
  }
}

/// Unit roundoff of T in the current context.
template <class T>
T machine_epsilon() {
  return std::numeric_limits<T>::epsilon();
}

template <class T>
T pi() {
  if constexpr (is_high_precision_v<T>) {
    HighPrecision out;
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
  } else {
    return T(3.14159265358979323846264338327950288L);
  }
}

/// 10^exponent in T.
template <class T>
T pow10(int exponent) {
  using std::pow;
  return pow(T(10), T(exponent));
}

/// Parses a decimal string ("1.5e-3", "-2") into T. The tokens "pi" and
/// "-pi" are accepted and evaluated at working precision.
template <class T>
T parse_real(const std::string& text);

/// Decimal representation that parses back to the identical value.
template <class T>
std::string to_decimal_string(const T& value);

/// Converts between scalar types. Widening is exact; narrowing rounds.
template <class To, class From>
To scalar_cast(const From& value) {
  if constexpr (std::is_same_v<To, From>) {
    return value;
  } else if constexpr (is_high_precision_v<From>) {
    return static_cast<To>(value.template convert_to<long double>());
  } else {
    return To(value);
  }
}

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

}  // namespace superosc

namespace Eigen {

// Boost's own eigen.hpp predates Eigen 3.4 and lacks infinity()/quiet_NaN().
template <>
struct NumTraits<superosc::HighPrecision>
    : GenericNumTraits<superosc::HighPrecision> {
  using Self = superosc::HighPrecision;
  using Real = Self;
  using NonInteger = Self;
  using Literal = double;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static Self epsilon() { return std::numeric_limits<Self>::epsilon(); }
  static Self dummy_precision() { return 1000 * epsilon(); }
  static Self highest() { return (std::numeric_limits<Self>::max)(); }
  static Self lowest() { return std::numeric_limits<Self>::lowest(); }
  static Self infinity() { return std::numeric_limits<Self>::infinity(); }
  static Self quiet_NaN() { return std::numeric_limits<Self>::quiet_NaN(); }
  static int digits10() {
    return static_cast<int>(Self::default_precision());
  }
  static int digits() { return std::numeric_limits<Self>::digits; }
  static int max_digits10() { return digits10() + 2; }
};

}  // namespace Eigen
