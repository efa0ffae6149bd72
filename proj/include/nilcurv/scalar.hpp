#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace nilcurv {

/// Arbitrary-precision rational scalar backing the exact mode.
using Rational = boost::multiprecision::cpp_rational;

/// Default tolerance for approximate comparisons. Exact-mode comparisons
/// ignore it entirely.
inline constexpr double kDefaultTol = 1e-9;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr const char* mode_name = "float";

  static double from_int(long long v) { return static_cast<double>(v); }
  static double from_ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static bool is_zero(double v, double tol) { return std::fabs(v) <= tol; }

  static std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

  static std::optional<double> parse(std::string_view s) {
    // Accepts plain decimals and "num/den" fractions.
    std::string str(s);
    if (auto slash = str.find('/'); slash != std::string::npos) {
      try {
        std::size_t used = 0;
        double num = std::stod(str.substr(0, slash), &used);
        if (used != slash) return std::nullopt;
        double den = std::stod(str.substr(slash + 1), &used);
        if (used != str.size() - slash - 1 || den == 0.0) return std::nullopt;
        return num / den;
      } catch (...) {
        return std::nullopt;
      }
    }
    try {
      std::size_t used = 0;
      double v = std::stod(str, &used);
      if (used != str.size()) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* mode_name = "exact";

  static Rational from_int(long long v) { return Rational(v); }
  static Rational from_ratio(long long num, long long den) {
    return Rational(num) / Rational(den);
  }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  static bool is_zero(const Rational& v, double /*tol*/) { return v.is_zero(); }

  static std::string format(const Rational& v) { return v.str(); }

  static std::optional<Rational> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    try {
      return Rational(std::string(s));
    } catch (...) {
      return std::nullopt;
    }
  }
};

template <class S>
bool near(const S& a, const S& b, double tol) {
  return scalar_traits<S>::is_zero(a - b, tol);
}

template <class S>
double abs_d(const S& v) {
  return std::fabs(scalar_traits<S>::to_double(v));
}

}  // namespace nilcurv
