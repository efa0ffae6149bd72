#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nilcurv {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct dimension_error : error {
  using error::error;
};

struct singular_error : error {
  using error::error;
};

/// Two routes that must agree (definition vs. closed form) disagreed beyond
/// tolerance. Usually signals an invalid input algebra.
struct consistency_error : error {
  using error::error;
};

/// A named family/parameter constraint failed.
struct constraint_error : error {
  explicit constraint_error(std::string name)
      : error("constraint violated: " + name), constraint(std::move(name)) {}
  std::string constraint;
};

struct invalid_algebra_error : error {
  explicit invalid_algebra_error(std::vector<std::string> v)
      : error(join(v)), violations(std::move(v)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid algebra";
    for (const auto& item : v) s += "; " + item;
    return s;
  }
};

struct parse_error : error {
  using error::error;
};

}  // namespace nilcurv
