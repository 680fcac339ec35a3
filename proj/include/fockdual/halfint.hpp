#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fockdual {

/// Rational with denominator 1 or 2, stored as twice its value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt from_int(int n) { return HalfInt{2 * n}; }
  static constexpr HalfInt from_twice(int t) { return HalfInt{t}; }

  bool is_integral() const { return twice % 2 == 0; }
  int as_int() const {
    if (!is_integral()) throw std::domain_error("half-integer used as integer");
    return twice / 2;
  }
  double value() const { return twice / 2.0; }

  HalfInt operator-() const { return HalfInt{-twice}; }
  HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
  HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
  HalfInt abs() const { return HalfInt{std::abs(twice)}; }

  auto operator<=>(const HalfInt&) const = default;

  /// "a/b" in lowest terms, b in {1, 2}.
  std::string str() const {
    if (is_integral()) return std::to_string(twice / 2) + "/1";
    return std::to_string(twice) + "/2";
  }

  /// Parses "a/b" with b in {1, 2}, or a bare integer.
  static HalfInt parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_int(std::stoi(s));
    int num = std::stoi(s.substr(0, slash));
    int den = std::stoi(s.substr(slash + 1));
    if (den == 1) return from_int(num);
    if (den == 2) return from_twice(num);
    throw std::domain_error("denominator must be 1 or 2: " + s);
  }
};

}  // namespace fockdual
