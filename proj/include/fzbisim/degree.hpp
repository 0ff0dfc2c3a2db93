/*
 * Copyright 2026 the fzbisim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fzb {

/// A fuzzy degree in [0, 1], stored exactly as an integer count of 1e-9
/// units.  All comparisons and equalities throughout the code base are
/// therefore exact integer operations; no floating point is involved
/// anywhere in degree handling.
///
/// The textual form is a plain decimal with at most nine fractional
/// digits ("0", "0.7", "0.123456789", "1").  Values outside [0, 1] or
/// with more than nine fractional digits do not exist in this type and
/// are rejected by parse().
class Degree {
 public:
  /// Number of units that make up the degree 1.
  static constexpr std::uint32_t kScale = 1'000'000'000u;

  constexpr Degree() = default;

  static constexpr Degree from_units(std::uint32_t units) {
    return Degree(units);
  }
  static constexpr Degree zero() { return Degree(0); }
  static constexpr Degree one() { return Degree(kScale); }

  constexpr std::uint32_t units() const { return units_; }
  constexpr bool is_zero() const { return units_ == 0; }
  constexpr bool is_one() const { return units_ == kScale; }

  auto operator<=>(const Degree&) const = default;

  /// Parses a decimal in [0, 1] with at most nine fractional digits.
  /// Returns nullopt for anything else (signs, exponents, out-of-range
  /// values, more than nine fractional digits, trailing junk).
  static std::optional<Degree> parse(std::string_view text);

  /// Canonical decimal rendering: no trailing fractional zeros, no
  /// leading zeros in the integer part ("0", "1", "0.7").
  std::string str() const;

 private:
  explicit constexpr Degree(std::uint32_t units) : units_(units) {}

  std::uint32_t units_ = 0;
};

inline constexpr Degree min(Degree a, Degree b) { return a < b ? a : b; }
inline constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }

/// Goedel biresiduum: 1 if the degrees are equal, their minimum otherwise.
inline constexpr Degree biresiduum(Degree a, Degree b) {
  return a == b ? Degree::one() : min(a, b);
}

}  // namespace fzb
