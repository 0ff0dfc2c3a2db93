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
#include "fzbisim/degree.hpp"

namespace fzb {

std::optional<Degree> Degree::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  std::size_t pos = 0;
  std::uint64_t int_part = 0;
  std::size_t int_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    int_part = int_part * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (int_part > 1) return std::nullopt;  // anything above 1 is out of range
    ++int_digits;
    ++pos;
  }
  if (int_digits == 0) return std::nullopt;

  std::uint32_t frac_units = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t frac_digits = 0;
    std::uint32_t place = kScale / 10;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (++frac_digits > 9) return std::nullopt;
      frac_units += static_cast<std::uint32_t>(text[pos] - '0') * place;
      place /= 10;
      ++pos;
    }
    if (frac_digits == 0) return std::nullopt;  // lone trailing dot
  }
  if (pos != text.size()) return std::nullopt;

  std::uint64_t units = int_part * kScale + frac_units;
  if (units > kScale) return std::nullopt;
  return Degree::from_units(static_cast<std::uint32_t>(units));
}

std::string Degree::str() const {
  if (units_ == kScale) return "1";
  if (units_ == 0) return "0";
  std::string frac(9, '0');
  std::uint32_t rest = units_;
  for (int i = 8; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + rest % 10);
    rest /= 10;
  }
  while (frac.back() == '0') frac.pop_back();
  return "0." + frac;
}

}  // namespace fzb
