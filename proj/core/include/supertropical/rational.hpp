// Copyright 2026 The supertropical Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERTROPICAL_RATIONAL_HPP
#define SUPERTROPICAL_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supertropical {

namespace detail {
__extension__ typedef __int128 int128;
}  // namespace detail

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a shared immutable GMP rational. The
/// representation is canonical (lowest terms, positive denominator, small form
/// whenever it fits), so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) : num_(static_cast<std::int64_t>(n)) {}  // NOLINT(implicit)

  /// Throws std::invalid_argument on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(const mpq_class& q);

  /// Parses `[+-]digits` or `[+-]digits/digits`. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] bool is_small() const { return big_ == nullptr; }
  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t hash() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend Rational operator*(const Rational& a, std::int64_t k);
  friend Rational operator*(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_parts(detail::int128 num, detail::int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace supertropical

template <>
struct std::hash<supertropical::Rational> {
  std::size_t operator()(const supertropical::Rational& q) const noexcept { return q.hash(); }
};

#endif  // SUPERTROPICAL_RATIONAL_HPP
