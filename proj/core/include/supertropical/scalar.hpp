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

#ifndef SUPERTROPICAL_SCALAR_HPP
#define SUPERTROPICAL_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "supertropical/rational.hpp"

namespace supertropical {

enum class Layer : std::uint8_t { zero, tangible, ghost };

/// Element of the supertropical semifield over Q in logarithmic notation.
///
/// Addition is max with ties becoming ghosts, multiplication adds values.
/// The additive identity is `zero()` (standing for -inf) and the
/// multiplicative identity is `one()` = tangible 0.
class Scalar {
 public:
  Scalar() = default;  // zero

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return tangible(0); }
  static Scalar tangible(Rational v) { return Scalar(Layer::tangible, std::move(v)); }
  static Scalar ghost(Rational v) { return Scalar(Layer::ghost, std::move(v)); }

  [[nodiscard]] Layer layer() const { return layer_; }
  [[nodiscard]] bool is_zero() const { return layer_ == Layer::zero; }
  [[nodiscard]] bool is_tangible() const { return layer_ == Layer::tangible; }
  [[nodiscard]] bool is_ghost() const { return layer_ == Layer::ghost; }
  /// Member of G_0 (ghost or zero).
  [[nodiscard]] bool is_ghost0() const { return layer_ != Layer::tangible; }
  /// Member of T_0 (tangible or zero).
  [[nodiscard]] bool is_tangible0() const { return layer_ != Layer::ghost; }

  /// Finite value; must not be called on zero.
  [[nodiscard]] const Rational& value() const;

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t hash() const;

 private:
  Scalar(Layer l, Rational v) : layer_(l), value_(std::move(v)) {}

  Layer layer_ = Layer::zero;
  Rational value_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
inline Scalar& operator+=(Scalar& a, const Scalar& b) { return a = a + b; }
inline Scalar& operator*=(Scalar& a, const Scalar& b) { return a = a * b; }

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar nu(const Scalar& a);
Scalar nu_hat(const Scalar& a);
/// m-fold product, m >= 1.
Scalar pow(const Scalar& a, std::int64_t m);

/// Compares ν-values, treating zero as -inf.
std::strong_ordering nu_compare(const Scalar& a, const Scalar& b);
inline bool nu_equal(const Scalar& a, const Scalar& b) { return nu_compare(a, b) == 0; }
inline bool nu_geq(const Scalar& a, const Scalar& b) { return nu_compare(a, b) >= 0; }

/// a ⊨ b: a = b, or a in G_0 with ν(a) >= ν(b).
bool ghost_surpasses(const Scalar& a, const Scalar& b);
/// a + b lies in G_0.
bool gd(const Scalar& a, const Scalar& b);

/// Multiplicative inverse of a tangible (value negated); ghosts keep their layer.
/// Throws InvalidInput on zero.
Scalar inverse(const Scalar& a);
/// a * inverse(b).
Scalar divide(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace supertropical

template <>
struct std::hash<supertropical::Scalar> {
  std::size_t operator()(const supertropical::Scalar& s) const noexcept { return s.hash(); }
};

#endif  // SUPERTROPICAL_SCALAR_HPP
