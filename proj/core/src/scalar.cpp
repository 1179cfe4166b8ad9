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

#include "supertropical/scalar.hpp"

#include <ostream>

#include "supertropical/errors.hpp"

namespace supertropical {

const Rational& Scalar::value() const {
  if (is_zero()) throw InvalidInput("zero has no finite value");
  return value_;
}

std::string Scalar::to_string() const {
  switch (layer_) {
    case Layer::zero:
      return "-inf";
    case Layer::tangible:
      return value_.to_string();
    case Layer::ghost:
      return value_.to_string() + "v";
  }
  return {};
}

std::size_t Scalar::hash() const {
  return is_zero() ? 0x9e3779b9u : value_.hash() * 3u + static_cast<std::size_t>(layer_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto c = a.value() <=> b.value();
  if (c > 0) return a;
  if (c < 0) return b;
  return Scalar::ghost(a.value());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar::zero();
  Rational v = a.value() + b.value();
  if (a.is_ghost() || b.is_ghost()) return Scalar::ghost(std::move(v));
  return Scalar::tangible(std::move(v));
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }

Scalar nu(const Scalar& a) { return a.is_tangible() ? Scalar::ghost(a.value()) : a; }
Scalar nu_hat(const Scalar& a) { return a.is_ghost() ? Scalar::tangible(a.value()) : a; }

Scalar pow(const Scalar& a, std::int64_t m) {
  if (m < 1) throw InvalidInput("pow exponent must be positive");
  if (a.is_zero()) return a;
  Rational v = a.value() * m;
  return a.is_ghost() ? Scalar::ghost(std::move(v)) : Scalar::tangible(std::move(v));
}

std::strong_ordering nu_compare(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b.is_zero() ? std::strong_ordering::equal : std::strong_ordering::less;
  if (b.is_zero()) return std::strong_ordering::greater;
  return a.value() <=> b.value();
}

bool ghost_surpasses(const Scalar& a, const Scalar& b) {
  if (a == b) return true;
  return a.is_ghost0() && nu_geq(a, b);
}

bool gd(const Scalar& a, const Scalar& b) { return (a + b).is_ghost0(); }

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) throw InvalidInput("zero is not invertible");
  return a.is_ghost() ? Scalar::ghost(-a.value()) : Scalar::tangible(-a.value());
}

Scalar divide(const Scalar& a, const Scalar& b) { return a * inverse(b); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace supertropical
