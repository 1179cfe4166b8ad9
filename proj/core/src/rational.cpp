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

#include "supertropical/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace supertropical {
namespace {

using i128 = detail::int128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) { return x >= kMin64 && x <= kMax64; }

mpz_class to_mpz(i128 x) {
  // Split into two 64-bit halves; mpz has no native 128-bit constructor.
  const bool neg = x < 0;
  u128 m = abs128(x);
  mpz_class hi(static_cast<unsigned long>(m >> 64));
  mpz_class lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_parts(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  const mpz_class& n = c.get_num();
  const mpz_class& d = c.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
    num_ = n.get_si();
    den_ = d.get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
  }
}

Rational Rational::from_parts(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
      num /= i128(g);
      den /= i128(g);
    }
  }
  Rational r;
  if (fits64(num) && fits64(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
  } else {
    r = Rational(mpq_class(to_mpz(num), to_mpz(den)));
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto check_int = [&](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i >= s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  std::string_view num_text = text.substr(0, slash);
  check_int(num_text, true);
  std::string num_str(num_text);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(num_str));
  } else {
    std::string_view den_text = text.substr(slash + 1);
    check_int(den_text, false);
    mpz_class den(std::string{den_text});
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q = mpq_class(mpz_class(num_str), den);
  }
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
    }
    return Rational::from_parts(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a) {
  if (!a.big_ && a.num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  return Rational(mpq_class(-a.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, std::int64_t k) {
  if (!a.big_) return Rational::from_parts(i128(a.num_) * k, a.den_);
  return Rational(mpq_class(a.to_mpq() * mpq_class(mpz_class(static_cast<long>(k)))));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    // Cross-reduce first so the 128-bit products stay exact.
    u128 g1 = gcd128(abs128(a.num_), u128(b.den_));
    u128 g2 = gcd128(abs128(b.num_), u128(a.den_));
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = (i128(a.num_) / i128(g1)) * (i128(b.num_) / i128(g2));
    i128 d = (i128(a.den_) / i128(g2)) * (i128(b.den_) / i128(g1));
    return Rational::from_parts(n, d);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical form: a small value never equals a promoted one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return a.num_ <=> b.num_;
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace supertropical
