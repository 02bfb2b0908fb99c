// Copyright 2026 The maxeven authors
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

#pragma once

#include <gmp.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

namespace maxeven {

/// Exact rational number backed by GMP.
///
/// Values are always canonical: reduced to lowest terms, denominator
/// positive, zero stored as 0/1. All solver and objective arithmetic goes
/// through this type; there are no floating-point code paths.
class Rational {
 public:
  Rational() { mpq_init(q_); }

  // NOLINTNEXTLINE(google-explicit-constructor): integers embed naturally.
  Rational(long long value) {
    mpq_init(q_);
    mpq_set_si(q_, static_cast<long>(value), 1);
  }

  Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: denominator is zero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    mpq_init(q_);
    mpq_set_si(q_, static_cast<long>(num), static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
  }

  Rational(const Rational& other) {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }

  Rational(Rational&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }

  Rational& operator=(const Rational& other) {
    if (this != &other) mpq_set(q_, other.q_);
    return *this;
  }

  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }

  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }

  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// -1, 0 or +1.
  int sign() const { return mpq_sgn(q_); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }

  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  /// Smallest integer >= *this. Throws std::overflow_error if it does not
  /// fit a machine word (cannot happen at the instance sizes this library
  /// targets, but the arithmetic itself is unbounded).
  long long ceil_to_int() const { return rounded_quotient(/*toward_positive=*/true); }

  /// Largest integer <= *this.
  long long floor_to_int() const { return rounded_quotient(/*toward_positive=*/false); }

  /// Renders as "p/q", denominator always written ("3/2", "1/1", "-1/3").
  std::string str() const {
    return mpz_str(mpq_numref(q_)) + "/" + mpz_str(mpq_denref(q_));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  long long rounded_quotient(bool toward_positive) const {
    mpz_t z;
    mpz_init(z);
    if (toward_positive) {
      mpz_cdiv_q(z, mpq_numref(q_), mpq_denref(q_));
    } else {
      mpz_fdiv_q(z, mpq_numref(q_), mpq_denref(q_));
    }
    if (mpz_fits_slong_p(z) == 0) {
      mpz_clear(z);
      throw std::overflow_error("Rational: value out of machine-integer range");
    }
    const long v = mpz_get_si(z);
    mpz_clear(z);
    return v;
  }

  static std::string mpz_str(mpz_srcptr z) {
    char* s = mpz_get_str(nullptr, 10, z);
    std::string out(s);
    void (*freefunc)(void*, std::size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
  }

  mpq_t q_;
};

/// Three-way comparison consistent with the real values: -1, 0 or +1.
inline int compare(const Rational& a, const Rational& b) {
  const auto c = a <=> b;
  if (c == std::strong_ordering::less) return -1;
  if (c == std::strong_ordering::greater) return 1;
  return 0;
}

}  // namespace maxeven
