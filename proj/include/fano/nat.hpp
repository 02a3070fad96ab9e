#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fano {

// Non-negative integer of unbounded magnitude.
//
// Arithmetic is exact. Subtraction that would go below zero throws
// InvalidInput instead of wrapping, and so does division by zero.
class Nat {
 public:
  Nat() = default;

  template <std::unsigned_integral T>
  Nat(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  // Signed literals are convenient in tests and tables; negatives are rejected.
  template <std::signed_integral T>
  Nat(T v) {  // NOLINT(google-explicit-constructor)
    check_non_negative(static_cast<long long>(v));
    v_ = static_cast<unsigned long>(v);
  }

  // Parses a plain decimal string ("0", "23029100604532998144"). No sign, no
  // whitespace, no leading '+'.
  static Nat parse(std::string_view decimal);

  std::string str() const { return v_.get_str(10); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }
  std::uint64_t to_u64() const;  // throws InvalidInput when it does not fit
  std::size_t bit_length() const;

  const mpz_class& mpz() const { return v_; }

  Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
  Nat& operator/=(const Nat& o);  // floor division
  Nat& operator%=(const Nat& o);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // True iff *this divides n (0 divides only 0).
  bool divides(const Nat& n) const;

  // Quotient n / d, throwing InvalidInput unless d divides n exactly.
  static Nat exact_div(const Nat& n, const Nat& d);

  static Nat pow(const Nat& base, unsigned long exp);

  friend Nat gcd(const Nat& a, const Nat& b);
  friend Nat lcm(const Nat& a, const Nat& b);

 private:
  explicit Nat(mpz_class v) : v_(std::move(v)) {}
  static void check_non_negative(long long v);

  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

// gcd / lcm of a nonempty list; an empty list is InvalidInput.
Nat gcd_all(std::span<const Nat> xs);
Nat lcm_all(std::span<const Nat> xs);

}  // namespace fano
