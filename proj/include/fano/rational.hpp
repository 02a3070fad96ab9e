#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "fano/nat.hpp"

namespace fano {

// Non-negative exact rational, always stored reduced with a positive denominator.
class Rat {
 public:
  Rat() : num_(0u), den_(1u) {}
  Rat(Nat n) : num_(std::move(n)), den_(1u) {}  // NOLINT(google-explicit-constructor)
  Rat(Nat num, Nat den);  // den == 0 -> InvalidInput

  const Nat& num() const { return num_; }
  const Nat& den() const { return den_; }
  bool is_integer() const { return den_.is_one(); }

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);  // negative result -> InvalidInput
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  Nat num_;
  Nat den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace fano
