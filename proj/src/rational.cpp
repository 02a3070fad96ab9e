#include "fano/rational.hpp"

#include <ostream>

#include "fano/errors.hpp"

namespace fano {

Rat::Rat(Nat num, Nat den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInput("rational with zero denominator");
  const Nat g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Nat::exact_div(num_, g);
    den_ = Nat::exact_div(den_, g);
  }
}

std::string Rat::str() const {
  return is_integer() ? num_.str() : num_.str() + "/" + den_.str();
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_.is_zero()) throw InvalidInput("rational division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace fano
