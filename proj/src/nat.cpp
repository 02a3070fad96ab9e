#include "fano/nat.hpp"

#include <ostream>

#include "fano/errors.hpp"

namespace fano {

void Nat::check_non_negative(long long v) {
  if (v < 0) throw InvalidInput("Nat cannot hold negative value " + std::to_string(v));
}

Nat Nat::parse(std::string_view decimal) {
  if (decimal.empty()) throw InvalidInput("empty integer token");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw InvalidInput("not a non-negative decimal integer: '" + std::string(decimal) + "'");
    }
  }
  return Nat(mpz_class(std::string(decimal), 10));
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw InvalidInput("value does not fit in 64 bits: " + str());
  // mpz_get_ui is 64-bit on LP64 targets.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(v_.get_mpz_t());
}

std::size_t Nat::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

Nat& Nat::operator-=(const Nat& o) {
  if (v_ < o.v_) throw InvalidInput("Nat subtraction underflow: " + str() + " - " + o.str());
  v_ -= o.v_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  mpz_fdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.is_zero()) throw InvalidInput("modulo by zero");
  mpz_fdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return *this;
}

bool Nat::divides(const Nat& n) const {
  if (is_zero()) return n.is_zero();
  return mpz_divisible_p(n.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
}

Nat Nat::exact_div(const Nat& n, const Nat& d) {
  if (!d.divides(n) || d.is_zero()) {
    throw InvalidInput(d.str() + " does not divide " + n.str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), n.v_.get_mpz_t(), d.v_.get_mpz_t());
  return Nat(std::move(q));
}

Nat Nat::pow(const Nat& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
  return Nat(std::move(r));
}

Nat gcd(const Nat& a, const Nat& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return Nat(std::move(g));
}

Nat lcm(const Nat& a, const Nat& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return Nat(std::move(l));
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.str(); }

Nat gcd_all(std::span<const Nat> xs) {
  if (xs.empty()) throw InvalidInput("gcd_all of an empty list");
  Nat g = xs.front();
  for (const Nat& x : xs.subspan(1)) {
    if (g.is_one()) break;
    g = gcd(g, x);
  }
  return g;
}

Nat lcm_all(std::span<const Nat> xs) {
  if (xs.empty()) throw InvalidInput("lcm_all of an empty list");
  Nat l = xs.front();
  for (const Nat& x : xs.subspan(1)) l = lcm(l, x);
  return l;
}

}  // namespace fano
