#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fano {

/// Malformed or out-of-contract argument (bad token, empty list, negative result).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called outside its domain, e.g. Fano index of a non-well-formed space.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force Reid–Tai refused because the group order exceeds the cost cap.
class CostCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate point could be decided neither by brute force nor by certificate.
class Undecided : public std::runtime_error {
 public:
  Undecided(std::size_t point, const std::string& what)
      : std::runtime_error(what), point_(point) {}
  std::size_t point() const noexcept { return point_; }

 private:
  std::size_t point_;
};

/// A supplied subset certificate failed its checks.
class CertificateRejected : public std::runtime_error {
 public:
  CertificateRejected(std::size_t point, const std::string& what)
      : std::runtime_error(what), point_(point) {}
  std::size_t point() const noexcept { return point_; }

 private:
  std::size_t point_;
};

}  // namespace fano
