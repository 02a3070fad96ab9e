#include "fano/sylvester.hpp"

#include <deque>
#include <mutex>

namespace fano {

Nat sylvester(std::size_t k) {
  static std::mutex mu;
  static std::deque<Nat> memo{Nat(2u)};

  std::lock_guard lock(mu);
  while (memo.size() <= k) {
    const Nat& prev = memo.back();
    memo.push_back(prev * (prev - Nat(1u)) + Nat(1u));
  }
  return memo[k];
}

}  // namespace fano
