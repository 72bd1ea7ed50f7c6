#include "facelat/mobius.hpp"

#include <string>

#include "facelat/error.hpp"

namespace facelat {

Mobius::Mobius(const FinitePoset& p)
    : poset_(&p), order_(p.linear_extension()), once_(new std::once_flag[p.size()]), rows_(p.size()) {}

const std::vector<std::int64_t>& Mobius::row(std::size_t x) const {
  std::call_once(once_[x], [&] {
    std::vector<std::int64_t> mu(poset_->size(), 0);
    const Bitset& above = poset_->up(x);
    for (std::size_t y : order_) {
      if (!above.test(y)) continue;
      if (y == x) {
        mu[y] = 1;
        continue;
      }
      std::int64_t sum = 0;
      (above & poset_->down(y)).for_each([&](std::size_t z) {
        if (z != y) sum += mu[z];
      });
      mu[y] = -sum;
    }
    rows_[x] = std::move(mu);
  });
  return rows_[x];
}

std::int64_t Mobius::operator()(std::size_t x, std::size_t y) const {
  if (!poset_->leq(x, y)) {
    throw Error(ErrorKind::NotComparable, std::to_string(x) + " is not below " + std::to_string(y));
  }
  return row(x)[y];
}

std::int64_t mobius(const FinitePoset& p, std::size_t x, std::size_t y) { return Mobius(p)(x, y); }

}  // namespace facelat
