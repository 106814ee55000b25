#include "smallq/kostant.hpp"

#include <algorithm>
#include <functional>

namespace smallq {

namespace {

bool all_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long c) { return c == 0; });
}

bool all_nonneg(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long c) { return c >= 0; });
}

}  // namespace

KostantOracle::KostantOracle(std::vector<Root> roots) : roots_(std::move(roots)) {}

Integer KostantOracle::count_from(size_t idx, const std::vector<long>& deg) const {
  if (all_zero(deg)) return 1;
  if (idx == roots_.size()) return 0;
  auto key = std::make_pair(idx, deg);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  Integer total = 0;
  std::vector<long> rest = deg;
  while (all_nonneg(rest)) {
    total += count_from(idx + 1, rest);
    for (size_t j = 0; j < rest.size(); ++j) rest[j] -= roots_[idx].q_coords[j];
  }
  memo_[key] = total;
  return total;
}

Integer KostantOracle::count(const std::vector<long>& deg) const {
  return count_from(0, deg);
}

std::vector<std::vector<long>> KostantOracle::partitions(
    const std::vector<long>& deg) const {
  std::vector<std::vector<long>> out;
  std::vector<long> m(roots_.size(), 0);

  std::function<void(size_t, std::vector<long>)> rec =
      [&](size_t idx, std::vector<long> rest) {
        if (idx == roots_.size()) {
          if (all_zero(rest)) out.push_back(m);
          return;
        }
        for (long mm = 0; all_nonneg(rest); ++mm) {
          m[idx] = mm;
          rec(idx + 1, rest);
          for (size_t j = 0; j < rest.size(); ++j)
            rest[j] -= roots_[idx].q_coords[j];
        }
        m[idx] = 0;
      };
  rec(0, deg);
  return out;
}

}  // namespace smallq
