#pragma once

#include <map>

#include "smallq/rootdata.hpp"

namespace smallq {

// Kostant partition function relative to a fixed positive-root list: the
// number of ways to write a degree (simple-root coordinates) as a
// nonnegative integer combination of the roots.
class KostantOracle {
public:
  explicit KostantOracle(std::vector<Root> roots);

  Integer count(const std::vector<long>& deg) const;
  // All exponent vectors m (indexed like the root list) with
  // sum_i m_i gamma_i = deg.
  std::vector<std::vector<long>> partitions(const std::vector<long>& deg) const;

  const std::vector<Root>& roots() const { return roots_; }

private:
  std::vector<Root> roots_;
  mutable std::map<std::pair<size_t, std::vector<long>>, Integer> memo_;

  Integer count_from(size_t idx, const std::vector<long>& deg) const;
};

}  // namespace smallq
