#include "ado/partitions.hpp"

#include <algorithm>

namespace ado {

namespace {

void enumerate_rec(int slots, int remaining, int maxPart,
                   std::vector<int>& acc, std::vector<Partition>& out,
                   int n, int m) {
  if (slots == 0) {
    if (remaining == 0) out.push_back({acc, n, m});
    return;
  }
  const int hi = std::min(remaining, maxPart);
  for (int v = 0; v <= hi; ++v) {
    acc.push_back(v);
    enumerate_rec(slots - 1, remaining - v, maxPart, acc, out, n, m);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n, int m, std::optional<int> cap) {
  if (n < 1) throw std::invalid_argument("enumerate: n >= 1 required");
  if (m < 0) return {};
  std::vector<Partition> out;
  const int maxPart = cap ? *cap - 1 : m;
  if (n == 1) {
    if (m == 0) out.push_back({{}, n, m});
    return out;
  }
  std::vector<int> acc;
  acc.reserve(static_cast<size_t>(n - 1));
  enumerate_rec(n - 1, m, maxPart, acc, out, n, m);
  return out;
}

size_t index_of(const Partition& e, const std::vector<Partition>& basis) {
  auto it = std::lower_bound(basis.begin(), basis.end(), e);
  if (it == basis.end() || !(*it == e))
    throw std::invalid_argument("index_of: partition not in basis");
  return static_cast<size_t>(it - basis.begin());
}

}  // namespace ado
