#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace ado {

// A composition e = (e_1, ..., e_{n-1}) of m: the index sets E_{n,m} and,
// with a cap, E^N_{n,m} (every part <= N-1). The position in the enumerated
// list is the canonical basis index used everywhere downstream.
struct Partition {
  std::vector<int> parts;  // length n-1
  int n = 0;
  int m = 0;

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// All compositions of m into n-1 parts (each <= cap-1 when cap is given),
// in lexicographic order.
std::vector<Partition> enumerate(int n, int m,
                                 std::optional<int> cap = std::nullopt);

// Position of e in the basis list; throws std::invalid_argument if absent.
size_t index_of(const Partition& e, const std::vector<Partition>& basis);

}  // namespace ado
