#include <doctest.h>

#include "ado/partitions.hpp"

using namespace ado;

namespace {

long binomial(int n, int k) {
  if (k == 0) return 1;  // includes C(-1, 0) = 1 for the empty composition
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// independent brute-force count of capped compositions
long capped_count(int slots, int total, int maxPart) {
  if (slots == 0) return total == 0 ? 1 : 0;
  long acc = 0;
  for (int v = 0; v <= std::min(total, maxPart); ++v)
    acc += capped_count(slots - 1, total - v, maxPart);
  return acc;
}

}  // namespace

TEST_CASE("enumerate examples") {
  auto full = enumerate(3, 2);
  REQUIRE(full.size() == 3);
  CHECK(full[0].parts == std::vector<int>{0, 2});
  CHECK(full[1].parts == std::vector<int>{1, 1});
  CHECK(full[2].parts == std::vector<int>{2, 0});

  auto capped = enumerate(3, 1, 2);
  REQUIRE(capped.size() == 2);
  CHECK(capped[0].parts == std::vector<int>{0, 1});
  CHECK(capped[1].parts == std::vector<int>{1, 0});

  CHECK(enumerate(5, 4, 3).size() == 19);
  CHECK(static_cast<long>(enumerate(5, 4, 3).size()) == capped_count(4, 4, 2));
}

TEST_CASE("cardinality matches the binomial formula") {
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m <= 8; ++m)
      CHECK(static_cast<long>(enumerate(n, m).size()) ==
            binomial(n + m - 2, m));
}

TEST_CASE("capped and overflow parts split E_{n,m} disjointly") {
  for (int n = 2; n <= 5; ++n) {
    for (int m = 0; m <= 6; ++m) {
      for (int N = 2; N <= 3; ++N) {
        auto all = enumerate(n, m);
        auto capped = enumerate(n, m, N);
        size_t overflow = 0;
        for (const Partition& e : all) {
          bool over = false;
          for (int p : e.parts) over = over || p >= N;
          if (over) ++overflow;
        }
        CHECK(capped.size() + overflow == all.size());
        // every capped element appears in the full list
        for (const Partition& e : capped) CHECK_NOTHROW(index_of(e, all));
      }
    }
  }
}

TEST_CASE("index_of examples and inverse property") {
  auto basis = enumerate(3, 2);
  CHECK(index_of({{0, 2}, 3, 2}, basis) == 0);
  CHECK(index_of({{1, 1}, 3, 2}, basis) == 1);
  CHECK(index_of({{2, 0}, 3, 2}, basis) == 2);
  CHECK_THROWS_AS(index_of({{3, 3}, 3, 6}, basis), std::invalid_argument);

  for (int n = 2; n <= 6; ++n) {
    auto b = enumerate(n, 4, 3);
    for (size_t k = 0; k < b.size(); ++k) CHECK(index_of(b[k], b) == k);
  }
}

TEST_CASE("degenerate shapes") {
  CHECK(enumerate(1, 0).size() == 1);   // the empty composition
  CHECK(enumerate(1, 2).empty());
  CHECK(enumerate(3, -1).empty());
  CHECK(enumerate(2, 5, 3).empty());    // single part capped below total
}
