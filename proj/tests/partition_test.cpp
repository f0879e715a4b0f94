#include "schurq/partition.hpp"

#include <random>

#include "doctest.h"

using namespace schurq;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{4, 2, 2, 1, 1, 1}) == Partition{6, 3, 1, 1});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
}

TEST_CASE("conjugate is involutive on random partitions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> parts;
    int prev = std::uniform_int_distribution<int>(1, 8)(rng);
    long long total = 0;
    while (total + prev <= 30) {
      parts.push_back(prev);
      total += prev;
      prev = std::uniform_int_distribution<int>(1, prev)(rng);
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
    }
    Partition la(parts);
    CHECK(conjugate(conjugate(la)) == la);
  }
}

TEST_CASE("contains") {
  CHECK(contains(Partition{}, Partition{3, 1}));
  CHECK_FALSE(contains(Partition{2, 2}, Partition{2, 1}));
  CHECK(contains(Partition{4, 2, 1}, Partition{9, 5, 3, 3, 1}));
}

TEST_CASE("union") {
  CHECK(union_of(Partition{4, 3, 2}, Partition{3, 1}) ==
        Partition{4, 3, 3, 2, 1});
  CHECK(union_of(Partition{2, 2}, Partition{}) == Partition{2, 2});
  CHECK(union_of(Partition{2, 2}, Partition{2, 2}) == Partition{2, 2, 2, 2});
}

TEST_CASE("union size, commutativity, associativity") {
  std::mt19937 rng(11);
  auto random_partition = [&rng]() {
    std::vector<int> parts;
    int len = std::uniform_int_distribution<int>(0, 4)(rng);
    int prev = 6;
    for (int i = 0; i < len; ++i) {
      prev = std::uniform_int_distribution<int>(1, prev)(rng);
      parts.push_back(prev);
    }
    return Partition(parts);
  };
  for (int trial = 0; trial < 100; ++trial) {
    Partition a = random_partition(), b = random_partition(),
              c = random_partition();
    CHECK(union_of(a, b).size() == a.size() + b.size());
    CHECK(union_of(a, b) == union_of(b, a));
    CHECK(union_of(union_of(a, b), c) == union_of(a, union_of(b, c)));
  }
}

TEST_CASE("hook lengths and contents") {
  CHECK(hook_length(Partition{1}, {1, 1}) == 1);
  CHECK(hook_length(Partition{2, 2}, {1, 1}) == 3);
  CHECK(hook_length(Partition{2, 2}, {2, 2}) == 1);
  CHECK_THROWS_AS(hook_length(Partition{2, 2}, {3, 1}), std::invalid_argument);
  CHECK(content({1, 1}) == 0);
  CHECK(content({1, 2}) == 1);
  CHECK(content({3, 1}) == -2);
}

TEST_CASE("strips") {
  CHECK(is_horizontal_strip(SkewShape(Partition{3, 1}, Partition{1})));
  CHECK_FALSE(is_horizontal_strip(SkewShape(Partition{2, 2}, Partition{1})));
  CHECK(is_vertical_strip(SkewShape(Partition{1, 1}, Partition{})));
}

TEST_CASE("partitions with restricted parts") {
  auto got = partitions_with_parts_in({2, 4}, 4);
  REQUIRE(got.size() == 2);
  CHECK(got[0] == Partition{4});
  CHECK(got[1] == Partition{2, 2});

  got = partitions_with_parts_in({2, 4}, 6);
  REQUIRE(got.size() == 2);
  CHECK(got[0] == Partition{4, 2});
  CHECK(got[1] == Partition{2, 2, 2});

  CHECK(partitions_with_parts_in({2, 4}, 3).empty());
  for (long long n = 1; n <= 21; n += 2)
    CHECK(partitions_with_parts_in({2, 4}, n).empty());
  for (long long n = 0; n <= 20; n += 2)
    CHECK_FALSE(partitions_with_parts_in({2, 4}, n).empty());
}

TEST_CASE("q_family") {
  auto got = q_family(Partition{}, 4);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == Partition{4});
  CHECK(got[1] == Partition{3, 1});
  CHECK(got[2] == Partition{2, 2});

  got = q_family(Partition{2, 2}, 4);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == Partition{2, 2});

  CHECK(q_family(Partition{}, 2).empty());

  for (const Partition& la : q_family(Partition{3, 1}, 12)) {
    CHECK(la.size() == 12);
    CHECK(contains(Partition{3, 1}, la));
  }
}

TEST_CASE("join and meet of skew shapes") {
  SkewShape a(Partition{2, 1}, Partition{});
  SkewShape b(Partition{1, 1, 1}, Partition{});
  CHECK(join(a, b) == SkewShape(Partition{2, 1, 1}, Partition{}));
  CHECK(join(a, a) == a);
  CHECK(meet(SkewShape(Partition{2, 2}, Partition{1}),
             SkewShape(Partition{3, 1}, Partition{1, 1})) ==
        SkewShape(Partition{2, 1}, Partition{1}));
}

TEST_CASE("join/meet absorption on random skew pairs") {
  std::mt19937 rng(23);
  auto random_skew = [&rng]() {
    std::vector<int> outer;
    int prev = std::uniform_int_distribution<int>(1, 5)(rng);
    int len = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < len; ++i) {
      outer.push_back(prev);
      prev = std::uniform_int_distribution<int>(1, prev)(rng);
    }
    std::vector<int> inner;
    int bound = outer[0];
    for (int i = 0; i < len; ++i) {
      int hi = std::min(bound, outer[i]);
      int v = std::uniform_int_distribution<int>(0, hi)(rng);
      inner.push_back(v);
      bound = v;
      if (v == 0) break;
    }
    return SkewShape(Partition(outer), Partition(inner));
  };
  for (int trial = 0; trial < 100; ++trial) {
    SkewShape a = random_skew(), b = random_skew();
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
  }
}

TEST_CASE("partition text round trip") {
  CHECK(parse_partition("4,3^2,1") == Partition{4, 3, 3, 1});
  CHECK(parse_partition("-") == Partition{});
  CHECK(Partition{4, 3, 3, 1}.to_string() == "4,3^2,1");
  CHECK(Partition{}.to_string() == "-");
  CHECK(Partition{2, 2}.to_string() == "2^2");
  CHECK(parse_partition("2,1,1") == parse_partition("2,1^2"));
  CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> parts;
    int prev = 9;
    int len = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < len; ++i) {
      prev = std::uniform_int_distribution<int>(1, prev)(rng);
      parts.push_back(prev);
    }
    Partition la(parts);
    CHECK(parse_partition(la.to_string()) == la);
  }
}

TEST_CASE("subpartitions") {
  auto subs = subpartitions(Partition{2, 1});
  REQUIRE(subs.size() == 5);  // -, (1), (2), (1,1), (2,1)
  CHECK(subs.front() == Partition{2, 1});
  CHECK(subs.back() == Partition{});
}
