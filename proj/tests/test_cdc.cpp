#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "subspace/cdc.hpp"
#include "subspace/gfspace.hpp"

using namespace subspace;

TEST_CASE("johnson steps") {
  CHECK(johnson_step(2, 9, 6, 4, 34) == 1158);
  CHECK(johnson_divisible_step(2, 9, 6, 4, 34) == 1156);
  CHECK(johnson_divisible_step(2, 10, 6, 4, 73) == 4977);
  CHECK(johnson_divisible_step(2, 10, 6, 5, 1156) == 38148);
}

TEST_CASE("anticode") {
  CHECK(anticode_bound(2, 7, 4, 3) == 381);
  for (std::int64_t q : {2, 3, 4, 5}) CHECK(anticode_bound(q, 8, 8, 4) == pow(q, 4) + 1);
  CHECK_THROWS(anticode_bound(2, 7, 3, 3));
}

TEST_CASE("engine values") {
  CdcEngine e(FactStore::builtin(false));
  CHECK(e.value(2, 9, 6, 4) == 1156);
  CHECK(e.upper(2, 9, 6, 4)->method == Method::johnson_divisible);
  CHECK(e.value(2, 10, 6, 3) == 145);
  CHECK(e.value(2, 10, 6, 4) == 4977);
  CHECK(e.value(2, 10, 6, 5) == 38148);
  CHECK(e.value(2, 9, 6, 3) == 73);
  CHECK(e.value(2, 8, 6, 3) == 34);
  CHECK(e.value(2, 6, 4, 3) == 77);
  CHECK(e.upper(2, 6, 4, 3)->exact);
  CHECK(e.value(3, 8, 6, 3) == 248);
  CHECK(e.value(3, 9, 6, 3) == 757);
  CHECK(e.value(2, 11, 8, 4) == 133);
  CHECK(e.value(2, 13, 10, 5) == 260);
  CHECK(e.value(2, 7, 4, 3) == 381);
  CHECK(e.value(2, 5, 3, 2) == e.value(2, 5, 4, 2));  // odd d rounds up
  CHECK(e.value(2, 4, 4, 0) == 1);
  CHECK(e.value(2, 4, 4, 7) == 0);
  CHECK(e.value(2, 6, 2, 3) == gauss(6, 3, 2));
  CHECK(e.value(2, 6, 8, 3) == 1);
}

TEST_CASE("external facts") {
  CdcEngine e(FactStore::builtin(true));
  CHECK(e.value(2, 11, 8, 4) == 132);
  CHECK(e.value(2, 11, 8, 7) == 132);
  CHECK(e.value(2, 13, 10, 5) == 259);
  CHECK(e.upper(2, 11, 8, 4)->method == Method::override_fact);
}

TEST_CASE("duality") {
  CdcEngine e;
  for (std::int64_t q : {2, 3})
    for (int v = 2; v <= 10; ++v)
      for (int d = 2; d <= v; d += 2)
        for (int k = 0; k <= v; ++k) CHECK(e.value(q, v, d, k) == e.value(q, v, d, v - k));
}

TEST_CASE("monotone in d and divisible step is no weaker") {
  CdcEngine e;
  for (std::int64_t q : {2, 3})
    for (int v = 4; v <= 11; ++v)
      for (int k = 1; k < v; ++k) {
        for (int d = 4; d <= 2 * k; d += 2) CHECK(e.value(q, v, d, k) <= e.value(q, v, d - 2, k));
        for (int d = 4; d < 2 * k; d += 2) {
          BigInt inner = e.value(q, v - 1, d, k - 1);
          try {
            CHECK(johnson_divisible_step(q, v, d, k, inner) <= johnson_step(q, v, d, k, inner));
          } catch (const ArithmeticError&) {
          }
        }
      }
}

TEST_CASE("matches exhaustive search") {
  CdcEngine e(FactStore::builtin(false));
  CHECK(e.value(2, 4, 4, 2) == brute_force_max(2, 4, 4, {2}).size);
  CHECK(e.value(2, 5, 4, 2) == brute_force_max(2, 5, 4, {2}).size);
  CHECK(e.value(3, 4, 4, 2) == brute_force_max(3, 4, 4, {2}).size);
  CHECK(e.value(2, 4, 2, 2) == brute_force_max(2, 4, 2, {2}).size);
}

TEST_CASE("derivation tree rechecks") {
  CdcEngine e;
  BoundPtr r = e.upper(2, 10, 6, 5);
  std::string where;
  CHECK(recheck(*r, &where));
  CHECK(r->children.size() == 1);
  CHECK(r->children[0]->query == "A_2(9,6;4)");
}

TEST_CASE("concurrent queries agree") {
  CdcEngine shared;
  std::vector<BigInt> got(8);
  std::vector<std::thread> ts;
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([&, i] { got[i] = shared.value(2, 12 + i % 2, 6, 5); });
  for (auto& t : ts) t.join();
  CdcEngine fresh;
  for (int i = 0; i < 8; ++i) CHECK(got[i] == fresh.value(2, 12 + i % 2, 6, 5));
}
