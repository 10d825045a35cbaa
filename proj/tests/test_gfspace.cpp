#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "subspace/gfspace.hpp"
#include "subspace/qarith.hpp"

using namespace subspace;

TEST_CASE("field tables") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    FiniteField f(q);
    CHECK(f.order() == q);
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
  CHECK_THROWS_AS(FiniteField(6), GeometryError);
}

TEST_CASE("canonical form is unique") {
  auto f = make_field(2);
  SubspaceBasis a(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}});
  SubspaceBasis b(f, 4, {{1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(SubspaceBasis::zero(f, 4).dim() == 0);
}

TEST_CASE("subspace distance") {
  auto f = make_field(2);
  SubspaceBasis x(f, 2, {{1, 0}});
  SubspaceBasis y(f, 2, {{0, 1}});
  CHECK(subspace_distance(x, x) == 0);
  CHECK(subspace_distance(x, y) == 2);
  SubspaceBasis plane(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(subspace_distance(SubspaceBasis::zero(f, 4), plane) == 3);
  CHECK_THROWS_AS(subspace_distance(x, plane), GeometryError);
}

TEST_CASE("enumeration counts") {
  auto f2 = make_field(2);
  CHECK(enumerate_subspaces(f2, 2, 1).size() == 3);
  CHECK(enumerate_subspaces(f2, 4).size() == 67);
  CHECK(enumerate_subspaces(make_field(3), 1, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_subspaces(f2, 8, std::nullopt, 1000), GeometryError);
  for (int q : {2, 3, 4}) {
    auto f = make_field(q);
    for (int v = 1; v <= 4; ++v) {
      BigInt total = 0;
      for (int k = 0; k <= v; ++k) total += gauss(v, k, q);
      CHECK(total == static_cast<long>(enumerate_subspaces(f, v).size()));
    }
  }
}

TEST_CASE("verify shipped spread") {
  std::ifstream in(std::string(SUBSPACE_DATA_DIR) + "/spread_2_4.json");
  REQUIRE(in);
  ExplicitCode code = code_from_json(nlohmann::json::parse(in));
  CodeReport r = verify_code(code, 4);
  CHECK(r.ok());
  CHECK(r.min_distance == 4);
  CHECK(r.distribution == std::vector<std::int64_t>{0, 0, 5, 0, 0});
  CHECK_FALSE(verify_code(code, 5).ok());
}

TEST_CASE("verify reports the offending pair") {
  auto f = make_field(2);
  ExplicitCode c{f, 3, {SubspaceBasis(f, 3, {{1, 0, 0}}), SubspaceBasis(f, 3, {{0, 1, 0}}),
                        SubspaceBasis(f, 3, {{1, 0, 0}, {0, 1, 0}})}};
  CodeReport r = verify_code(c, 2);
  CHECK_FALSE(r.ok());
  CHECK(r.violation == std::make_pair<std::size_t, std::size_t>(0, 2));
  CHECK(r.min_distance == 1);
}

TEST_CASE("code json round trip") {
  auto f = make_field(3);
  ExplicitCode c{f, 3, {SubspaceBasis(f, 3, {{1, 2, 0}}), SubspaceBasis(f, 3, {{0, 1, 1}})}};
  ExplicitCode back = code_from_json(code_to_json(c));
  REQUIRE(back.elements.size() == 2);
  CHECK(back.elements[0] == c.elements[0]);
  CHECK(back.elements[1] == c.elements[1]);
}

TEST_CASE("exhaustive optimum") {
  auto all = [](int v) {
    std::set<int> k;
    for (int i = 0; i <= v; ++i) k.insert(i);
    return k;
  };
  CHECK(brute_force_max(2, 4, 3, all(4)).size == 5);
  CHECK(brute_force_max(2, 4, 2, all(4)).size == 37);
  CHECK(brute_force_max(2, 4, 4, all(4)).size == 5);
  CHECK(brute_force_max(2, 4, 4, {2}).size == 5);
  CHECK(brute_force_max(2, 5, 4, {2}).size == 9);  // A_2(5,4;2)
  OracleResult r = brute_force_max(2, 4, 3, all(4));
  CHECK(verify_code(r.witness, 3).ok());
  CHECK(r.witness.elements.size() == 5);
}

TEST_CASE("max clique") {
  // 5-cycle plus a chord 0-2: maximum clique {0,1,2}
  std::vector<std::vector<std::uint64_t>> adj(5, std::vector<std::uint64_t>(1, 0));
  auto edge = [&](int a, int b) {
    adj[a][0] |= 1ull << b;
    adj[b][0] |= 1ull << a;
  };
  edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 4), edge(4, 0), edge(0, 2);
  CHECK(max_clique(adj) == std::vector<std::size_t>{0, 1, 2});
}
