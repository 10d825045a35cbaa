#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "subspace/gfspace.hpp"
#include "subspace/mdc.hpp"

using namespace subspace;

namespace {

MdcEngine& self_contained() {
  static MdcEngine e(FactStore::builtin(false));
  return e;
}

const BoundResult* child_with_note(const BoundResult& r, const std::string& needle) {
  for (const auto& c : r.children)
    if (c->note.find(needle) != std::string::npos) return c.get();
  return nullptr;
}

}  // namespace

TEST_CASE("ball counts") {
  CHECK(ball_count(2, 4, 0, 1, 1) == 15);
  CHECK(ball_count(2, 4, 2, 2, 2) == 19);
  for (int k = 0; k <= 5; ++k) CHECK(ball_count(3, 5, k, k, 0) == 1);
  // against enumeration in F_2^4
  auto f = make_field(2);
  auto all = enumerate_subspaces(f, 4);
  for (int e = 0; e <= 3; ++e)
    for (const auto& u : {SubspaceBasis(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}),
                          SubspaceBasis(f, 4, {{1, 1, 1, 0}})})
      for (int k = 0; k <= 4; ++k) {
        long n = 0;
        for (const auto& s : all)
          if (s.dim() == k && subspace_distance(s, u) <= e) ++n;
        CHECK(ball_count(2, 4, u.dim(), k, e) == n);
      }
}

TEST_CASE("exact values for small and large d") {
  MdcEngine& e = self_contained();
  auto val = [&](std::int64_t q, int v, int d) { return e.exact_small_large_d(q, v, d); };
  CHECK(val(2, 6, 2)->value == 1521);
  CHECK(val(2, 6, 2)->exact);
  CHECK(val(3, 5, 4)->value == 28);
  CHECK(val(2, 5, 3)->value == 18);
  CHECK(val(2, 5, 3)->exact);
  CHECK(val(2, 7, 5)->value == 34);
  CHECK(val(2, 4, 2)->value == 37);
  CHECK(val(3, 4, 2)->value == 132);  // q^4+q^3+2q^2+q+3
  CHECK(val(2, 4, 4)->value == 5);
  CHECK(val(2, 5, 5)->value == 2);
  CHECK(val(2, 6, 4)->value == 77);
  CHECK(val(2, 8, 6)->value == 257);
  CHECK(val(2, 4, 1)->value == 67);
  CHECK(val(3, 9, 7)->value == 488);  // 2q^5+2
  CHECK_FALSE(val(3, 9, 7)->exact);
  CHECK_FALSE(val(2, 10, 5));
}

TEST_CASE("decomposition") {
  MdcEngine& e = self_contained();
  CHECK(e.decomposition_bound(2, 6, 3).value == 119);
  CHECK(e.decomposition_bound(2, 10, 5).value == 48394);
  CHECK(e.decomposition_bound(2, 10, 6).value == 48394);
  CHECK(e.decomposition_bound(2, 11, 7).value == 8846);
  CHECK(e.decomposition_bound(2, 13, 9).value == 34060);
  MdcEngine ext(FactStore::builtin(true));
  CHECK(ext.decomposition_bound(2, 11, 7).value == 8844);
  CHECK(ext.decomposition_bound(2, 13, 9).value == 34058);
  // d = 1: the zero space and the full space stay
  CHECK(e.decomposition_bound(2, 4, 1).value == 67);
}

TEST_CASE("sphere packing ILP") {
  MdcEngine& e = self_contained();
  BoundResult r = e.ev_bound(2, 10, 5);
  CHECK(r.value == 48336);
  CHECK(r.note.find("(1,1,1,145,4977,38148,4977,145,1,1,1)") != std::string::npos);
  CHECK(e.ev_bound(2, 10, 6).value == 48336);
  CHECK(e.ev_bound(2, 2, 1).value == 5);
}

TEST_CASE("scores") {
  CHECK(score(10, 2, Pattern(5, 0)) == 0);
  Rat a = score(10, 2, {0, 1, 0, 0, 1156});
  CHECK(a == make_rat(3530, 93));
  CHECK(a < make_rat(3795699, 100000));
  Rat b = score(10, 2, {0, 0, 0, 73, 1156});
  CHECK(b < make_rat(47023656, 1000000));
  CHECK_THROWS(score(10, 2, {1, 2}));
  ScoredPatternSet empty;
  CHECK(score_bound(2, 10, empty) == 0);
  CHECK(floor(Rat(qint(8, 2)) * std::max({analytic_8_3_scores(2, false)[0],
                                         analytic_8_3_scores(2, false)[1],
                                         analytic_8_3_scores(2, false)[2]})) == 9277);
}

TEST_CASE("pattern feasibility") {
  MdcEngine& e = self_contained();
  CHECK(e.pattern_feasible(2, 9, 5, {1, 0, 0, 0, 0}, 0).feasible);
  CHECK(e.pattern_feasible(3, 8, 5, {1, 0, 0, 0}, 0).feasible);
  CHECK_FALSE(e.pattern_feasible(2, 9, 5, {0, 0, 1, 0, 1152}, 3).feasible);
  PatternCheck c = e.pattern_feasible(2, 9, 5, {0, 0, 1, 72, 1151}, 4);
  CHECK(c.feasible);
  CHECK(c.envelope == Pattern{0, 0, 1, 72, 1151});
  CHECK(e.pattern_feasible(2, 9, 5, {0, 0, 1, 0, 0}, 3).envelope[3] == 72);
}

TEST_CASE("maximal patterns") {
  MdcEngine& e = self_contained();
  ScoredPatternSet a = e.enumerate_maximal_patterns(2, 9, 5, 5);
  CHECK(a.patterns == std::vector<Pattern>{
                          {0, 0, 0, 73, 1156}, {0, 0, 1, 72, 1151}, {0, 1, 0, 0, 1156}, {1, 0, 0, 0, 0}});
  ScoredPatternSet b = e.enumerate_maximal_patterns(3, 8, 5, 4);
  CHECK(b.patterns ==
        std::vector<Pattern>{{0, 0, 0, 248}, {0, 0, 1, 247}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  for (const auto& p : a.patterns) {
    int j = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (p[i] > 0) j = i;
    CHECK(e.pattern_feasible(2, 9, 5, p, j).feasible);
  }
  ScoredPatternSet back = ScoredPatternSet::from_json(a.to_json());
  CHECK(back.patterns == a.patterns);
  CHECK(back.omega == a.omega);
}

TEST_CASE("maximal elements") {
  auto m = maximal_elements({{1, 2}, {1, 1}, {0, 3}, {1, 2}, {0, 0}});
  CHECK(m == std::vector<Pattern>{{0, 3}, {1, 2}});
}

TEST_CASE("johnson ILP for A_2(10,5)") {
  MdcEngine& e = self_contained();
  ScoredPatternSet F = e.enumerate_maximal_patterns(2, 9, 5, 5);
  BoundResult r = e.johnson_mdc_bound(2, 10, 5, F);
  CHECK(r.value == 48104);
  CHECK(r.note.find("a = (0,0,0,3,4977,38144)") != std::string::npos);
  CHECK(r.value <= score_bound(2, 10, F));
  CHECK(score_bound(2, 10, F) == 48105);
  CHECK(e.johnson_mdc(2, 10, 5).value == 48104);
}

TEST_CASE("johnson ILP for A_3(9,5) with the spread split") {
  MdcEngine& e = self_contained();
  ScoredPatternSet F = e.enumerate_maximal_patterns(3, 8, 5, 4);
  CHECK(e.johnson_mdc_bound(3, 9, 5, F).value == 123050);
  BoundResult r = e.johnson_mdc(3, 9, 5);
  CHECK(r.value == 123048);
  const BoundResult* split = child_with_note(r, "branch on a_3");
  REQUIRE(split);
  REQUIRE(split->children.size() == 2);
  CHECK(split->children[0]->value == 123048);
  CHECK(split->children[1]->value == 123040);
  CHECK(split->children[1]->note.find("60763") != std::string::npos);
}

TEST_CASE("score relaxation dominates the ILP") {
  MdcEngine& e = self_contained();
  for (auto [q, v, d] : {std::tuple{2, 8, 3}, {2, 9, 5}, {2, 10, 5}, {3, 8, 3}}) {
    const int m = v / 2;
    ScoredPatternSet F = e.enumerate_maximal_patterns(q, v - 1, d, m);
    // The zero space and the whole space meet no point-local pattern, so they
    // are the only codewords the score can miss.
    CHECK(e.johnson_mdc_bound(q, v, d, F).value <= score_bound(q, v, F) + 2);
  }
}

TEST_CASE("analytic v-4, odd v") {
  MdcEngine& e = self_contained();
  CHECK(e.analytic_v_minus_4_odd(2, 11).value == 8844);
  CHECK(e.analytic_v_minus_4_odd(2, 13).value == 34058);
  MdcEngine ext(FactStore::builtin(true));
  CHECK(ext.analytic_v_minus_4_odd(2, 11).value == 8842);
  CHECK(ext.analytic_v_minus_4_odd(2, 13).value == 34056);
  // floor([2m+1] - [m-2]) / [m-1] simplifies to these polynomials
  for (std::int64_t q : {2, 3, 4, 5})
    for (int m = 3; m <= 8; ++m) {
      BigInt expect = pow(q, m + 2) + pow(q, 3);
      if (m == 3) expect += q;
      if (m >= 6) expect -= 1;
      BoundResult r = e.analytic_v_minus_4_odd(q, 2 * m + 1);
      CHECK(child_with_note(r, "a_{m-1} <= " + to_string(expect) + ","));
    }
  CHECK_THROWS(e.analytic_v_minus_4_odd(2, 8));
}

TEST_CASE("analytic A_q(7,3)") {
  MdcEngine& e = self_contained();
  CHECK(e.analytic_7_3(2).value == 808);
  CHECK(e.analytic_7_3(3).value == 15676);
  CHECK(e.analytic_7_3(4).value == 143644);
  CHECK(e.analytic_7_3(5).value == 825544);
}

TEST_CASE("analytic v-4, even v") {
  MdcEngine& e = self_contained();
  CHECK(e.analytic_2m_2m4(2, 5).value == 38275);
  BoundResult m4 = e.analytic_2m_2m4(2, 4);
  CHECK(m4.value == 6596);
  CHECK(child_with_note(m4, "x = 378"));
  BoundResult m5 = e.analytic_2m_2m4(3, 5);
  CHECK(m5.value == 14887416);
  CHECK(child_with_note(m5, "b = 61014"));
  CHECK_THROWS(e.analytic_2m_2m4(2, 3));
}

TEST_CASE("analytic A_q(8,3)") {
  MdcEngine& e = self_contained();
  BoundResult r = e.analytic_8_3(2);
  CHECK(r.value == 9260);
  REQUIRE(r.children.size() == 3);
  CHECK(r.children[0]->value == 9277);
  CHECK(r.children[1]->value == 9260);
  CHECK(r.children[2]->value == 9465);
  CHECK(e.analytic_8_3(3).value == 758228);
  CHECK(e.analytic_8_3(4).value == 20449159);
}

TEST_CASE("dispatcher") {
  MdcEngine& e = self_contained();
  CHECK(e.value(2, 10, 5) == 48104);
  CHECK(e.upper(2, 10, 5)->method == Method::johnson_mdc);
  CHECK(e.value(2, 10, 6) == 38275);
  CHECK(e.value(2, 6, 3) == 118);
  CHECK(e.value(2, 7, 3) == 808);
  CHECK(e.value(2, 8, 3) == 9260);
  CHECK(e.value(3, 9, 5) == 123048);
  CHECK(e.value(2, 4, 4) == 5);
  CHECK(e.upper(2, 4, 4)->exact);
  std::string where;
  CHECK(recheck(*e.upper(2, 10, 5), &where));
}

TEST_CASE("monotone in d and above every constant dimension slice") {
  MdcEngine& e = self_contained();
  for (std::int64_t q : {2, 3})
    for (int v = 1; v <= 10; ++v)
      for (int d = 1; d <= v; ++d) {
        BigInt a = e.value(q, v, d);
        if (d + 1 <= v) CHECK(a >= e.value(q, v, d + 1));
        const int de = std::max(2, d % 2 ? d + 1 : d);
        for (int k = 0; k <= v; ++k) CHECK(a >= e.cdc().value(q, v, de, k));
      }
}

TEST_CASE("ILP value never exceeds the LP value") {
  MdcEngine& e = self_contained();
  for (auto [v, d] : {std::pair{8, 3}, {9, 5}, {10, 5}}) {
    BoundResult r = e.ev_bound(2, v, d);
    auto pos = r.note.find("LP ");
    REQUIRE(pos != std::string::npos);
    std::string lp = r.note.substr(pos + 3);
    lp = lp.substr(0, lp.find(','));
    CHECK(Rat(r.value) <= parse_rat(lp));
  }
}

TEST_CASE("matches exhaustive search for v <= 4") {
  MdcEngine& e = self_contained();
  for (auto [q, v] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    std::set<int> all;
    for (int i = 0; i <= v; ++i) all.insert(i);
    for (int d = 1; d <= v; ++d) CHECK(e.value(q, v, d) == brute_force_max(q, v, d, all).size);
  }
}
