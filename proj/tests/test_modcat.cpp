#include <catch_amalgamated.hpp>

#include "ghostkit/modcat.hpp"

using namespace ghostkit;
using CM = CanonicalModule;

TEST_CASE("aliases resolve at construction", "[modcat]") {
  CHECK(CM::bstr(1, 3) == CM::vac(3));
  CHECK(CM::tstr(1, -2) == CM::vac(-2));
  CHECK(CM::w0_minus() == CM::bstr(2, -1));
  CHECK(CM::w0_plus() == CM::tstr(2, -1));
  CHECK_THROWS_AS(CM::typ(GhostCoset(0, 1), 0), ValidationError);
  CHECK_THROWS_AS(CM::bstr(0, 0), ValidationError);
}

TEST_CASE("composition factors", "[modcat]") {
  FormalSum p0 = FormalSum(CM::vac(-1)) + FormalSum(CM::vac(0), 2) + FormalSum(CM::vac(1));
  CHECK(composition_factors(CM::proj(0)) == p0);
  CHECK(composition_factors(CM::vac(3)) == FormalSum(CM::vac(3)));
  FormalSum b42;
  for (int f = 2; f <= 5; ++f) b42.add(CM::vac(f));
  CHECK(composition_factors(CM::bstr(4, 2)) == b42);
  CHECK(composition_factors(CM::typ(GhostCoset(1, 3), 2)) == FormalSum(CM::typ(GhostCoset(1, 3), 2)));
}

TEST_CASE("lengths are 1, n or 4", "[modcat]") {
  CHECK(length(CM::vac(0)) == 1);
  CHECK(length(CM::typ(GhostCoset(1, 2), 0)) == 1);
  for (int n = 2; n <= 9; ++n) {
    CHECK(composition_factors(CM::bstr(n, -1)).total() == n);
    CHECK(composition_factors(CM::tstr(n, 4)).total() == n);
  }
  CHECK(composition_factors(CM::proj(7)).total() == 4);
}

TEST_CASE("Loewy words", "[modcat]") {
  auto b2 = loewy(CM::bstr(2, 0));
  REQUIRE(b2.entries.size() == 2);
  CHECK(b2.entries[0] == LoewyEntry{CM::vac(0), Row::Bottom});
  CHECK(b2.entries[1] == LoewyEntry{CM::vac(1), Row::Top});

  auto t5 = loewy(CM::tstr(5, 0));
  const Row expect[] = {Row::Top, Row::Bottom, Row::Top, Row::Bottom, Row::Top};
  REQUIRE(t5.entries.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(t5.entries[k].factor == CM::vac(k));
    CHECK(t5.entries[k].row == expect[k]);
  }

  auto v = loewy(CM::vac(0));
  REQUIRE(v.entries.size() == 1);
  CHECK(v.entries[0].row == Row::Bottom);

  auto p = loewy(CM::proj(3));
  CHECK(p.diamond);
  CHECK(p.entries.front() == LoewyEntry{CM::vac(3), Row::Top});
  CHECK(p.entries.back() == LoewyEntry{CM::vac(3), Row::Bottom});
}

TEST_CASE("string words alternate and step by one flow", "[modcat][property]") {
  for (int n = 2; n <= 9; ++n)
    for (int m = -3; m <= 3; ++m)
      for (const CM& s : {CM::bstr(n, m), CM::tstr(n, m)}) {
        auto w = loewy(s);
        REQUIRE(static_cast<int>(w.entries.size()) == n);
        for (int k = 0; k + 1 < n; ++k) {
          REQUIRE(w.entries[k + 1].factor.flow() == w.entries[k].factor.flow() + 1);
          REQUIRE(w.entries[k + 1].row != w.entries[k].row);
        }
        // socle + head exhaust the factors of a Loewy-length-two string
        REQUIRE(socle(s) + head(s) == composition_factors(s));
      }
}

TEST_CASE("socle and head", "[modcat]") {
  CHECK(socle(CM::bstr(3, 0)) == FormalSum(CM::vac(0)) + FormalSum(CM::vac(2)));
  CHECK(head(CM::bstr(3, 0)) == FormalSum(CM::vac(1)));
  CHECK(socle(CM::proj(4)) == FormalSum(CM::vac(4)));
  CHECK(head(CM::proj(4)) == FormalSum(CM::vac(4)));
  CM w = CM::typ(GhostCoset(1, 3), -1);
  CHECK(head(w) == FormalSum(w));
  CHECK(socle(w) == FormalSum(w));
  CHECK(head(CM::vac(2)) == FormalSum(CM::vac(2)));
}

TEST_CASE("projectivity", "[modcat]") {
  CHECK(is_projective(CM::proj(5)));
  CHECK(is_injective(CM::proj(5)));
  CHECK(is_projective(CM::typ(GhostCoset(1, 3), -2)));
  CHECK_FALSE(is_projective(CM::bstr(2, 0)));
  CHECK_FALSE(is_injective(CM::vac(0)));
}

TEST_CASE("sequence catalog", "[modcat]") {
  auto cat = sequence_catalog(8);
  auto find = [&](const std::string& name) -> const ExactSequence& {
    for (const auto& s : cat)
      if (s.name == name) return s;
    FAIL("missing sequence " << name);
    return cat.front();
  };

  SECTION("every sequence balances") {
    for (const auto& s : cat) {
      INFO(s.name);
      CHECK(is_balanced(s));
    }
  }
  SECTION("named instances") {
    const auto& d = find("b-even-top-end[n=1]");
    CHECK(d.sub == FormalSum(CM::vac(0)));
    CHECK(d.middle == FormalSum(CM::bstr(2, 0)));
    CHECK(d.quotient == FormalSum(CM::vac(1)));

    const auto& p = find("proj-by-w0-minus");
    CHECK(p.sub == FormalSum(CM::bstr(2, 0)));
    CHECK(p.middle == FormalSum(CM::proj(0)));
    CHECK(p.quotient == FormalSum(CM::bstr(2, -1)));

    const auto& w = find("w0-plus");
    CHECK(w.middle == FormalSum(CM::tstr(2, -1)));
  }
  SECTION("family sizes") {
    std::map<std::string, int> count;
    for (const auto& s : cat) ++count[s.family];
    CHECK(count.size() == 15);
    CHECK(count["def-b-odd"] == 8);
    CHECK(count["def-b-even"] == 7);
    CHECK(count["b-head-b2"] == 6);
    CHECK(sequence_catalog(3).size() < cat.size());
  }
}

TEST_CASE("formal sums", "[modcat]") {
  FormalSum s;
  s.add(CM::proj(1), 2).add(CM::vac(0)).add(CM::vac(2), 0);
  CHECK(s.total() == 3);
  CHECK(s.count(CM::proj(1)) == 2);
  CHECK(s.str() == "V[0] + 2*P[1]");
  CHECK(FormalSum().str() == "0");
  CHECK_THROWS_AS(s.add(CM::vac(0), -1), ValidationError);
}
