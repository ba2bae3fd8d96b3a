#include "amal/presentation.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace amal;

TEST_CASE("half_bounds worked values") {
  const Presentation p367({3, 6, 7});
  CHECK(p367.half_bounds(0).minus == 0);
  CHECK(p367.half_bounds(0).plus == 2);
  CHECK(p367.half_bounds(1).minus == 1);
  CHECK(p367.half_bounds(1).plus == 4);
  CHECK(p367.half_bounds(2).minus == 2);
  CHECK(p367.half_bounds(2).plus == 4);

  const Presentation p22({2, 2});
  CHECK(p22.half_bounds(1).minus == 0);
  CHECK(p22.half_bounds(1).plus == 1);
}

TEST_CASE("half_bounds closed forms, exhaustive to 50") {
  for (int p1 = 2; p1 <= 50; ++p1) {
    for (int pk = p1; pk <= 50; ++pk) {
      const Presentation pres({p1, pk});
      const auto hb = pres.half_bounds(1);
      if ((pk - p1) % 2 == 0) {
        CHECK(hb.minus == (pk - p1) / 2);
        CHECK(hb.plus == (p1 + pk - 2) / 2);
      } else {
        CHECK(hb.minus == (pk - p1 - 1) / 2);
        CHECK(hb.plus == (p1 + pk - 1) / 2);
      }
      CHECK(hb.minus + hb.plus == pk - 1);
    }
  }
}

TEST_CASE("half_bounds rejects out-of-range generator") {
  const Presentation pres({2, 3});
  CHECK_THROWS_AS(pres.half_bounds(2), std::invalid_argument);
  CHECK_THROWS_AS(pres.half_bounds(-1), std::invalid_argument);
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({2}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation({3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation({1, 2}), std::invalid_argument);
  CHECK_NOTHROW(Presentation({2, 2}));
}

TEST_CASE("reindex splits by parity of p_k - p_1") {
  SECTION("G(3,6,7)") {
    const Reindexing rx = reindex(Presentation({3, 6, 7}));
    CHECK(rx.m == 2);
    CHECK(rx.q == std::vector<int>{3, 7});
    CHECK(rx.r == std::vector<int>{6});
    CHECK(rx.orig_of_q == std::vector<int>{0, 2});
    CHECK(rx.orig_of_r == std::vector<int>{1});
    CHECK(rx.new_of_orig[0].kind == GenKind::Y);
    CHECK(rx.new_of_orig[0].index == 0);
    CHECK(rx.new_of_orig[2].kind == GenKind::Y);
    CHECK(rx.new_of_orig[2].index == 1);
    CHECK(rx.new_of_orig[1].kind == GenKind::Z);
    CHECK(rx.new_of_orig[1].index == 0);
    // bounds in the new labels (paper's Example 4.2 values)
    CHECK(rx.q_minus(0) == 0);
    CHECK(rx.q_plus(0) == 2);
    CHECK(rx.q_minus(1) == 2);
    CHECK(rx.q_plus(1) == 4);
    CHECK(rx.r_minus(0) == 1);
    CHECK(rx.r_plus(0) == 4);
  }
  SECTION("G(2,2,2)") {
    const Reindexing rx = reindex(Presentation({2, 2, 2}));
    CHECK(rx.m == 3);
    CHECK(rx.q == std::vector<int>{2, 2, 2});
    CHECK(rx.r.empty());
  }
  SECTION("G(2,3,4,5)") {
    const Reindexing rx = reindex(Presentation({2, 3, 4, 5}));
    CHECK(rx.m == 2);
    CHECK(rx.q == std::vector<int>{2, 4});
    CHECK(rx.r == std::vector<int>{3, 5});
  }
}

TEST_CASE("reindex round-trips and partitions") {
  for (auto pv : {std::vector<int>{2, 2}, {2, 3}, {3, 6, 7}, {2, 3, 4, 5}, {2, 2, 3, 3, 5}}) {
    const Presentation pres(pv);
    const Reindexing rx = reindex(pres);
    CHECK(rx.q.size() + rx.r.size() == pv.size());
    REQUIRE(!rx.q.empty());
    CHECK(rx.q[0] == pres.p1());
    for (std::size_t i = 0; i + 1 < rx.q.size(); ++i) CHECK(rx.q[i] <= rx.q[i + 1]);
    for (std::size_t i = 0; i + 1 < rx.r.size(); ++i) CHECK(rx.r[i] <= rx.r[i + 1]);
    for (int v : rx.q) CHECK((v - pres.p1()) % 2 == 0);
    for (int v : rx.r) CHECK((v - pres.p1()) % 2 == 1);
    std::vector<int> merged;
    for (int g : rx.orig_of_q) merged.push_back(pres.p(g));
    for (int g : rx.orig_of_r) merged.push_back(pres.p(g));
    std::sort(merged.begin(), merged.end());
    CHECK(merged == pv);
    for (int g = 0; g < pres.n(); ++g) {
      const auto ni = rx.new_of_orig[static_cast<std::size_t>(g)];
      if (ni.kind == GenKind::Y)
        CHECK(rx.orig_of_q[static_cast<std::size_t>(ni.index)] == g);
      else
        CHECK(rx.orig_of_r[static_cast<std::size_t>(ni.index)] == g);
    }
  }
}
