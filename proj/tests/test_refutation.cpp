#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/refutation.hpp"
#include "gapl/zoo.hpp"
#include "oracles.hpp"

using namespace gapl;
using namespace gapl::test;


TEST_CASE("forced values on b_n") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    ForcedValues f = bn_forced_values(n, n <= 3);
    CHECK(f.forced == expected_forced(n));
    // z_p o z_q with p, q >= 2 stays open
    CHECK(std::set<std::string>(f.unforced.begin(), f.unforced.end()) == expected_unforced(n));
    CHECK(f.x_times_z(1) == Rational(-4));
    CHECK(f.x_times_z(2) == Rational(2));
    CHECK(verify_forced(f).ok);
    if (n <= 3) {
      CHECK(f.membership.size() == f.forced.size());
      for (const auto& [slot, ok] : f.membership) CHECK(ok);
    }
  }
}

TEST_CASE("tampered forced values are rejected") {
  ForcedValues f = bn_forced_values(2, true);
  ForcedValues g = f;
  g.forced.begin()->second += Rational(1);
  CHECK_FALSE(verify_forced(g).ok);
  ForcedValues h = f;
  h.cofactors.begin()->second[0] = h.cofactors.begin()->second[0] + MultiPoly(h.system.vars, Rational(1));
  CHECK_FALSE(verify_forced(h).ok);
}

TEST_CASE("refutation scalars") {
  struct Case {
    const char* id;
    Rational lhs, rhs;
  };
  for (Case c : {Case{"sl3", -4, 2}, {"sl4", -4, 2}, {"so5", -8, 4}, {"g2", Rational(4, 5), Rational(-2, 5)}}) {
    CAPTURE(c.id);
    RefutationReport r = refute(c.id);
    CHECK(r.a1 == r.a2);
    CHECK(r.lhs == c.lhs);
    CHECK(r.rhs == c.rhs);
    CHECK(r.lhs == r.c * r.a3);
    CHECK(r.rhs == -r.c * r.a1);
    CHECK_FALSE(r.reconstructed);
    CHECK(verify_report(r).ok);
  }
}

TEST_CASE("every frame is an isomorphic copy of b_n") {
  for (const char* id : {"so7", "sp6", "so8", "f4"}) {
    CAPTURE(id);
    FrameSet fs = standard_frames(id);
    REQUIRE(fs.frames.size() == 3);
    for (auto& f : fs.frames) CHECK(verify_frame_iso(fs.host.algebra, f));
  }
}

TEST_CASE("tampered reports are rejected") {
  RefutationReport r = refute("sl3");
  RefutationReport bad = r;
  bad.rhs = bad.lhs;
  CHECK_FALSE(verify_report(bad).ok);
  bad = r;
  bad.frames[0].x_img = bad.frames[1].x_img;
  CHECK_FALSE(verify_report(bad).ok);
  bad = r;
  bad.w = scale(bad.w, 2);
  CHECK_FALSE(verify_report(bad).ok);
}

TEST_CASE("text proofs are ASCII") {
  RefutationReport r = refute("g2");
  std::string t = text_proof(r);
  for (unsigned char ch : t) CHECK(ch < 128);
  CHECK(t.find("4/5 x3 = -2/5 x3") != std::string::npos);
}

TEST_CASE("sl2 has nothing to refute") { CHECK_THROWS_AS(refute("sl2"), InvalidInput); }
