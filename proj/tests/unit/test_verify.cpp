#include <doctest.h>

#include "lmc/errors.hpp"
#include "lmc/normal.hpp"
#include "lmc/verify.hpp"

using namespace lmc;

namespace {

bool abs_le(const Rational& x, long bound) { return x <= Rational(bound) && x >= Rational(-bound); }

void check_clean(const LawReport& r, int trials) {
  CHECK(r.requested == trials);
  CHECK(r.passed == trials);
  CHECK_FALSE(r.counterexample.has_value());
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("sampling is deterministic") {
    const Context ctx(3, 3);
    Rng a(99), b(99);
    CHECK(sample_element(ctx, a) == sample_element(ctx, b));
    CHECK(sample_ginn(ctx, a) == sample_ginn(ctx, b));
    for (auto kind : {SampleKind::ginn, SampleKind::ia, SampleKind::inner}) {
      CHECK(sample_map(kind, ctx, a) == sample_map(kind, ctx, b));
    }
    CHECK(split_seed(5, 1) == split_seed(5, 1));
    CHECK(split_seed(5, 1) != split_seed(5, 2));
  }

  TEST_CASE("bounded draws") {
    Rng rng(7);
    for (int k = 0; k < 1000; ++k) {
      const long v = rng.uniform(-3, 3);
      CHECK(v >= -3);
      CHECK(v <= 3);
    }
    const Context ctx(2, 4);
    for (int k = 0; k < 20; ++k) {
      const BasisForm b = to_basis(sample_element(ctx, rng, 2));
      for (const auto& x : b.linear) CHECK(abs_le(x, 2));
      for (const auto& [t, x] : b.comm) CHECK(abs_le(x, 2));
    }
  }

  TEST_CASE("sampled maps pass their recognizers") {
    Rng rng(8);
    for (auto [m, c] : {std::pair{2, 3}, {3, 4}}) {
      const Context ctx(m, c);
      for (int k = 0; k < 10; ++k) {
        const Endomorphism g = sample_map(SampleKind::ginn, ctx, rng);
        const auto fg = recognize_ginn(g);
        REQUIRE(fg);
        CHECK(ginn_to_endo(*fg) == g);
        const Endomorphism i = sample_map(SampleKind::inner, ctx, rng);
        const auto u = recognize_inner(i);
        REQUIRE(u);
        CHECK(exp_ad(*u) == i);
      }
    }
  }

  TEST_CASE("scaled samples only where scalars are normal") {
    Rng rng(9);
    CHECK_NOTHROW(sample_map(SampleKind::normal_scaled, Context(2, 2), rng));
    CHECK_NOTHROW(sample_map(SampleKind::normal_scaled, Context(2, 3), rng));
    CHECK_NOTHROW(sample_map(SampleKind::normal_scaled, Context(4, 1), rng));
    CHECK_THROWS_AS(sample_map(SampleKind::normal_scaled, Context(3, 2), rng), UsageError);
    CHECK_THROWS_AS(sample_map(SampleKind::normal_scaled, Context(2, 4), rng), UsageError);
    CHECK_THROWS_AS(sample_map(SampleKind::element, Context(2, 4), rng), UsageError);
    CHECK_THROWS_AS(sample_element(Context(2, 4), rng, 0), UsageError);
  }

  TEST_CASE("laws hold") {
    check_clean(check_law(Law::abelian, Context(3, 2), 200, 1), 200);
    check_clean(check_law(Law::nilpotent2, Context(2, 3), 200, 2), 200);
    check_clean(check_law(Law::metabelian, Context(2, 4), 100, 3), 100);
    check_clean(check_law(Law::metabelian, Context(3, 4), 100, 4), 100);
  }

  TEST_CASE("laws are guarded") {
    CHECK_THROWS_AS(check_law(Law::abelian, Context(3, 3), 10, 1), UsageError);
    CHECK_THROWS_AS(check_law(Law::nilpotent2, Context(2, 4), 10, 1), UsageError);
    CHECK_THROWS_AS(check_law(Law::metabelian, Context(3, 3), 10, 1), UsageError);
    CHECK_THROWS_AS(check_law(Law::class2_by_abelian, Context(3, 3), 10, 1), UsageError);
    CHECK_THROWS_AS(check_law(Law::ginn_normal_oracle, Context(3, 1), 10, 1), UsageError);
    CHECK_THROWS_AS(check_law(Law::abelian, Context(3, 2), -1, 1), UsageError);
  }

  TEST_CASE("reports are reproducible") {
    const LawReport a = check_law(Law::jacobian_functorial, Context(3, 3), 10, 77);
    const LawReport b = check_law(Law::jacobian_functorial, Context(3, 3), 10, 77);
    Json ja = law_report_to_json(a), jb = law_report_to_json(b);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
    CHECK(a.passed <= a.requested);
  }

  TEST_CASE("report json") {
    const Json j = law_report_to_json(check_law(Law::class2_by_abelian, Context(2, 3), 5, 3));
    CHECK(j["law"] == "class2_by_abelian");
    CHECK(j["m"] == 2);
    CHECK(j["c"] == 3);
    CHECK(j["requested"] == 5);
    CHECK(j["passed"] == 5);
    CHECK(j["seed"] == 3);
    CHECK(j["counterexample"].is_null());
    CHECK(j.contains("elapsed_ms"));
  }

  TEST_CASE("law names") {
    for (Law law : {Law::abelian, Law::nilpotent2, Law::metabelian, Law::class2_by_abelian, Law::jacobian_functorial,
                    Law::ginn_normal_oracle}) {
      CHECK(parse_law(law_name(law)) == law);
    }
    CHECK_FALSE(parse_law("commutative"));
  }
}
