#include <doctest.h>

#include "../support/oracles.hpp"
#include "lmc/errors.hpp"
#include "lmc/syntax.hpp"
#include "lmc/verify.hpp"

using namespace lmc;
using lmc::testing::basis_by_solve;

namespace {

LieElement E(const Context& ctx, const char* text) { return parse_element(ctx, text); }
TruncPoly P(const Context& ctx, const char* text) { return parse_poly(text, ctx.m(), ctx.module_cap()); }

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("context bounds") {
    CHECK_THROWS(Context(1, 3));
    CHECK_THROWS(Context(2, 0));
    CHECK_NOTHROW(Context(2, 1));
  }

  TEST_CASE("generators") {
    const Context ctx(2, 3);
    const LieElement x1 = generator(ctx, 0);
    CHECK(x1.beta() == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(x1.module()[0].is_zero());
    CHECK(x1.module()[1].is_zero());
    CHECK_THROWS_AS(generator(ctx, 2), IndexError);
    CHECK_THROWS_AS(generator(ctx, -1), IndexError);
    CHECK((x1 - x1).is_zero());
  }

  TEST_CASE("bracket of generators") {
    const Context ctx(3, 3);
    const LieElement x1 = generator(ctx, 0), x2 = generator(ctx, 1), x3 = generator(ctx, 2);
    const LieElement c = bracket(x1, x2);
    CHECK(c.module()[0] == P(ctx, "t2"));
    CHECK(c.module()[1] == P(ctx, "-t1"));
    CHECK(c.module()[2].is_zero());
    CHECK(bracket(x1, x1).is_zero());
    CHECK(bracket(bracket(x1, x2), bracket(x1, x3)).is_zero());
    CHECK(bracket({x1, x2, x3, x1}).is_zero());
  }

  TEST_CASE("membership is validated") {
    const Context ctx(2, 3);
    const std::vector<Rational> zero{Rational(0), Rational(0)};
    CHECK_THROWS_AS(LieElement(ctx, zero, {P(ctx, "t2"), P(ctx, "t1")}), ValidationError);
    CHECK_THROWS_AS(LieElement(ctx, zero, {P(ctx, "1"), P(ctx, "0")}), ValidationError);
    CHECK_NOTHROW(LieElement(ctx, zero, {P(ctx, "t2"), P(ctx, "-t1")}));
  }

  TEST_CASE("ad polynomial action") {
    const Context ctx(2, 3);
    const LieElement w = E(ctx, "[x1,x2]");
    const LieElement r = ad_polynomial_action(w, P(ctx, "t2"));
    CHECK(r == E(ctx, "[x1,x2,x2]"));
    CHECK(r.module()[0] == P(ctx, "t2^2"));
    CHECK(r.module()[1] == P(ctx, "-t1*t2"));
    CHECK(ad_polynomial_action(w, P(ctx, "1")) == w);
    CHECK_THROWS_AS(ad_polynomial_action(generator(ctx, 0), P(ctx, "1")), DomainError);
  }

  TEST_CASE("basis conversion examples") {
    const Context ctx(2, 3);
    const BasisForm b = to_basis(E(ctx, "[x1,x2]"));
    REQUIRE(b.comm.size() == 1);
    CHECK(b.comm.at({1, 0}) == Rational(-1));

    const Context c3(3, 3);
    const BasisForm g = to_basis(generator(c3, 2));
    CHECK(g.linear == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
    CHECK(g.comm.empty());

    BasisForm f(c3);
    f.comm.emplace(BasisTuple{1, 0, 0}, Rational(2));
    f.comm.emplace(BasisTuple{2, 1}, Rational(1));
    const BasisForm back = to_basis(from_basis(f));
    CHECK(back.comm == f.comm);
  }

  TEST_CASE("from_basis images") {
    const Context ctx(2, 3);
    BasisForm b(ctx);
    b.comm.emplace(BasisTuple{1, 0}, Rational(1));
    const LieElement u = from_basis(b);
    CHECK(u.module()[0] == P(ctx, "-t2"));
    CHECK(u.module()[1] == P(ctx, "t1"));
    BasisForm b3(ctx);
    b3.comm.emplace(BasisTuple{1, 0, 0}, Rational(1));
    CHECK(from_basis(b3).module()[0] == P(ctx, "-t1*t2"));
    CHECK(from_basis(b3).module()[1] == P(ctx, "t1^2"));
    CHECK(from_basis(BasisForm(ctx)).is_zero());
    BasisForm bad(ctx);
    bad.comm.emplace(BasisTuple{0, 1}, Rational(1));
    CHECK_THROWS_AS(from_basis(bad), ValidationError);
  }

  TEST_CASE("to_basis agrees with the linear-solve oracle") {
    Rng rng(21);
    for (auto [m, c] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 3}, {2, 6}}) {
      const Context ctx(m, c);
      for (int t = 0; t < 15; ++t) {
        const LieElement u = sample_element(ctx, rng);
        const BasisForm fast = to_basis(u), slow = basis_by_solve(u);
        CHECK(fast.linear == slow.linear);
        CHECK(fast.comm == slow.comm);
        CHECK(from_basis(fast) == u);
      }
    }
  }

  TEST_CASE("enumeration") {
    const Context ctx(2, 3);
    CHECK(enumerate_basis(ctx, 2) == std::vector<BasisTuple>{{1, 0}});
    CHECK(enumerate_basis(ctx, 3) == std::vector<BasisTuple>{{1, 0, 0}, {1, 0, 1}});
    CHECK(algebra_dimension(ctx) == 5);
    CHECK(enumerate_basis(Context(3, 3), 3).size() == 8);
    CHECK_THROWS_AS(enumerate_basis(ctx, 4), IndexError);
    CHECK(enumerate_basis(ctx, 1).size() == 2);
  }

  TEST_CASE("dimension formula") {
    for (int m = 2; m <= 4; ++m) {
      for (int c = 1; c <= 6; ++c) {
        const Context ctx(m, c);
        for (int k = 2; k <= c; ++k) {
          CHECK(static_cast<long>(basis_dimension(ctx, k)) == (k - 1) * binom(m + k - 2, k));
          for (const auto& t : enumerate_basis(ctx, k)) CHECK(is_basis_tuple(ctx, t));
        }
      }
    }
  }

  TEST_CASE("algebra axioms on random tuples") {
    Rng rng(22);
    for (auto [m, c] : {std::pair{2, 4}, {3, 3}, {3, 5}, {4, 4}}) {
      const Context ctx(m, c);
      for (int t = 0; t < 20; ++t) {
        const LieElement u = sample_element(ctx, rng), v = sample_element(ctx, rng), w = sample_element(ctx, rng),
                         z = sample_element(ctx, rng);
        CHECK(bracket(u, v) == -bracket(v, u));
        CHECK((bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)).is_zero());
        CHECK(bracket(bracket(u, v), bracket(w, z)).is_zero());
        std::vector<LieElement> chain;
        for (int k = 0; k <= c; ++k) chain.push_back(sample_element(ctx, rng));
        CHECK(bracket(chain).is_zero());
      }
    }
  }

  TEST_CASE("graded components split the element") {
    Rng rng(23);
    const Context ctx(3, 4);
    for (int t = 0; t < 10; ++t) {
      const LieElement u = sample_element(ctx, rng);
      LieElement sum(ctx);
      for (int k = 1; k <= 4; ++k) sum += graded_component(u, k);
      CHECK(sum == u);
    }
  }

  TEST_CASE("coordinates round trip") {
    Rng rng(24);
    const Context ctx(3, 4);
    for (int t = 0; t < 10; ++t) {
      const LieElement u = sample_element(ctx, rng);
      CHECK(from_coordinates(ctx, coordinates(u)) == u);
    }
  }

  TEST_CASE("ideal closure examples") {
    const Context c32(3, 2);
    const auto basis = ideal_closure({E(c32, "x1 + x2")});
    CHECK(basis.size() == 3);
    const Context c22(2, 2);
    CHECK(ideal_closure({E(c22, "x1")}).size() == 2);
    CHECK(ideal_closure({LieElement(c22)}).empty());
  }

  TEST_CASE("ideal closure is bracket closed") {
    Rng rng(25);
    const Context ctx(3, 3);
    for (int t = 0; t < 10; ++t) {
      const auto basis = ideal_closure({sample_element(ctx, rng)});
      EchelonBasis span;
      for (const auto& b : basis) CHECK(span.insert(coordinates(b)));
      for (const auto& b : basis) {
        for (int j = 0; j < 3; ++j) CHECK(span.contains(coordinates(bracket(b, generator(ctx, j)))));
      }
    }
  }

  TEST_CASE("class one is abelian") {
    const Context ctx(3, 1);
    CHECK(bracket(generator(ctx, 0), generator(ctx, 1)).is_zero());
    CHECK(algebra_dimension(ctx) == 3);
  }
}
