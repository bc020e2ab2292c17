// One PASS/FAIL line per acceptance criterion.
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "law_suites.hpp"
#include "lmc/cosets.hpp"
#include "lmc/errors.hpp"
#include "lmc/normal.hpp"
#include "lmc/syntax.hpp"

using namespace lmc;
using namespace lmc::acceptance;
using lmc::testing::example_map;
using lmc::testing::example_params;

namespace {

// Collects the first failure of a criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  long checks() const { return checks_; }

 private:
  std::string failure_;
  long checks_ = 0;
};

std::string ctx_name(const Context& ctx) {
  return "(" + std::to_string(ctx.m()) + "," + std::to_string(ctx.c()) + ")";
}

void ac1_example(Probe& p) {
  Rng rng(101);
  const Context ctx(2, 3);
  for (int t = 0; t < 50; ++t) {
    long v[18];
    for (long& x : v) x = rng.uniform(-6, 6);
    const long al = v[0], al1 = v[1], al2 = v[2], be = v[3], be1 = v[4], be2 = v[5];
    const long p0 = v[6], p1 = v[7], p2 = v[8], q0 = v[9], q1 = v[10], q2 = v[11];
    const GInnAut psi = example_params(al, al1, al2, be, be1, be2);
    const GInnAut phi = example_params(p0, p1, p2, q0, q1, q2);
    const GInnAut theta = example_params(v[12], v[13], v[14], v[15], v[16], v[17]);
    const std::string tag = " (trial " + std::to_string(t) + ")";
    p.expect(ginn_to_endo(psi) == example_map(al, al1, al2, be, be1, be2), "parameters materialize" + tag);

    const GInnAut inv_expected =
        example_params(-al, -(al * be + al1), al * al - al2, -be, -(be * be + be1), al * be - be2);
    p.expect(ginn_invert(psi) == inv_expected, "inverse coefficients" + tag);
    p.expect(invert(ginn_to_endo(psi)) == ginn_to_endo(inv_expected), "endomorphism inverse" + tag);

    const GInnAut comp_expected = example_params(al + p0, al1 + p1 - p0 * be, al2 + p2 + p0 * al, be + q0,
                                                 be1 + q1 - q0 * be, be2 + q2 + q0 * al);
    p.expect(ginn_compose(psi, phi) == comp_expected, "composition coefficients" + tag);
    p.expect(compose(ginn_to_endo(psi), ginn_to_endo(phi)) == ginn_to_endo(comp_expected),
             "endomorphism composition" + tag);

    const long k = al * q0 - be * p0;
    const Endomorphism comm = group_commutator(ginn_to_endo(psi), ginn_to_endo(phi));
    p.expect(comm == example_map(0, k, 0, 0, 0, k), "commutator coefficient" + tag);
    p.expect(group_commutator(comm, ginn_to_endo(theta)) == Endomorphism::identity(ctx), "((psi,phi),theta) = 1" + tag);
  }
}

void run_laws(Probe& p, const std::vector<LawCase>& cases) {
  for (const auto& lc : cases) {
    const Context ctx(lc.m, lc.c);
    const LawReport r = check_law(lc.law, ctx, lc.trials, lc.seed);
    p.expect(r.requested >= 100 && r.passed == r.requested && !r.counterexample,
             law_name(lc.law) + " on " + ctx_name(ctx) + ": " + law_report_to_json(r).dump());
  }
}

void ac4_recognition(Probe& p) {
  Rng rng(401);
  for (auto [m, c] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {3, 4}, {2, 5}}) {
    const Context ctx(m, c);
    for (int t = 0; t < 100; ++t) {
      const Endomorphism g = sample_map(SampleKind::ginn, ctx, rng);
      const auto f = recognize_ginn(g);
      p.expect(f && ginn_to_endo(*f) == g, "recognize_ginn round trip on " + ctx_name(ctx));
      const Endomorphism e = exp_ad(sample_element(ctx, rng));
      const auto u = recognize_inner(e);
      p.expect(u && exp_ad(*u) == e, "recognize_inner round trip on " + ctx_name(ctx));
    }
  }
  const Endomorphism non_inner =
      parse_automorphism(R"({"m":2,"c":3,"images":["x1 + [x1,x2,x2]","x2"]})");
  p.expect(!recognize_inner(non_inner), "non-inner normal example rejected");
  for (int m = 2; m <= 4; ++m) {
    const Context ctx(m, 2);
    for (int t = 0; t < 100; ++t) {
      p.expect(recognize_inner(sample_map(SampleKind::ginn, ctx, rng)).has_value(),
               "class-two generalized inner is inner on " + ctx_name(ctx));
    }
  }
}

void ac5_normality(Probe& p) {
  auto scalar2 = [](const Context& ctx) { return Endomorphism::scalar(ctx, Rational(2)); };
  for (auto [m, c] : {std::pair{2, 2}, {2, 3}}) {
    const Context ctx(m, c);
    const auto v = decide_normal(scalar2(ctx));
    p.expect(v.normal && v.aut && v.aut->alpha == Rational(2), "x -> 2x normal on " + ctx_name(ctx));
  }
  for (int m = 2; m <= kMaxVars; ++m) {
    const Context ctx(m, 1);
    p.expect(decide_normal(scalar2(ctx)).normal, "x -> 2x normal on " + ctx_name(ctx));
  }
  struct Expected {
    int m, c;
    const char* witness;
  };
  for (const Expected& e : {Expected{3, 2, "x1 + [x2,x3]"}, Expected{3, 3, "[x1,x2] + [x1,x3,x3]"},
                            Expected{2, 4, "[x1,x2,x2] + [x1,x2,x1,x1]"},
                            Expected{3, 4, "[x1,x2,x2] + [x1,x2,x1,x1]"}}) {
    const Context ctx(e.m, e.c);
    const auto v = decide_normal(scalar2(ctx));
    const LieElement expected = parse_element(ctx, e.witness);
    p.expect(!v.normal, "x -> 2x not normal on " + ctx_name(ctx));
    p.expect(v.witness.size() == 1 && v.witness[0] == expected, "witness is the scalar-obstruction generator on " + ctx_name(ctx));
    p.expect(!preserves_ideal(scalar2(ctx), {expected}), "witness ideal is moved on " + ctx_name(ctx));
  }
}

void ac6_oracle(Probe& p) {
  std::uint64_t seed = 601;
  for (auto [m, c] : {std::pair{2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
    const Context ctx(m, c);
    const LawReport r = check_law(Law::ginn_normal_oracle, ctx, 50, seed++);
    p.expect(r.passed == 50, "ginn preserves principal ideals on " + ctx_name(ctx));
  }
}

GInnAut as_ginn(const Endomorphism& phi) {
  const auto g = recognize_ginn(phi);
  if (!g) throw InternalError("expected a generalized inner map");
  return *g;
}

void ac7_cosets(Probe& p) {
  Rng rng(701);
  for (auto [m, c] : {std::pair{3, 3}, {3, 4}, {2, 5}}) {
    const Context ctx(m, c);
    for (int t = 0; t < 50; ++t) {
      const GInnAut g = sample_ginn(ctx, rng);
      const PsiForm r = reduce_mod_inn_normal(g);
      const std::string where = " mod Inn on " + ctx_name(ctx);
      p.expect(shape_check(r.jacobian, Shape::psi), "psi shape" + where);
      p.expect(reduce_mod_inn_normal(r.q).psi == r.psi, "idempotent" + where);
      const Endomorphism moved = compose(exp_ad(sample_element(ctx, rng)), ginn_to_endo(g));
      p.expect(reduce_mod_inn_normal(as_ginn(moved)).psi == r.psi, "coset invariant" + where);
      p.expect(recognize_inner(compose(ginn_to_endo(g), invert(r.psi))).has_value(), "inner certificate" + where);
    }
  }
  for (int m = 2; m <= 4; ++m) {
    const Context ctx(m, 2);
    for (int t = 0; t < 20; ++t) {
      p.expect(reduce_mod_inn_normal(sample_ginn(ctx, rng)).psi == Endomorphism::identity(ctx),
               "class two mod Inn is trivial on " + ctx_name(ctx));
    }
  }
  for (auto [m, c] : {std::pair{3, 3}, {3, 4}}) {
    const Context ctx(m, c);
    for (int t = 0; t < 50; ++t) {
      const Endomorphism phi = sample_map(SampleKind::ia, ctx, rng);
      const ThetaForm r = reduce_mod_in(phi);
      const std::string where = " mod IN on " + ctx_name(ctx);
      p.expect(shape_check(r.jacobian, Shape::theta), "theta shape" + where);
      p.expect(reduce_mod_in(r.theta).theta == r.theta, "idempotent" + where);
      const Endomorphism moved = compose(sample_map(SampleKind::ginn, ctx, rng), phi);
      p.expect(reduce_mod_in(moved).theta == r.theta, "coset invariant" + where);
      p.expect(recognize_ginn(compose(phi, invert(r.theta))).has_value(), "generalized inner certificate" + where);
    }
  }
  for (int c = 2; c <= 5; ++c) {
    const Context ctx(2, c);
    for (int t = 0; t < 20; ++t) {
      p.expect(reduce_mod_in(sample_map(SampleKind::ia, ctx, rng)).theta == Endomorphism::identity(ctx),
               "two generators mod IN is trivial on " + ctx_name(ctx));
    }
  }
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void ac8_dimensions(Probe& p) {
  Rng rng(801);
  for (int m = 2; m <= 4; ++m) {
    for (int c = 1; c <= 6; ++c) {
      const Context ctx(m, c);
      for (int k = 2; k <= c; ++k) {
        const long n = static_cast<long>(enumerate_basis(ctx, k).size());
        p.expect(n == (k - 1) * binom(m + k - 2, k), "dimension of degree " + std::to_string(k) + " on " + ctx_name(ctx));
      }
      for (int t = 0; t < 100; ++t) {
        const LieElement u = sample_element(ctx, rng);
        const BasisForm b = to_basis(u);
        p.expect(from_basis(b) == u, "from_basis(to_basis(u)) on " + ctx_name(ctx));
        const BasisForm b2 = to_basis(from_basis(b));
        p.expect(b2.linear == b.linear && b2.comm == b.comm, "to_basis(from_basis(b)) on " + ctx_name(ctx));
      }
    }
  }
}

void ac9_axioms(Probe& p) {
  Rng rng(901);
  for (int m = 2; m <= 4; ++m) {
    for (int c = 1; c <= 5; ++c) {
      const Context ctx(m, c);
      const std::string where = " on " + ctx_name(ctx);
      for (int t = 0; t < 200; ++t) {
        const LieElement u = sample_element(ctx, rng), v = sample_element(ctx, rng), w = sample_element(ctx, rng),
                         z = sample_element(ctx, rng);
        p.expect(bracket(u, v) == -bracket(v, u), "anticommutativity" + where);
        p.expect((bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)).is_zero(),
                 "Jacobi" + where);
        p.expect(bracket(bracket(u, v), bracket(w, z)).is_zero(), "metabelian" + where);
        std::vector<LieElement> chain{u, v};
        for (int k = 2; k <= c; ++k) chain.push_back(sample_element(ctx, rng));
        p.expect(bracket(chain).is_zero(), "nilpotency" + where);
      }
    }
  }
}

void ac10_mutation(Probe& p) {
  const int status = std::system(LMC_MUTANT_PROBE " > mutant_probe.log 2>&1");
  p.expect(status == 0, "mutant build passed suites 2 and 3 (see mutant_probe.log)");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Probe&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "L_{2,3} closed-form inverse, composition and commutator", ac1_example},
      {2, "group laws", [](Probe& p) { run_laws(p, group_law_suite()); }},
      {3, "Jacobian calculus", [](Probe& p) { run_laws(p, jacobian_suite()); }},
      {4, "recognition round trips", ac4_recognition},
      {5, "normality case table", ac5_normality},
      {6, "normality oracle consistency", ac6_oracle},
      {7, "coset reductions", ac7_cosets},
      {8, "dimension formula and basis round trip", ac8_dimensions},
      {9, "algebra axioms", ac9_axioms},
      {10, "mutation tripwire", ac10_mutation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Probe p;
    try {
      c.body(p);
    } catch (const std::exception& e) {
      p.expect(false, std::string("exception: ") + e.what());
    }
    if (p.ok()) {
      std::cout << "AC" << c.id << " PASS " << c.title << " (" << p.checks() << (p.checks() == 1 ? " check)" : " checks)") << std::endl;
    } else {
      ++failures;
      std::cout << "AC" << c.id << " FAIL " << c.title << ": " << p.failure() << std::endl;
    }
  }
  return failures == 0 ? 0 : 1;
}
