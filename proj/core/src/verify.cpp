#include "lmc/verify.hpp"

#include <chrono>

#include "lmc/errors.hpp"

namespace lmc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kIdealsPerTrial = 20;

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return lo + static_cast<long>(r % span);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

LieElement sample_derived(const Context& ctx, Rng& rng, int coeff_bound) {
  if (coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");
  BasisForm b(ctx);
  for (int k = 2; k <= ctx.c(); ++k) {
    for (const auto& t : enumerate_basis(ctx, k)) {
      const long v = rng.uniform(-coeff_bound, coeff_bound);
      if (v != 0) b.comm.emplace(t, Rational(v));
    }
  }
  return from_basis(b);
}

LieElement sample_element(const Context& ctx, Rng& rng, int coeff_bound) {
  LieElement u = sample_derived(ctx, rng, coeff_bound);
  for (int i = 0; i < ctx.m(); ++i) {
    u += Rational(rng.uniform(-coeff_bound, coeff_bound)) * generator(ctx, i);
  }
  return u;
}

GInnAut sample_ginn(const Context& ctx, Rng& rng, int coeff_bound) {
  if (coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");
  if (ctx.c() == 1) return GInnAut::identity(ctx);
  const int cap = GInnAut::param_cap(ctx);
  std::vector<TruncPoly> f;
  for (int j = 0; j < ctx.m(); ++j) {
    std::vector<TruncPoly::Term> terms;
    const std::vector<Monomial> monos = monomials_up_to(ctx.m(), cap);
    for (const auto& mono : monos) terms.emplace_back(mono, Rational(rng.uniform(-coeff_bound, coeff_bound)));
    f.push_back(TruncPoly::from_terms(ctx.m(), cap, std::move(terms)));
  }
  return GInnAut(ctx, std::move(f));
}

bool scalars_are_normal(const Context& ctx) {
  return ctx.c() == 1 || (ctx.m() == 2 && (ctx.c() == 2 || ctx.c() == 3));
}

Endomorphism sample_map(SampleKind kind, const Context& ctx, Rng& rng, int coeff_bound) {
  switch (kind) {
    case SampleKind::element:
      throw UsageError("element samples are not maps");
    case SampleKind::ginn:
      return ginn_to_endo(sample_ginn(ctx, rng, coeff_bound));
    case SampleKind::ia: {
      std::vector<LieElement> images;
      for (int i = 0; i < ctx.m(); ++i) images.push_back(generator(ctx, i) + sample_derived(ctx, rng, coeff_bound));
      return Endomorphism(ctx, std::move(images));
    }
    case SampleKind::normal_scaled: {
      if (!scalars_are_normal(ctx)) {
        throw UsageError("scaled normal automorphisms exist only on (2,2), (2,3) and class 1");
      }
      static const Rational kScalars[] = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                          Rational(1, 2), Rational(-1, 2), Rational(3), Rational(2, 3)};
      const Rational alpha = kScalars[rng.uniform(0, 7)];
      return normal_to_endo(NormalAut{alpha, sample_ginn(ctx, rng, coeff_bound)});
    }
    case SampleKind::inner:
      return exp_ad(sample_element(ctx, rng, coeff_bound));
  }
  throw UsageError("unknown sample kind");
}

std::string law_name(Law law) {
  switch (law) {
    case Law::abelian: return "abelian";
    case Law::nilpotent2: return "nilpotent2";
    case Law::metabelian: return "metabelian";
    case Law::class2_by_abelian: return "class2_by_abelian";
    case Law::jacobian_functorial: return "jacobian_functorial";
    case Law::ginn_normal_oracle: return "ginn_normal_oracle";
  }
  return "?";
}

std::optional<Law> parse_law(std::string_view name) {
  for (Law law : {Law::abelian, Law::nilpotent2, Law::metabelian, Law::class2_by_abelian, Law::jacobian_functorial,
                  Law::ginn_normal_oracle}) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

bool law_applies(Law law, const Context& ctx) {
  switch (law) {
    case Law::abelian: return ctx.c() == 2;
    case Law::nilpotent2: return ctx.c() == 3;
    case Law::metabelian: return ctx.c() >= 4 || (ctx.m() == 2 && ctx.c() == 2);
    case Law::class2_by_abelian: return ctx.m() == 2 && ctx.c() == 3;
    case Law::jacobian_functorial: return true;
    case Law::ginn_normal_oracle: return ctx.c() >= 2;
  }
  return false;
}

namespace {

struct TrialResult {
  bool ok = true;
  Json inputs;
};

Json maps_json(const std::vector<Endomorphism>& maps) {
  Json arr = Json::array();
  for (const auto& phi : maps) arr.push_back(automorphism_to_json(phi));
  return arr;
}

// Normal automorphisms of the context: scaled where scalars are normal, else GInn.
Endomorphism sample_normal(const Context& ctx, Rng& rng, int bound) {
  return sample_map(scalars_are_normal(ctx) ? SampleKind::normal_scaled : SampleKind::ginn, ctx, rng, bound);
}

TrialResult run_trial(Law law, const Context& ctx, Rng& rng, int bound) {
  const Endomorphism id = Endomorphism::identity(ctx);
  TrialResult r;
  switch (law) {
    case Law::abelian: {
      std::vector<Endomorphism> s{sample_map(SampleKind::ginn, ctx, rng, bound),
                                  sample_map(SampleKind::ginn, ctx, rng, bound)};
      r.inputs = maps_json(s);
      r.ok = group_commutator(s[0], s[1]) == id;
      break;
    }
    case Law::nilpotent2: {
      std::vector<Endomorphism> s;
      for (int k = 0; k < 3; ++k) s.push_back(sample_map(SampleKind::ginn, ctx, rng, bound));
      r.inputs = maps_json(s);
      r.ok = group_commutator(group_commutator(s[0], s[1]), s[2]) == id;
      break;
    }
    case Law::metabelian: {
      std::vector<Endomorphism> s;
      for (int k = 0; k < 4; ++k) s.push_back(sample_normal(ctx, rng, bound));
      r.inputs = maps_json(s);
      r.ok = group_commutator(group_commutator(s[0], s[1]), group_commutator(s[2], s[3])) == id;
      break;
    }
    case Law::class2_by_abelian: {
      std::vector<Endomorphism> s;
      for (int k = 0; k < 6; ++k) s.push_back(sample_map(SampleKind::normal_scaled, ctx, rng, bound));
      r.inputs = maps_json(s);
      const Endomorphism c1 = group_commutator(s[0], s[1]);
      const Endomorphism c2 = group_commutator(s[2], s[3]);
      const Endomorphism c3 = group_commutator(s[4], s[5]);
      r.ok = group_commutator(group_commutator(c1, c2), c3) == id;
      break;
    }
    case Law::jacobian_functorial: {
      std::vector<Endomorphism> s{sample_map(SampleKind::ia, ctx, rng, bound),
                                  sample_map(SampleKind::ia, ctx, rng, bound)};
      r.inputs = maps_json(s);
      const JacobianMatrix j0 = jacobian(s[0]);
      const Endomorphism inv = invert(s[0]);
      r.ok = jacobian(compose(s[0], s[1])) == j0 * jacobian(s[1]) &&
             jacobian(inv) * j0 == JacobianMatrix::identity(ctx) &&
             j0 * jacobian(inv) == JacobianMatrix::identity(ctx) && ia_from_jacobian(j0) == s[0] &&
             compose(s[0], inv) == id;
      break;
    }
    case Law::ginn_normal_oracle: {
      const Endomorphism g = sample_map(SampleKind::ginn, ctx, rng, bound);
      Json ideals = Json::array();
      r.ok = true;
      for (int k = 0; k < kIdealsPerTrial && r.ok; ++k) {
        const LieElement u = sample_element(ctx, rng, bound);
        ideals.push_back(print_element(u));
        r.ok = preserves_ideal(g, {u});
      }
      r.inputs = Json{{"map", automorphism_to_json(g)}, {"ideal_generators", ideals}};
      break;
    }
  }
  return r;
}

}  // namespace

LawReport check_law(Law law, const Context& ctx, int trials, std::uint64_t seed, int coeff_bound) {
  if (!law_applies(law, ctx)) {
    throw UsageError("law " + law_name(law) + " does not apply to L_{" + std::to_string(ctx.m()) + "," +
                     std::to_string(ctx.c()) + "}");
  }
  if (trials < 0) throw UsageError("trials must be nonnegative");
  if (coeff_bound < 1) throw UsageError("coeff_bound must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  LawReport report{law, ctx, trials, 0, seed, 0.0, std::nullopt};
  for (int t = 0; t < trials; ++t) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(t)));
    TrialResult r;
    try {
      r = run_trial(law, ctx, rng, coeff_bound);
    } catch (const Error& e) {
      r.ok = false;
      r.inputs = Json{{"error", e.what()}};
    }
    if (r.ok) {
      ++report.passed;
    } else if (!report.counterexample) {
      Json ce = r.inputs;
      if (!ce.is_object()) ce = Json{{"maps", r.inputs}};
      ce["trial"] = t;
      report.counterexample = std::move(ce);
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json law_report_to_json(const LawReport& r) {
  Json j;
  j["law"] = law_name(r.law);
  j["m"] = r.ctx.m();
  j["c"] = r.ctx.c();
  j["requested"] = r.requested;
  j["passed"] = r.passed;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  j["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
  return j;
}

}  // namespace lmc
