#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "lmc/endo.hpp"
#include "lmc/normal.hpp"
#include "lmc/syntax.hpp"

namespace lmc {

// Deterministic generator; bounded draws do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

enum class SampleKind { element, ginn, ia, normal_scaled, inner };

LieElement sample_element(const Context& ctx, Rng& rng, int coeff_bound = 3);
// Random element of L' (no linear part).
LieElement sample_derived(const Context& ctx, Rng& rng, int coeff_bound = 3);
GInnAut sample_ginn(const Context& ctx, Rng& rng, int coeff_bound = 3);
// Endomorphism-valued kinds: ginn, ia, normal_scaled, inner.
Endomorphism sample_map(SampleKind kind, const Context& ctx, Rng& rng, int coeff_bound = 3);
// Contexts where scalar multiples of generalized inner maps are normal.
bool scalars_are_normal(const Context& ctx);

enum class Law { abelian, nilpotent2, metabelian, class2_by_abelian, jacobian_functorial, ginn_normal_oracle };

std::string law_name(Law law);
std::optional<Law> parse_law(std::string_view name);
bool law_applies(Law law, const Context& ctx);

struct LawReport {
  Law law;
  Context ctx;
  int requested = 0;
  int passed = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::optional<Json> counterexample;
};

// Throws UsageError when the law does not apply to ctx.
LawReport check_law(Law law, const Context& ctx, int trials, std::uint64_t seed, int coeff_bound = 3);
Json law_report_to_json(const LawReport& r);

}  // namespace lmc
