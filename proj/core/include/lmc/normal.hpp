#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmc/endo.hpp"
#include "lmc/lie_element.hpp"
#include "lmc/syntax.hpp"

namespace lmc {

// Generalized inner automorphism x_i -> x_i + sum_j [x_i, x_j] f_j(ad x_1, ..., ad x_m).
// Parameters carry cap c-2 (cap 0 and all zero when c = 1).
class GInnAut {
 public:
  GInnAut(const Context& ctx, std::vector<TruncPoly> f);
  static GInnAut identity(const Context& ctx);
  static int param_cap(const Context& ctx) { return ctx.c() >= 2 ? ctx.c() - 2 : 0; }

  const Context& context() const { return ctx_; }
  const std::vector<TruncPoly>& f() const { return f_; }
  const TruncPoly& f(int j) const { return f_[static_cast<std::size_t>(j)]; }
  bool is_identity() const;

  friend bool operator==(const GInnAut&, const GInnAut&) = default;

 private:
  Context ctx_;
  std::vector<TruncPoly> f_;
};

struct NormalAut {
  Rational alpha;
  GInnAut g;
};

struct NormalityVerdict {
  bool normal = false;
  std::optional<NormalAut> aut;
  // Generators of an ideal the map does not preserve; may be empty for NotNormal.
  std::vector<LieElement> witness;
  std::string reason;
};

Endomorphism ginn_to_endo(const GInnAut& g);
// outer o inner: inner is applied first, matching compose().
GInnAut ginn_compose(const GInnAut& outer, const GInnAut& inner);
GInnAut ginn_invert(const GInnAut& g);
LieElement ginn_apply(const GInnAut& g, const LieElement& u);
JacobianMatrix ginn_jacobian(const GInnAut& g);
// x_i -> alpha * (image of x_i under g).
Endomorphism normal_to_endo(const NormalAut& n);

std::optional<GInnAut> recognize_ginn(const Endomorphism& phi);
std::optional<LieElement> recognize_inner(const Endomorphism& phi);

bool preserves_ideal(const Endomorphism& phi, const std::vector<LieElement>& gens);
// Ideal generator refuting alpha != 1 for contexts other than (2,2), (2,3) and c = 1.
std::vector<LieElement> scalar_obstruction_witness(const Context& ctx);
NormalityVerdict decide_normal(const Endomorphism& phi, bool search_witness = true);

Json verdict_to_json(const NormalityVerdict& v);

}  // namespace lmc
