#pragma once

#include <string>
#include <vector>

#include "lmc/endo.hpp"
#include "lmc/normal.hpp"
#include "lmc/syntax.hpp"

namespace lmc {

enum class Shape { theta, psi, df };

// Exact predicates on N = J - I. The "mod Omega^{c+1}" conditions are evaluated at cap c.
//  theta: IA form, N(1,1) = 0, N(i,1) free of t_1 for i >= 2, N(1,2) free of t_2.
//  psi:   J is the generalized-inner pattern of some q with q_i constant-free and
//         depending only on t_i..t_m.
//  df:    N(1,1) = s free of t_1, N(i,1) = t_1 q_i(t_i..t_m) + r_i(t_2..t_m),
//         s + sum t_i q_i = 0, sum t_i r_i = 0, and N(1,2) has no t_2 term.
bool shape_check(const JacobianMatrix& j, Shape shape);
// Diagnostics for the psi sum condition (sum_{j>=2} q_j = 0), which is not enforced.
std::vector<std::string> psi_shape_warnings(const JacobianMatrix& j);

struct ThetaForm {
  Endomorphism theta;
  JacobianMatrix jacobian;
  // phi = compose(ginn_to_endo(conjugator), theta).
  GInnAut conjugator;
};

struct PsiForm {
  Endomorphism psi;
  GInnAut q;
  JacobianMatrix jacobian;
  // g = compose(exp_ad(conjugator), psi).
  LieElement conjugator;
};

// Canonical representative of the coset IN * phi.
ThetaForm reduce_mod_in(const Endomorphism& phi);
// Canonical representative of the coset Inn * g.
PsiForm reduce_mod_inn_normal(const GInnAut& g);

enum class Subgroup { ginn, inn };
bool same_coset(const Endomorphism& phi, const Endomorphism& psi, Subgroup subgroup);

Json theta_form_to_json(const ThetaForm& t);
Json psi_form_to_json(const PsiForm& p);

}  // namespace lmc
