#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/linear.hpp"

namespace leibcoh {

// left[i] is m -> b_i . m, right[i] is m -> m . b_i.
struct Bimodule {
  std::size_t dim = 0;
  std::vector<Mat> left;
  std::vector<Mat> right;
};

enum class BimoduleKind { trivial, symmetric, antisymmetric };

std::string to_string(BimoduleKind kind);

// A simple bimodule over the 1-dimensional algebra: e.m = lambda m, with
// m.e = -lambda m (symmetric), 0 (antisymmetric) or both zero (trivial).
class OneDimBimodule {
 public:
  OneDimBimodule(BimoduleKind kind, Scalar lambda);
  static OneDimBimodule trivial() { return OneDimBimodule(BimoduleKind::trivial, 0); }

  BimoduleKind kind() const { return kind_; }
  const Scalar& lambda() const { return lambda_; }

  LeftModule underlying() const;  // over trivial_algebra()
  Bimodule materialize() const;

  friend bool operator==(const OneDimBimodule&, const OneDimBimodule&) = default;

 private:
  BimoduleKind kind_;
  Scalar lambda_;
};

// (LLM), (LML) and (MLL) on all basis pairs.
bool check_bimodule(const LeibnizAlgebra& h, const Bimodule& b);

// M^s and M^a for an h_Lie-module m (lifted to h along the Lie quotient).
Bimodule symmetric(const LeibnizAlgebra& h, const LeftModule& m);
Bimodule antisymmetric(const LeibnizAlgebra& h, const LeftModule& m);

// M_0 = span{x.m + m.x}.
SubspaceBasis antisymmetric_kernel(const Bimodule& b);
// M / M_0 with the induced actions.
Bimodule sym_quotient(const Bimodule& b);
// M^h = common kernel of the right actions.
SubspaceBasis right_invariants(const Bimodule& b);
// {m | e.m + m.e = 0}; the algebra must be 1-dimensional.
SubspaceBasis m_zero_subspace(const Bimodule& b);

// The left h-action of a bimodule, viewed as an h_Lie-module through the
// section of the quotient.
LeftModule left_module_over_quotient(const Bimodule& b, const LieQuotient& quotient);

// Hom(U, V) with (x.f)(u) = x.f(u) - f(x.u). The basis is E_ij (u_j -> v_i)
// in row-major (i, j) order, so rho_x = kron(rho^V_x, I) - kron(I, (rho^U_x)^T).
LeftModule hom_module_action(const LeibnizAlgebra& g, const LeftModule& u, const LeftModule& v);

// dim { f | rho^V_x f = f rho^U_x for all basis x }.
std::size_t intertwiner_dim(const LeibnizAlgebra& g, const LeftModule& u, const LeftModule& v);

// Invariants of a module: the common kernel of its action matrices.
SubspaceBasis module_invariants(const LeftModule& m);

}  // namespace leibcoh
