#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibcoh/linear.hpp"

namespace leibcoh {

// Raw structure constants: [b_i, b_j] = sum_k c(i,j,k) b_k. Not validated.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of y -> [b_i, y].
  Mat left_multiplication(std::size_t i) const;
  Mat left_multiplication(const Vec& x) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

// True iff [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples.
bool check_left_leibniz(const StructureConstants& c);

// A left Leibniz algebra. The constructor rejects constants that violate the
// left Leibniz identity, so every instance is valid.
class LeibnizAlgebra {
 public:
  explicit LeibnizAlgebra(StructureConstants constants, std::vector<std::string> labels = {});

  std::size_t dim() const { return c_.dim(); }
  const StructureConstants& constants() const { return c_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Vec bracket(const Vec& x, const Vec& y) const { return c_.bracket(x, y); }
  Mat left_multiplication(std::size_t i) const { return c_.left_multiplication(i); }

 private:
  StructureConstants c_;
  std::vector<std::string> labels_;
};

// A Leibniz algebra whose bracket is also antisymmetric (hence Jacobi).
class LieAlgebra : public LeibnizAlgebra {
 public:
  explicit LieAlgebra(StructureConstants constants, std::vector<std::string> labels = {});
};

// rho_i is the action of the i-th basis vector of the acting algebra.
struct LeftModule {
  std::size_t dim = 0;
  std::vector<Mat> action;
};

// rho_[x,y] = rho_x rho_y - rho_y rho_x on basis pairs (and shapes agree).
bool check_left_module(const LeibnizAlgebra& a, const LeftModule& m);
void require_left_module(const LeibnizAlgebra& a, const LeftModule& m);

LeftModule trivial_module(const LeibnizAlgebra& a, std::size_t dim);
LeftModule direct_sum(const std::vector<LeftModule>& parts);

// Span of the squares [x,x] (via the polarized generators).
SubspaceBasis leibniz_kernel(const LeibnizAlgebra& a);

// h_Lie = h / Leib(h) in the complement basis of Leib(h). projection maps h
// onto the quotient; section maps the quotient basis back onto the chosen
// complement vectors of h.
struct LieQuotient {
  LieAlgebra algebra;
  Mat projection;
  Mat section;
  SubspaceBasis kernel;
};

LieQuotient lie_quotient(const LeibnizAlgebra& a);

// M x_hs g on the basis (module vectors, then g basis), bracket
// [(a,x),(b,y)] = (x.b, [x,y]).
LeibnizAlgebra hemi_semidirect(const LieAlgebra& g, const LeftModule& m);

// K = <e> with zero bracket.
LeibnizAlgebra trivial_algebra();

// Action of h_Lie on h through left multiplication by section vectors.
LeftModule adjoint_module(const LeibnizAlgebra& h, const LieQuotient& quotient);

// Pulls an h_Lie-module back to h along the projection (Leib(h) acts by 0).
LeftModule lift_module(const LieQuotient& quotient, const LeftModule& m);

}  // namespace leibcoh
