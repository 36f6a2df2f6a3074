#include "leibcoh/bimodule.hpp"

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

Mat combination(const StructureConstants& c, std::size_t i, std::size_t j, const std::vector<Mat>& ops,
                std::size_t n) {
  Mat out(n, n);
  for (std::size_t k = 0; k < c.dim(); ++k)
    if (sgn(c(i, j, k)) != 0) out += c(i, j, k) * ops[k];
  return out;
}

Bimodule from_left(const LeibnizAlgebra& h, const LeftModule& m, bool negate_right) {
  const LieQuotient q = lie_quotient(h);
  require_left_module(q.algebra, m);
  LeftModule lifted = lift_module(q, m);
  Bimodule b{m.dim, lifted.action, {}};
  for (const auto& l : lifted.action) b.right.push_back(negate_right ? -l : Mat(m.dim, m.dim));
  return b;
}

}  // namespace

std::string to_string(BimoduleKind kind) {
  switch (kind) {
    case BimoduleKind::trivial:
      return "trivial";
    case BimoduleKind::symmetric:
      return "symmetric";
    case BimoduleKind::antisymmetric:
      return "antisymmetric";
  }
  return "unknown";
}

OneDimBimodule::OneDimBimodule(BimoduleKind kind, Scalar lambda) : kind_(kind), lambda_(std::move(lambda)) {
  if (kind_ == BimoduleKind::trivial && sgn(lambda_) != 0) {
    throw InputError("the trivial bimodule has lambda = 0");
  }
  if (kind_ != BimoduleKind::trivial && sgn(lambda_) == 0) {
    throw InputError("a nontrivial one-dimensional bimodule needs lambda != 0");
  }
}

LeftModule OneDimBimodule::underlying() const { return LeftModule{1, {Mat{{lambda_}}}}; }

Bimodule OneDimBimodule::materialize() const {
  Scalar r = kind_ == BimoduleKind::symmetric ? Scalar(-lambda_) : Scalar(0);
  return Bimodule{1, {Mat{{lambda_}}}, {Mat{{r}}}};
}

bool check_bimodule(const LeibnizAlgebra& h, const Bimodule& b) {
  const std::size_t d = h.dim();
  const std::size_t n = b.dim;
  if (b.left.size() != d || b.right.size() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (b.left[i].rows() != n || b.left[i].cols() != n) return false;
    if (b.right[i].rows() != n || b.right[i].cols() != n) return false;
  }
  const auto& c = h.constants();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const Mat lxy = combination(c, x, y, b.left, n);
      const Mat rxy = combination(c, x, y, b.right, n);
      const Mat& lx = b.left[x];
      const Mat& ly = b.left[y];
      const Mat& rx = b.right[x];
      const Mat& ry = b.right[y];
      // (LLM) [x,y].m = x.(y.m) - y.(x.m)
      if (!(lxy == lx * ly - ly * lx)) return false;
      // (LML) (x.m).y = x.(m.y) - m.[x,y]
      if (!(ry * lx == lx * ry - rxy)) return false;
      // (MLL) (m.x).y = m.[x,y] - x.(m.y)
      if (!(ry * rx == rxy - lx * ry)) return false;
    }
  }
  return true;
}

Bimodule symmetric(const LeibnizAlgebra& h, const LeftModule& m) { return from_left(h, m, true); }

Bimodule antisymmetric(const LeibnizAlgebra& h, const LeftModule& m) { return from_left(h, m, false); }

SubspaceBasis antisymmetric_kernel(const Bimodule& b) {
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < b.left.size(); ++i) blocks.push_back(b.left[i] + b.right[i]);
  const SubspaceBasis kernel = blocks.empty() ? SubspaceBasis::zero(b.dim) : image_basis(hstack(blocks, b.dim));

  for (std::size_t i = 0; i < b.left.size(); ++i) {
    if (!contains(kernel, image_basis(b.left[i] * kernel.matrix())) ||
        !contains(kernel, image_basis(b.right[i] * kernel.matrix()))) {
      throw StabilityError("antisymmetric kernel is not stable under the actions");
    }
  }
  return kernel;
}

Bimodule sym_quotient(const Bimodule& b) {
  const SubspaceBasis full = SubspaceBasis::full(b.dim);
  const SubspaceBasis m0 = antisymmetric_kernel(b);
  Bimodule q{b.dim - m0.dim(), {}, {}};
  for (std::size_t i = 0; i < b.left.size(); ++i) {
    q.left.push_back(restrict_and_project(b.left[i], full, m0));
    q.right.push_back(restrict_and_project(b.right[i], full, m0));
    if (!(q.left.back() == -q.right.back())) throw StabilityError("sym_quotient is not symmetric");
  }
  return q;
}

SubspaceBasis right_invariants(const Bimodule& b) { return common_kernel(b.right, b.dim); }

SubspaceBasis m_zero_subspace(const Bimodule& b) {
  if (b.left.size() != 1) throw DimensionError("M^0 is defined for the 1-dimensional algebra only");
  return kernel_basis(b.left[0] + b.right[0]);
}

LeftModule left_module_over_quotient(const Bimodule& b, const LieQuotient& quotient) {
  LeftModule m{b.dim, {}};
  for (std::size_t k = 0; k < quotient.section.cols(); ++k) {
    Mat rho(b.dim, b.dim);
    for (std::size_t i = 0; i < quotient.section.rows(); ++i)
      if (sgn(quotient.section(i, k)) != 0) rho += quotient.section(i, k) * b.left[i];
    m.action.push_back(std::move(rho));
  }
  return m;
}

LeftModule hom_module_action(const LeibnizAlgebra& g, const LeftModule& u, const LeftModule& v) {
  if (u.action.size() != g.dim() || v.action.size() != g.dim()) {
    throw DimensionError("hom_module_action: modules are not over the given algebra");
  }
  LeftModule hom{u.dim * v.dim, {}};
  const Mat iu = Mat::identity(u.dim);
  const Mat iv = Mat::identity(v.dim);
  for (std::size_t x = 0; x < g.dim(); ++x) {
    hom.action.push_back(kron(v.action[x], iu) - kron(iv, u.action[x].transpose()));
  }
  return hom;
}

std::size_t intertwiner_dim(const LeibnizAlgebra& g, const LeftModule& u, const LeftModule& v) {
  return module_invariants(hom_module_action(g, u, v)).dim();
}

SubspaceBasis module_invariants(const LeftModule& m) { return common_kernel(m.action, m.dim); }

}  // namespace leibcoh
