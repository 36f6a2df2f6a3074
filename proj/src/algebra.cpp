#include "leibcoh/algebra.hpp"

#include <string>

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool is_antisymmetric(const StructureConstants& c) {
  const std::size_t d = c.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (c(i, j, k) != -c(j, i, k)) return false;
  return true;
}

}  // namespace

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: vector length mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn((*this)(i, j, k)) != 0) out[k] += xy * (*this)(i, j, k);
    }
  }
  return out;
}

Mat StructureConstants::left_multiplication(std::size_t i) const {
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

Mat StructureConstants::left_multiplication(const Vec& x) const {
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (sgn(x[i]) != 0) m += x[i] * left_multiplication(i);
  return m;
}

bool check_left_leibniz(const StructureConstants& c) {
  const std::size_t d = c.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec x = unit(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec y = unit(d, j);
      const Vec xy = c.bracket(x, y);
      for (std::size_t k = 0; k < d; ++k) {
        const Vec z = unit(d, k);
        const Vec lhs = c.bracket(x, c.bracket(y, z));
        const Vec rhs = add(c.bracket(xy, z), c.bracket(y, c.bracket(x, z)));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

LeibnizAlgebra::LeibnizAlgebra(StructureConstants constants, std::vector<std::string> labels)
    : c_(std::move(constants)), labels_(std::move(labels)) {
  if (!check_left_leibniz(c_)) throw ModuleAxiomError("structure constants violate the left Leibniz identity");
  if (!labels_.empty() && labels_.size() != c_.dim()) throw InputError("label count does not match dimension");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < c_.dim(); ++i) labels_.push_back("b" + std::to_string(i));
  }
}

LieAlgebra::LieAlgebra(StructureConstants constants, std::vector<std::string> labels)
    : LeibnizAlgebra(std::move(constants), std::move(labels)) {
  if (!is_antisymmetric(this->constants())) throw ModuleAxiomError("Lie algebra bracket is not antisymmetric");
}

bool check_left_module(const LeibnizAlgebra& a, const LeftModule& m) {
  const std::size_t d = a.dim();
  if (m.action.size() != d) return false;
  for (const auto& rho : m.action)
    if (rho.rows() != m.dim || rho.cols() != m.dim) return false;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Mat lhs(m.dim, m.dim);
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(a.constants()(i, j, k)) != 0) lhs += a.constants()(i, j, k) * m.action[k];
      if (!(lhs == m.action[i] * m.action[j] - m.action[j] * m.action[i])) return false;
    }
  }
  return true;
}

void require_left_module(const LeibnizAlgebra& a, const LeftModule& m) {
  if (!check_left_module(a, m)) throw ModuleAxiomError("action matrices violate the left module identity");
}

LeftModule trivial_module(const LeibnizAlgebra& a, std::size_t dim) {
  return LeftModule{dim, std::vector<Mat>(a.dim(), Mat(dim, dim))};
}

LeftModule direct_sum(const std::vector<LeftModule>& parts) {
  if (parts.empty()) throw DimensionError("direct_sum of no modules");
  const std::size_t d = parts.front().action.size();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.action.size() != d) throw DimensionError("direct_sum: modules over different algebras");
    total += p.dim;
  }
  LeftModule out{total, std::vector<Mat>(d, Mat(total, total))};
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < p.dim; ++i)
        for (std::size_t j = 0; j < p.dim; ++j) out.action[k](offset + i, offset + j) = p.action[k](i, j);
    offset += p.dim;
  }
  return out;
}

SubspaceBasis leibniz_kernel(const LeibnizAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Vec> squares;
  for (std::size_t i = 0; i < d; ++i) {
    const Vec x = unit(d, i);
    squares.push_back(a.bracket(x, x));
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec y = unit(d, j);
      squares.push_back(add(a.bracket(x, y), a.bracket(y, x)));
    }
  }
  SubspaceBasis kernel = span_of(d, squares);

  // Two-sided ideal check.
  for (std::size_t i = 0; i < d; ++i) {
    const Vec x = unit(d, i);
    std::vector<Vec> products;
    for (const auto& v : kernel.vectors) {
      products.push_back(a.bracket(x, v));
      products.push_back(a.bracket(v, x));
    }
    if (!products.empty() && !coordinates(kernel, Mat::from_columns(d, products))) {
      throw Error("internal: Leibniz kernel is not a two-sided ideal");
    }
  }
  return kernel;
}

LieQuotient lie_quotient(const LeibnizAlgebra& a) {
  const std::size_t d = a.dim();
  SubspaceBasis kernel = leibniz_kernel(a);
  const std::size_t k = kernel.dim();
  const std::size_t r = d - k;

  std::vector<Vec> candidates = kernel.vectors;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(unit(d, i));
  const SubspaceBasis adapted = span_of(d, candidates);  // kernel first, then unit vectors

  Mat section(d, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < d; ++i) section(i, j) = adapted.vectors[k + j][i];

  const Mat inverse = *coordinates(adapted, Mat::identity(d));
  Mat projection(r, d);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < d; ++j) projection(i, j) = inverse(k + i, j);

  StructureConstants qc(r);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < r; ++x) {
    const Vec sx = section.column(x);
    for (std::size_t y = 0; y < r; ++y) {
      const Vec image = projection * a.bracket(sx, section.column(y));
      for (std::size_t z = 0; z < r; ++z) qc(x, y, z) = image[z];
    }
    // Label the quotient basis after the lifted basis vector when it is a unit vector.
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(sx[i]) != 0) ++nonzero, where = i;
    labels.push_back(nonzero == 1 ? a.labels()[where] : "q" + std::to_string(x));
  }
  return LieQuotient{LieAlgebra(std::move(qc), std::move(labels)), std::move(projection), std::move(section),
                     std::move(kernel)};
}

LeibnizAlgebra hemi_semidirect(const LieAlgebra& g, const LeftModule& m) {
  require_left_module(g, m);
  const std::size_t dm = m.dim;
  const std::size_t dg = g.dim();
  StructureConstants c(dm + dg);
  for (std::size_t x = 0; x < dg; ++x) {
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t l = 0; l < dm; ++l) c(dm + x, j, l) = m.action[x](l, j);
    for (std::size_t y = 0; y < dg; ++y)
      for (std::size_t z = 0; z < dg; ++z) c(dm + x, dm + y, dm + z) = g.constants()(x, y, z);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dm; ++i) labels.push_back("v" + std::to_string(i));
  for (const auto& l : g.labels()) labels.push_back(l);
  LeibnizAlgebra h(std::move(c), std::move(labels));

  // Every square lies in the module summand.
  for (const auto& v : leibniz_kernel(h).vectors)
    for (std::size_t i = dm; i < dm + dg; ++i)
      if (sgn(v[i]) != 0) throw Error("internal: hemi-semidirect square outside the module summand");
  return h;
}

LeibnizAlgebra trivial_algebra() { return LeibnizAlgebra(StructureConstants(1), {"e"}); }

LeftModule adjoint_module(const LeibnizAlgebra& h, const LieQuotient& quotient) {
  LeftModule m{h.dim(), {}};
  for (std::size_t k = 0; k < quotient.section.cols(); ++k)
    m.action.push_back(h.constants().left_multiplication(quotient.section.column(k)));
  return m;
}

LeftModule lift_module(const LieQuotient& quotient, const LeftModule& m) {
  const std::size_t r = quotient.projection.rows();
  const std::size_t d = quotient.projection.cols();
  if (m.action.size() != r) throw DimensionError("lift_module: module is not over the Lie quotient");
  LeftModule lifted{m.dim, std::vector<Mat>(d, Mat(m.dim, m.dim))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (sgn(quotient.projection(k, i)) != 0) lifted.action[i] += quotient.projection(k, i) * m.action[k];
  return lifted;
}

}  // namespace leibcoh
