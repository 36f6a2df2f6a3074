#include "leibcoh/repsl2.hpp"

#include <sstream>

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

LieAlgebra make_sl2() {
  StructureConstants c(3);
  constexpr std::size_t e = 0, h = 1, f = 2;
  c(h, e, e) = 2;
  c(e, h, e) = -2;
  c(h, f, f) = -2;
  c(f, h, f) = 2;
  c(e, f, h) = 1;
  c(f, e, h) = -1;
  return LieAlgebra(std::move(c), {"e", "h", "f"});
}

std::size_t eigenspace_dim(const Mat& m, long eigenvalue) {
  Mat shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= eigenvalue;
  return m.rows() - rank(shifted);
}

}  // namespace

const LieAlgebra& sl2() {
  static const LieAlgebra algebra = make_sl2();
  return algebra;
}

SL2Module::SL2Module(LeftModule underlying) : m_(std::move(underlying)) {
  if (m_.action.size() != 3) throw DimensionError("an sl2-module needs three action matrices");
  require_left_module(sl2(), m_);
}

std::size_t WeightMultiset::dimension() const {
  std::size_t d = 0;
  for (const auto& [w, mult] : counts) d += (w + 1) * mult;
  return d;
}

std::size_t WeightMultiset::multiplicity(unsigned weight) const {
  auto it = counts.find(weight);
  return it == counts.end() ? 0 : it->second;
}

std::string WeightMultiset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (!first) out << ", ";
    out << it->first << ':' << it->second;
    first = false;
  }
  out << '}';
  return out.str();
}

SL2Module simple_module(unsigned m) {
  const std::size_t n = m + 1;
  Mat e(n, n), h(n, n), f(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    h(k, k) = static_cast<long>(m) - 2 * static_cast<long>(k);
    if (k > 0) e(k - 1, k) = static_cast<long>(k * (m - k + 1));
    if (k < m) f(k + 1, k) = 1;
  }
  return SL2Module(LeftModule{n, {e, h, f}});
}

SL2Module tensor(const SL2Module& u, const SL2Module& v) {
  const Mat iu = Mat::identity(u.dim());
  const Mat iv = Mat::identity(v.dim());
  LeftModule t{u.dim() * v.dim(), {}};
  for (std::size_t x = 0; x < 3; ++x) {
    t.action.push_back(kron(u.underlying().action[x], iv) + kron(iu, v.underlying().action[x]));
  }
  return SL2Module(std::move(t));
}

SL2Module dual(const SL2Module& v) {
  LeftModule d{v.dim(), {}};
  for (const auto& rho : v.underlying().action) d.action.push_back(-rho.transpose());
  return SL2Module(std::move(d));
}

SL2Module direct_sum(const std::vector<SL2Module>& parts) {
  std::vector<LeftModule> raw;
  for (const auto& p : parts) raw.push_back(p.underlying());
  return SL2Module(leibcoh::direct_sum(raw));
}

SL2Module module_from_weights(const WeightMultiset& w) {
  std::vector<SL2Module> parts;
  for (auto it = w.counts.rbegin(); it != w.counts.rend(); ++it)
    for (std::size_t i = 0; i < it->second; ++i) parts.push_back(simple_module(it->first));
  if (parts.empty()) return SL2Module(trivial_module(sl2(), 0));
  return direct_sum(parts);
}

WeightMultiset decompose(const SL2Module& v) {
  const std::size_t n = v.dim();
  const long bound = static_cast<long>(n);
  std::vector<std::size_t> eig(2 * n + 3, 0);  // index = eigenvalue + bound
  std::size_t total = 0;
  for (long lambda = -bound; lambda <= bound; ++lambda) {
    eig[static_cast<std::size_t>(lambda + bound)] = eigenspace_dim(v.h(), lambda);
    total += eig[static_cast<std::size_t>(lambda + bound)];
  }
  if (total != n) {
    throw NonIntegralWeightError("h does not act diagonalizably with integer eigenvalues");
  }
  WeightMultiset w;
  for (long m = 0; m <= bound; ++m) {
    const std::size_t here = eig[static_cast<std::size_t>(m + bound)];
    const std::size_t above = m + 2 <= bound ? eig[static_cast<std::size_t>(m + 2 + bound)] : 0;
    if (here < above) throw NonIntegralWeightError("weight multiplicities are not those of a semisimple module");
    if (here > above) w.counts[static_cast<unsigned>(m)] = here - above;
  }
  if (w.dimension() != n) throw NonIntegralWeightError("weight decomposition does not account for the dimension");
  return w;
}

WeightMultiset clebsch_gordan(unsigned m, unsigned n) {
  WeightMultiset w;
  const unsigned low = m > n ? m - n : n - m;
  for (unsigned k = low; k <= m + n; k += 2) w.counts[k] = 1;
  return w;
}

std::size_t hom_dim(const WeightMultiset& a, const WeightMultiset& b) {
  std::size_t d = 0;
  for (const auto& [w, mult] : a.counts) d += mult * b.multiplicity(w);
  return d;
}

}  // namespace leibcoh
