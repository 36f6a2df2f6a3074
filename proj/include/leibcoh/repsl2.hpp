#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "leibcoh/algebra.hpp"

namespace leibcoh {

// sl2 on the basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
const LieAlgebra& sl2();

// A validated sl2-module (action list ordered e, h, f).
class SL2Module {
 public:
  explicit SL2Module(LeftModule underlying);

  std::size_t dim() const { return m_.dim; }
  const LeftModule& underlying() const { return m_; }
  const Mat& e() const { return m_.action[0]; }
  const Mat& h() const { return m_.action[1]; }
  const Mat& f() const { return m_.action[2]; }

 private:
  LeftModule m_;
};

// Highest weight -> multiplicity.
struct WeightMultiset {
  std::map<unsigned, std::size_t> counts;

  std::size_t dimension() const;
  std::size_t multiplicity(unsigned weight) const;
  std::string to_string() const;  // "{4:1, 2:1, 0:1}"-style, highest weight first

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

// V_m on v_0..v_m: h v_k = (m-2k) v_k, e v_k = k(m-k+1) v_{k-1}, f v_k = v_{k+1}.
SL2Module simple_module(unsigned m);
SL2Module tensor(const SL2Module& u, const SL2Module& v);
SL2Module dual(const SL2Module& v);
SL2Module direct_sum(const std::vector<SL2Module>& parts);
// Direct sum of simple modules with the given multiplicities.
SL2Module module_from_weights(const WeightMultiset& w);

// mult(V_m) = dim ker(h - m) - dim ker(h - (m+2)).
WeightMultiset decompose(const SL2Module& v);
WeightMultiset clebsch_gordan(unsigned m, unsigned n);
std::size_t hom_dim(const WeightMultiset& a, const WeightMultiset& b);

}  // namespace leibcoh
