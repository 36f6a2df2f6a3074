#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibcoh/bimodule.hpp"
#include "leibcoh/linear.hpp"

namespace leibcoh {

struct Vertex {
  std::string label;
  BimoduleKind kind = BimoduleKind::trivial;
  std::optional<unsigned> weight;  // hemi quivers
  std::optional<Scalar> lambda;    // quivers over the 1-dimensional algebra

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Quiver {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted by (src, dst), one record per pair
  std::optional<unsigned> max_weight;  // truncation window of a hemi quiver

  std::size_t multiplicity(std::size_t src, std::size_t dst) const;
  std::optional<std::size_t> find(const std::string& label) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

// Vertices K, then M^a_λ and M^s_λ for each λ in the given order.
Quiver quiver_trivial(const std::vector<Scalar>& lambdas);

// Vertices V0, then V_m^s and V_m^a for 1 <= m <= max_weight, over V_n x_hs sl2.
// Arrows whose endpoints fall outside the window are dropped. With verify,
// every multiplicity is recomputed through nhat and a mismatch throws
// VerificationError.
Quiver quiver_hemi(unsigned n, unsigned max_weight, bool verify = false);

std::string to_dot(const Quiver& q);
std::string to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

}  // namespace leibcoh
