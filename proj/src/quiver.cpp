#include "leibcoh/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "leibcoh/errors.hpp"
#include "leibcoh/ext.hpp"

namespace leibcoh {

namespace {

using ordered_json = nlohmann::ordered_json;

BimoduleKind kind_from_string(const std::string& s) {
  if (s == "trivial") return BimoduleKind::trivial;
  if (s == "symmetric") return BimoduleKind::symmetric;
  if (s == "antisymmetric") return BimoduleKind::antisymmetric;
  throw InputError("unknown vertex kind '" + s + "'");
}

void add_edge(Quiver& q, std::size_t src, std::size_t dst, std::size_t mult) {
  if (mult > 0) q.edges.push_back(Edge{src, dst, mult});
}

void sort_edges(Quiver& q) {
  std::sort(q.edges.begin(), q.edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
}

std::string quoted(const std::string& s) { return ordered_json(s).dump(); }

}  // namespace

std::size_t Quiver::multiplicity(std::size_t src, std::size_t dst) const {
  for (const auto& e : edges)
    if (e.src == src && e.dst == dst) return e.mult;
  return 0;
}

std::optional<std::size_t> Quiver::find(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].label == label) return i;
  return std::nullopt;
}

Quiver quiver_trivial(const std::vector<Scalar>& lambdas) {
  if (lambdas.empty()) throw InputError("at least one lambda is required");
  std::set<Scalar> seen;
  for (const auto& l : lambdas) {
    if (sgn(l) == 0) throw InputError("lambda must be nonzero (lambda = 0 is the trivial vertex)");
    if (!seen.insert(l).second) throw InputError("duplicate lambda " + format_scalar(l));
  }

  Quiver q;
  std::vector<OneDimBimodule> simples{OneDimBimodule::trivial()};
  q.vertices.push_back(Vertex{"K", BimoduleKind::trivial, std::nullopt, Scalar(0)});
  for (const auto& l : lambdas) {
    for (BimoduleKind kind : {BimoduleKind::antisymmetric, BimoduleKind::symmetric}) {
      simples.emplace_back(kind, l);
      const std::string tag = kind == BimoduleKind::antisymmetric ? "a" : "s";
      q.vertices.push_back(Vertex{"M^" + tag + "_" + format_scalar(l), kind, std::nullopt, l});
    }
  }
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < simples.size(); ++j) add_edge(q, i, j, ext_trivial_closed(simples[i], simples[j], 1)[1]);
  sort_edges(q);
  return q;
}

Quiver quiver_hemi(unsigned n, unsigned max_weight, bool verify) {
  if (n == 0) throw InputError("n >= 1 required");
  Quiver q;
  q.max_weight = max_weight;
  std::vector<HemiSimple> simples{HemiSimple{}};
  q.vertices.push_back(Vertex{"V0", BimoduleKind::trivial, 0u, std::nullopt});
  for (unsigned m = 1; m <= max_weight; ++m) {
    simples.push_back(HemiSimple::make(BimoduleKind::symmetric, m));
    q.vertices.push_back(Vertex{"V" + std::to_string(m) + "^s", BimoduleKind::symmetric, m, std::nullopt});
    simples.push_back(HemiSimple::make(BimoduleKind::antisymmetric, m));
    q.vertices.push_back(Vertex{"V" + std::to_string(m) + "^a", BimoduleKind::antisymmetric, m, std::nullopt});
  }
  for (std::size_t i = 0; i < simples.size(); ++i) {
    for (std::size_t j = 0; j < simples.size(); ++j) {
      const std::size_t mult = ext_simple_closed(n, simples[i], simples[j], 1);
      if (verify && simples[i].kind != BimoduleKind::antisymmetric && simples[j].kind != BimoduleKind::symmetric) {
        const std::size_t oracle = ext1_hemi_oracle(n, simples[i], simples[j]);
        if (oracle != mult) {
          throw VerificationError("arrow count " + q.vertices[i].label + " -> " + q.vertices[j].label + ": closed form " +
                                  std::to_string(mult) + ", oracle " + std::to_string(oracle));
        }
      }
      add_edge(q, i, j, mult);
    }
  }
  sort_edges(q);
  return q;
}

std::string to_dot(const Quiver& q) {
  if (q.vertices.empty() && q.edges.empty()) return "digraph G { }";
  std::ostringstream out;
  out << "digraph G {\n";
  if (q.max_weight) out << "  // weights truncated at " << *q.max_weight << "\n";
  for (const auto& v : q.vertices) out << "  " << quoted(v.label) << ";\n";
  std::vector<Edge> edges = q.edges;
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
  for (const auto& e : edges)
    for (std::size_t k = 0; k < e.mult; ++k)
      out << "  " << quoted(q.vertices[e.src].label) << " -> " << quoted(q.vertices[e.dst].label) << ";\n";
  out << "}";
  return out.str();
}

std::string to_json(const Quiver& q) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : q.vertices) {
    ordered_json jv;
    jv["label"] = v.label;
    jv["kind"] = to_string(v.kind);
    if (v.weight) jv["weight"] = *v.weight;
    if (v.lambda) jv["lambda"] = format_scalar(*v.lambda);
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : q.edges) j["edges"].push_back(ordered_json{{"src", e.src}, {"dst", e.dst}, {"mult", e.mult}});
  if (q.max_weight) j["truncation"] = ordered_json{{"max_weight", *q.max_weight}};
  return j.dump();
}

Quiver quiver_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("quiver JSON: ") + e.what());
  }
  Quiver q;
  try {
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.label = jv.at("label").get<std::string>();
      v.kind = kind_from_string(jv.at("kind").get<std::string>());
      if (jv.contains("weight")) v.weight = jv.at("weight").get<unsigned>();
      if (jv.contains("lambda")) v.lambda = parse_scalar(jv.at("lambda").get<std::string>());
      q.vertices.push_back(std::move(v));
    }
    for (const auto& je : j.at("edges")) {
      Edge e{je.at("src").get<std::size_t>(), je.at("dst").get<std::size_t>(), je.at("mult").get<std::size_t>()};
      if (e.src >= q.vertices.size() || e.dst >= q.vertices.size() || e.mult == 0) {
        throw InputError("quiver JSON: bad edge record");
      }
      q.edges.push_back(e);
    }
    if (j.contains("truncation")) q.max_weight = j.at("truncation").at("max_weight").get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("quiver JSON: ") + e.what());
  }
  return q;
}

}  // namespace leibcoh
