#include "leibcoh/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Scalar scalar_from(const json& v) {
  if (v.is_number_integer()) return Scalar(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  throw InputError("matrix entries must be integers or \"p/q\" strings");
}

Mat matrix_from(const json& v, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw InputError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n) throw InputError("matrix row has the wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar_from(v[i][j]);
  }
  return m;
}

json matrix_to(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() == 1 && m(i, j).get_num().fits_slong_p())
        row.push_back(m(i, j).get_num().get_si());
      else
        row.push_back(format_scalar(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LeibnizAlgebra algebra_from_json(const std::string& text) {
  const json j = parse(text, "algebra JSON");
  try {
    const std::size_t d = j.at("dim").get<std::size_t>();
    StructureConstants c(d);
    const json& br = j.at("bracket");
    if (!br.is_array() || br.size() > d) throw InputError("bracket must have at most dim rows");
    for (std::size_t i = 0; i < br.size(); ++i) {
      if (!br[i].is_array() || br[i].size() > d) throw InputError("bracket row must have at most dim entries");
      for (std::size_t k = 0; k < br[i].size(); ++k) {
        for (const auto& term : br[i][k]) {
          if (!term.is_array() || term.size() != 3) throw InputError("bracket terms are [k, num, den]");
          const std::size_t idx = term[0].get<std::size_t>();
          const long long num = term[1].get<long long>();
          const long long den = term[2].get<long long>();
          if (idx >= d) throw InputError("bracket index out of range");
          if (den == 0) throw InputError("zero denominator in bracket");
          Scalar coeff(std::to_string(num) + "/" + std::to_string(den));
          coeff.canonicalize();
          c(i, k, idx) += coeff;
        }
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
      if (labels.size() != d) throw InputError("labels must have dim entries");
    }
    return LeibnizAlgebra(std::move(c), std::move(labels));
  } catch (const json::exception& e) {
    throw InputError(std::string("algebra JSON: ") + e.what());
  }
}

std::string algebra_to_json(const LeibnizAlgebra& h) {
  const std::size_t d = h.dim();
  const auto& c = h.constants();
  json br = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < d; ++k) {
      json terms = json::array();
      for (std::size_t l = 0; l < d; ++l) {
        if (sgn(c(i, k, l)) == 0) continue;
        terms.push_back(json::array({l, std::stoll(c(i, k, l).get_num().get_str()),
                                     std::stoll(c(i, k, l).get_den().get_str())}));
      }
      row.push_back(std::move(terms));
    }
    br.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["dim"] = d;
  out["bracket"] = br;
  out["labels"] = h.labels();
  return out.dump();
}

Bimodule bimodule_from_json(const LeibnizAlgebra& h, const std::string& text) {
  const json j = parse(text, "bimodule JSON");
  Bimodule b;
  try {
    b.dim = j.at("dim").get<std::size_t>();
    const json& l = j.at("left");
    const json& r = j.at("right");
    if (l.size() != h.dim() || r.size() != h.dim()) {
      throw InputError("bimodule needs one left and one right matrix per algebra basis vector");
    }
    for (std::size_t i = 0; i < h.dim(); ++i) {
      b.left.push_back(matrix_from(l[i], b.dim));
      b.right.push_back(matrix_from(r[i], b.dim));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bimodule JSON: ") + e.what());
  }
  if (!check_bimodule(h, b)) throw ModuleAxiomError("bimodule axioms (LLM), (LML), (MLL) fail");
  return b;
}

std::string bimodule_to_json(const Bimodule& b) {
  nlohmann::ordered_json out;
  out["dim"] = b.dim;
  json l = json::array(), r = json::array();
  for (const auto& m : b.left) l.push_back(matrix_to(m));
  for (const auto& m : b.right) r.push_back(matrix_to(m));
  out["left"] = l;
  out["right"] = r;
  return out.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace leibcoh
