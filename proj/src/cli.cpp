#include "leibcoh/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibcoh/cohomology.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/ext.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/quiver.hpp"
#include "leibcoh/repsl2.hpp"

namespace leibcoh::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void print_table(std::ostream& out, const std::string& prefix, const std::vector<std::size_t>& dims) {
  std::size_t width = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) width = std::max(width, (prefix + std::to_string(i)).size());
  for (std::size_t i = 0; i < dims.size(); ++i)
    out << std::left << std::setw(static_cast<int>(width)) << prefix + std::to_string(i) << "  " << dims[i] << "\n";
}

ordered_json vector_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(format_scalar(x));
  return a;
}

std::string vector_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
  return s + ")";
}

// Cocycles completing a coboundary basis; their classes form a basis of H.
std::vector<Vec> representatives(const CohomologyDegree& deg) {
  std::vector<Vec> all = deg.coboundaries.vectors;
  all.insert(all.end(), deg.cocycles.vectors.begin(), deg.cocycles.vectors.end());
  const SubspaceBasis span = span_of(deg.cocycles.ambient_dim, all);
  return std::vector<Vec>(span.vectors.begin() + static_cast<long>(deg.coboundaries.dim()), span.vectors.end());
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("bad " + what + " '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

ordered_json pair_json(const std::string& src, const std::string& dst, const std::string& method,
                       const std::vector<std::size_t>& dims, std::optional<bool> certified) {
  ordered_json p;
  p["src"] = src;
  p["dst"] = dst;
  p["method"] = method;
  p["dims"] = dims;
  if (certified) p["certified"] = *certified;
  return p;
}

int report_ext(std::ostream& out, std::ostream& err, const std::string& format, const std::vector<ordered_json>& pairs,
               const std::vector<std::pair<std::string, std::vector<std::size_t>>>& results) {
  if (format == "json") {
    ordered_json j;
    j["ext"]["pairs"] = pairs;
    out << j.dump() << "\n";
  } else if (results.size() == 1) {
    out << join(results[0].second) << "\n";
  } else {
    for (const auto& [method, dims] : results) out << method << ": " << join(dims) << "\n";
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].second != results[0].second) {
      err << "error: methods disagree (" << results[0].first << " vs " << results[i].first << ")\n";
      return inconsistency;
    }
  }
  return ok;
}

int run_check(const RunConfig& c, std::ostream& out) {
  const LeibnizAlgebra h = algebra_from_json(read_file(c.algebra_path));
  const LieQuotient q = lie_quotient(h);
  const bool lie = q.kernel.dim() == 0 && h.constants() == q.algebra.constants();
  if (c.format == "json") {
    ordered_json j;
    j["dim"] = h.dim();
    j["leibniz"] = true;
    j["lie"] = lie;
    j["leib_dim"] = q.kernel.dim();
    j["lie_quotient_dim"] = q.algebra.dim();
    out << j.dump() << "\n";
    return ok;
  }
  out << "dim " << h.dim() << "\n";
  out << "left Leibniz identity: ok\n";
  out << "Lie: " << (lie ? "yes" : "no") << "\n";
  out << "Leib(h): dim " << q.kernel.dim() << "\n";
  for (const auto& v : q.kernel.vectors) out << "  " << vector_text(v) << "\n";
  out << "h_Lie: dim " << q.algebra.dim() << "\n";
  return ok;
}

int run_cohomology(const RunConfig& c, std::ostream& out) {
  const LeibnizAlgebra h = algebra_from_json(read_file(c.algebra_path));
  const Bimodule m = bimodule_from_json(h, read_file(c.bimodule_path));
  std::vector<std::size_t> dims;
  std::optional<CohomologyResult> full;
  if (c.bases) {
    full = leibniz_cohomology(h, m, c.qmax);
    dims = full->dims();
  } else {
    dims = leibniz_cohomology_dims(h, m, c.qmax);
  }
  if (c.format == "json") {
    ordered_json j;
    j["HL"] = dims;
    if (full) {
      ordered_json bases = ordered_json::array();
      for (const auto& deg : full->degrees) {
        ordered_json b = ordered_json::array();
        for (const auto& v : representatives(deg)) b.push_back(vector_json(v));
        bases.push_back(std::move(b));
      }
      j["bases"] = bases;
    }
    out << j.dump() << "\n";
    return ok;
  }
  if (!full) {
    print_table(out, "HL^", dims);
    return ok;
  }
  for (std::size_t q = 0; q < dims.size(); ++q) {
    out << "HL^" << q << "  " << dims[q] << "\n";
    for (const auto& v : representatives(full->degrees[q])) out << "  " << vector_text(v) << "\n";
  }
  return ok;
}

int run_ce(const RunConfig& c, std::ostream& out) {
  std::string w = c.module;
  if (w == "K") w = "V0";
  if (w.size() < 2 || w[0] != 'V') throw InputError("bad module '" + c.module + "' (expected Vm or K)");
  const SL2Module v = simple_module(parse_unsigned(w.substr(1), "weight"));
  const auto dims = ce_cohomology(sl2(), v.underlying(), c.pmax).dims();
  if (c.format == "json") {
    ordered_json j;
    j["H"] = dims;
    out << j.dump() << "\n";
  } else {
    print_table(out, "H^", dims);
  }
  return ok;
}

int run_ext_trivial(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const OneDimBimodule src = parse_one_dim(c.src);
  const OneDimBimodule dst = parse_one_dim(c.dst);
  const std::string method = c.method.empty() ? "closed" : c.method;
  std::vector<ordered_json> pairs;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> results;
  if (method == "closed" || method == "both") {
    results.emplace_back("closed", ext_trivial_closed(src, dst, c.nmax));
    pairs.push_back(pair_json(describe(src), describe(dst), "closed", results.back().second, std::nullopt));
  }
  if (method == "spectral" || method == "both") {
    const ExtResult r =
        ext_dims(trivial_algebra(), SourceDescriptor{src.kind(), src.underlying()}, dst.materialize(), c.nmax);
    results.emplace_back("spectral", r.dims);
    pairs.push_back(pair_json(describe(src), describe(dst), "spectral", r.dims, r.certificate.certified()));
  }
  return report_ext(out, err, c.format, pairs, results);
}

int run_ext_hemi(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const HemiSimple src = parse_hemi(c.src);
  const HemiSimple dst = parse_hemi(c.dst);
  const std::string method = c.method.empty() ? "closed" : c.method;
  std::vector<ordered_json> pairs;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> results;
  if (method == "closed" || method == "both") {
    results.emplace_back("closed", std::vector<std::size_t>{ext_simple_closed(c.n, src, dst, c.degree)});
    pairs.push_back(pair_json(describe(src), describe(dst), "closed", results.back().second, std::nullopt));
  }
  if (method == "oracle" || method == "both") {
    if (c.degree == 1 && src.kind != BimoduleKind::antisymmetric && dst.kind != BimoduleKind::symmetric) {
      results.emplace_back("oracle", std::vector<std::size_t>{ext1_hemi_oracle(c.n, src, dst)});
      pairs.push_back(pair_json(describe(src), describe(dst), "oracle", results.back().second, std::nullopt));
    } else {
      if (c.degree > 2) throw UnsupportedDegree("Ext is available in degrees 0, 1 and 2");
      const LeibnizAlgebra h = hemi_semidirect(sl2(), simple_module(c.n).underlying());
      const ExtResult r = ext_dims(h, SourceDescriptor{src.kind, simple_module(src.weight).underlying()},
                                   hemi_bimodule(h, dst), c.degree);
      results.emplace_back("oracle", std::vector<std::size_t>{r.dims[c.degree]});
      pairs.push_back(pair_json(describe(src), describe(dst), "oracle", results.back().second, true));
    }
  }
  return report_ext(out, err, c.format, pairs, results);
}

int run_quiver(const RunConfig& c, std::ostream& out) {
  Quiver q;
  if (c.command == Subcommand::quiver_trivial) {
    std::vector<Scalar> lambdas;
    for (const auto& l : c.lambdas) lambdas.push_back(parse_scalar(l));
    q = quiver_trivial(lambdas);
  } else {
    q = quiver_hemi(c.n, c.max_weight, c.verify);
  }
  out << (c.format == "json" ? to_json(q) : to_dot(q)) << "\n";
  return ok;
}

}  // namespace

OneDimBimodule parse_one_dim(const std::string& text) {
  if (text == "K" || text == "trivial") return OneDimBimodule::trivial();
  static const std::regex short_form(R"(^(a|s|antisymmetric|symmetric):(.+)$)");
  static const std::regex label_form(R"(^M\^(a|s)_(.+)$)");
  std::smatch m;
  if (std::regex_match(text, m, short_form) || std::regex_match(text, m, label_form)) {
    const std::string k = m[1].str();
    const BimoduleKind kind = (k == "a" || k == "antisymmetric") ? BimoduleKind::antisymmetric : BimoduleKind::symmetric;
    return OneDimBimodule(kind, parse_scalar(m[2].str()));
  }
  throw InputError("bad simple bimodule '" + text + "' (expected K, a:LAMBDA or s:LAMBDA)");
}

std::string describe(const OneDimBimodule& b) {
  if (b.kind() == BimoduleKind::trivial) return "K";
  return std::string("M^") + (b.kind() == BimoduleKind::antisymmetric ? "a" : "s") + "_" + format_scalar(b.lambda());
}

HemiSimple parse_hemi(const std::string& text) {
  if (text == "K" || text == "V0" || text == "V0^s" || text == "V0^a") return HemiSimple{};
  static const std::regex form(R"(^V([0-9]+)\^(a|s)$)");
  std::smatch m;
  if (std::regex_match(text, m, form)) {
    const unsigned w = parse_unsigned(m[1].str(), "weight");
    return HemiSimple::make(m[2].str() == "a" ? BimoduleKind::antisymmetric : BimoduleKind::symmetric, w);
  }
  throw InputError("bad simple bimodule '" + text + "' (expected K, V0, Vp^s or Vm^a)");
}

std::string describe(const HemiSimple& s) {
  if (s.kind == BimoduleKind::trivial) return "V0";
  return "V" + std::to_string(s.weight) + (s.kind == BimoduleKind::antisymmetric ? "^a" : "^s");
}

Bimodule hemi_bimodule(const LeibnizAlgebra& h, const HemiSimple& s) {
  const LeftModule v = simple_module(s.weight).underlying();
  return s.kind == BimoduleKind::symmetric ? symmetric(h, v) : antisymmetric(h, v);
}

void validate(const RunConfig& c) {
  const bool quiver = c.command == Subcommand::quiver_trivial || c.command == Subcommand::quiver_hemi;
  if (quiver) {
    if (!c.format.empty() && c.format != "dot" && c.format != "json") throw InputError("quiver formats: dot, json");
  } else if (!c.format.empty() && c.format != "text" && c.format != "json") {
    throw InputError("formats: text, json (dot is for quiver only)");
  }
  if (c.command == Subcommand::ext_trivial && !c.method.empty() && c.method != "closed" && c.method != "spectral" &&
      c.method != "both") {
    throw InputError("ext trivial methods: closed, spectral, both");
  }
  if (c.command == Subcommand::ext_hemi && !c.method.empty() && c.method != "closed" && c.method != "oracle" &&
      c.method != "both") {
    throw InputError("ext hemi methods: closed, oracle, both");
  }
  if ((c.command == Subcommand::ext_hemi || c.command == Subcommand::quiver_hemi) && c.n == 0) {
    throw InputError("n >= 1 required");
  }
  if (c.command == Subcommand::quiver_trivial && c.lambdas.empty()) throw InputError("--lambdas is required");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Subcommand::check:
        return run_check(config, out);
      case Subcommand::cohomology:
        return run_cohomology(config, out);
      case Subcommand::ce:
        return run_ce(config, out);
      case Subcommand::ext_trivial:
        return run_ext_trivial(config, out, err);
      case Subcommand::ext_hemi:
        return run_ext_hemi(config, out, err);
      case Subcommand::quiver_trivial:
      case Subcommand::quiver_hemi:
        return run_quiver(config, out);
    }
  } catch (const CollapseNotCertified& e) {
    const auto& w = e.witness();
    err << "error: collapse not certified, witness d_" << w[0] << " at (p,q) = (" << w[1] << "," << w[2] << ")\n";
    return inconsistency;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return inconsistency;
  } catch (const StabilityError& e) {
    err << "error: " << e.what() << "\n";
    return inconsistency;
  } catch (const ComplexError& e) {
    err << "error: " << e.what() << "\n";
    return inconsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return invalid_input;
  }
  return invalid_input;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Leibniz algebra cohomology, Ext groups and Gabriel quivers over the rationals"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "validate an algebra file and report Leib(h) and h_Lie");
  check->add_option("algebra", c.algebra_path, "algebra JSON file")->required();
  check->add_option("--format", c.format, "text or json");

  auto* coh = app.add_subcommand("cohomology", "dimensions of HL^q(h, M)");
  coh->add_option("--algebra", c.algebra_path, "algebra JSON file")->required();
  coh->add_option("--bimodule", c.bimodule_path, "bimodule JSON file")->required();
  coh->add_option("--qmax", c.qmax, "top degree")->default_val(3);
  coh->add_option("--format", c.format, "text or json");
  coh->add_flag("--bases", c.bases, "print cocycle representatives");

  auto* ce = app.add_subcommand("ce", "Chevalley-Eilenberg cohomology H^p(sl2, V_m)");
  ce->add_option("--module", c.module, "Vm or K")->required();
  ce->add_option("--pmax", c.pmax, "top degree")->default_val(3);
  ce->add_option("--format", c.format, "text or json");

  auto* ext = app.add_subcommand("ext", "Ext groups between simple bimodules");
  ext->require_subcommand(1);
  auto* ext_t = ext->add_subcommand("trivial", "over the 1-dimensional algebra");
  ext_t->add_option("--src", c.src, "K, a:LAMBDA or s:LAMBDA")->required();
  ext_t->add_option("--dst", c.dst, "K, a:LAMBDA or s:LAMBDA")->required();
  ext_t->add_option("--nmax", c.nmax, "top degree")->default_val(3);
  ext_t->add_option("--method", c.method, "closed, spectral or both");
  ext_t->add_option("--format", c.format, "text or json");
  auto* ext_h = ext->add_subcommand("hemi", "over V_n x_hs sl2");
  ext_h->add_option("--n", c.n, "weight of the Leibniz kernel")->required();
  ext_h->add_option("--src", c.src, "K, V0, Vp^s or Vp^a")->required();
  ext_h->add_option("--dst", c.dst, "K, V0, Vm^s or Vm^a")->required();
  ext_h->add_option("--degree", c.degree, "0, 1 or 2")->default_val(1);
  ext_h->add_option("--method", c.method, "closed, oracle or both");
  ext_h->add_option("--format", c.format, "text or json");

  auto* quiver = app.add_subcommand("quiver", "Gabriel quiver of the simple bimodules");
  quiver->require_subcommand(1);
  auto* quiver_t = quiver->add_subcommand("trivial", "over the 1-dimensional algebra");
  quiver_t->add_option("--lambdas", c.lambdas, "distinct nonzero rationals")->required()->delimiter(',');
  quiver_t->add_option("--format", c.format, "dot or json");
  auto* quiver_h = quiver->add_subcommand("hemi", "over V_n x_hs sl2, truncated at a maximal weight");
  quiver_h->add_option("--n", c.n, "weight of the Leibniz kernel")->required();
  quiver_h->add_option("--max-weight", c.max_weight, "largest highest weight kept")->required();
  quiver_h->add_flag("--verify", c.verify, "recompute every arrow count through nhat");
  quiver_h->add_option("--format", c.format, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }

  if (check->parsed()) c.command = Subcommand::check;
  if (coh->parsed()) c.command = Subcommand::cohomology;
  if (ce->parsed()) c.command = Subcommand::ce;
  if (ext_t->parsed()) c.command = Subcommand::ext_trivial;
  if (ext_h->parsed()) c.command = Subcommand::ext_hemi;
  if (quiver_t->parsed()) c.command = Subcommand::quiver_trivial;
  if (quiver_h->parsed()) c.command = Subcommand::quiver_hemi;
  return run(c, out, err);
}

}  // namespace leibcoh::cli
