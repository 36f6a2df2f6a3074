#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "leibcoh/bimodule.hpp"
#include "leibcoh/ext.hpp"

namespace leibcoh::cli {

enum class Subcommand { check, cohomology, ce, ext_trivial, ext_hemi, quiver_trivial, quiver_hemi };

struct RunConfig {
  Subcommand command = Subcommand::check;
  std::string algebra_path;
  std::string bimodule_path;
  std::string module;  // "Vm" for ce
  std::string src;
  std::string dst;
  std::vector<std::string> lambdas;
  unsigned n = 1;
  unsigned max_weight = 0;
  unsigned qmax = 3;
  unsigned pmax = 3;
  unsigned nmax = 3;
  unsigned degree = 1;
  std::string format;  // empty: text, or dot for quiver
  std::string method;  // empty: closed
  bool verify = false;
  bool bases = false;
};

enum ExitCode : int { ok = 0, invalid_input = 1, inconsistency = 2 };

// Simple-bimodule names as accepted on the command line: K, a:LAMBDA,
// s:LAMBDA, M^a_LAMBDA, M^s_LAMBDA over the 1-dimensional algebra and
// K, V0, Vp^s, Vm^a over the hemi products. InputError otherwise.
OneDimBimodule parse_one_dim(const std::string& text);
std::string describe(const OneDimBimodule& b);
HemiSimple parse_hemi(const std::string& text);
std::string describe(const HemiSimple& s);
Bimodule hemi_bimodule(const LeibnizAlgebra& h, const HemiSimple& s);

// Throws InputError on a format or method that does not fit the subcommand.
void validate(const RunConfig& config);

// Runs one subcommand; results go to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leibcoh::cli
