#pragma once

#include <string>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"

namespace leibcoh {

// {"dim": d, "bracket": bracket[i][j] = [[k, num, den], ...], "labels": [...]}
// bracket may list only the nonzero rows; labels are optional.
LeibnizAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const LeibnizAlgebra& h);

// {"dim": n, "left": [d matrices], "right": [d matrices]}; entries are
// integers or "p/q" strings. Checked against h.
Bimodule bimodule_from_json(const LeibnizAlgebra& h, const std::string& text);
std::string bimodule_to_json(const Bimodule& b);

std::string read_file(const std::string& path);

}  // namespace leibcoh
