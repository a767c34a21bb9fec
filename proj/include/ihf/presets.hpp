#pragma once

#include <string>
#include <vector>

#include "ihf/iota.hpp"

namespace ihf {

// Named library of ready-made iota-complexes:
//   unit          one generator at -2, iota = id (d = 0)
//   sigma_2_3_7   a, b at -2, c at -3; dc = U(a+b); iota swaps a, b
//   surg_m3_T27   a, g at -5/2, d at -11/2; dd = U^2(a+g); iota swaps a, g
//   surg_5_mT211  o, y at -1, t at 4; do = dy = U^3 t; iota swaps o, y
//   minus_L31     one generator at -5/2, iota = id (d = -1/2)
// Composites: terms joined with '#' are tensored, and a term may carry a
// power suffix '^n' (n >= 1), e.g. "sigma_2_3_7^2#unit".
IotaComplex preset(const std::string& name);

// The base preset names, in library order.
std::vector<std::string> preset_names();

}  // namespace ihf
