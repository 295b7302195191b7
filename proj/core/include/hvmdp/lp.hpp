#pragma once

#include "hvmdp/discounted_mdp.hpp"

#include <string>

namespace hvmdp {

/// Name of the LP column for the state-action pair (x, a).
std::string lp_variable_name(StateIndex x, ActionIndex a);

/// The occupation-measure linear program of a discounted model in CPLEX LP
/// text format:
///
///   minimize   sum_{x,a} c(x,a) z_x_a
///   subject to sum_a z_x_a - beta sum_{y,a} p(x|y,a) z_y_a = 1   for every x
///              z >= 0
///
/// Rows and columns are ordered state-major, action-minor, and coefficients
/// use 17 significant digits, so equal inputs give byte-identical output.
std::string emit_lp(const DiscountedMdp& dmdp);

} // namespace hvmdp
