#pragma once

#include "hvmdp/discounted_mdp.hpp"
#include "hvmdp/random_instances.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace hvmdp {

// Instances are JSON documents; the grammar is described in
// docs/instance-format.md. Parsers reject unknown fields and report syntax
// errors with line and column. Semantic checks (negative rates, out-of-range
// targets) are left to validate().

RateMdp parse_rate_mdp(std::string_view text);
std::string serialize(const RateMdp& mdp);

DiscountedMdp parse_discounted_mdp(std::string_view text);
std::string serialize(const DiscountedMdp& dmdp);

GenSpec parse_gen_spec(std::string_view text);
std::string serialize(const GenSpec& spec);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

} // namespace hvmdp
