#pragma once

#include "fachom/algebra.hpp"

#include <string>
#include <vector>

namespace fachom {

/// Built-in presentations addressable by name (see README for the list).
/// Throws Input for unknown names.
GradedSpacePresentation algebra_presentation(const std::string& name);
GradedSpacePresentation lie_presentation(const std::string& name);
std::vector<std::string> algebra_preset_names();
std::vector<std::string> lie_preset_names();

WgAlgebra algebra_preset(const std::string& name, int max_weight);
WgLieAlgebra lie_preset(const std::string& name, int max_weight);

/// Generators named x1, x2, ... at the given degree and weight.
GradedSpacePresentation generators(std::size_t count, int degree = 0, int weight = 1);

}  // namespace fachom
