#pragma once

#include <string_view>

#include "hdpart/enumerator.hpp"
#include "hdpart/triangle.hpp"

namespace hdpart {

enum class Method { Enumerate, Transform, All };

std::string_view name(Method m);
// Throws std::invalid_argument for unknown names.
Method parse_method(std::string_view text);

bool supports(TriangleKind kind, Method method);

// The first `rows` rows of a triangle, starting at the kind's row origin.
// Method::All computes every available method and throws MismatchError on any
// disagreement. Infeasible methods throw ConfigError, missing data DataError.
Triangle compute_triangle(TriangleKind kind, long rows, Method method, const EnumOptions& opts = {});

}  // namespace hdpart
