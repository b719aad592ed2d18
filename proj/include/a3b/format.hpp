#pragma once

// Deterministic number formatting shared by the text exporters: shortest
// decimal form that round-trips to the same double.

#include <string>

namespace a3b {

std::string format_double(double x);

} // namespace a3b
