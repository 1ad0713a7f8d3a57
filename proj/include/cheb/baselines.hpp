#pragma once

#include <string_view>

namespace cheb {

// Raw published rows for table `id` (1..8), one row per line, or empty.
std::string_view baseline_text(int id);

}  // namespace cheb
