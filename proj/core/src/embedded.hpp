#pragma once

#include <string_view>

namespace crown::detail {

/// Contents of a data file compiled into the library, empty if unknown.
std::string_view embedded_file(std::string_view name);

}  // namespace crown::detail
