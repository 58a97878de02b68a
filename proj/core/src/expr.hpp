#pragma once

#include <map>
#include <string>

namespace crown::detail {

/// Integer expression over named parameters: + - * / (floor), comparisons
/// (< <= > >= == !=, value 0/1), && ||, parentheses, min(a,b), max(a,b).
long eval_int_expr(const std::string& text, const std::map<std::string, long>& vars);

}  // namespace crown::detail
