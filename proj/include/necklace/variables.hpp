#pragma once

#include <string>
#include <string_view>

namespace necklace {

// Process-wide registry of indeterminate names. Ids are dense and stable.
int var_id(std::string_view name);
const std::string& var_name(int id);
int var_count();
bool var_known(std::string_view name);

// Registers a new variable whose name is derived from `base` and not yet taken.
int fresh_var(std::string_view base);

}  // namespace necklace
