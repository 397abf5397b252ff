#pragma once

#include <functional>

#include "ngsemi/enumeration.hpp"

namespace ngsemi::detail {

void for_each_node(int max_genus, unsigned threads,
                   const std::function<void(unsigned worker, const TreeNode& node)>& visit);

} // namespace ngsemi::detail
