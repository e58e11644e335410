#pragma once

#include "powerdom/constructions.hpp"
#include "powerdom/critical.hpp"
#include "powerdom/digraph.hpp"
#include "powerdom/dot.hpp"
#include "powerdom/propagation.hpp"
#include "powerdom/solvers.hpp"
#include "powerdom/topologies.hpp"
#include "powerdom/vertex_set.hpp"

namespace powerdom {

inline constexpr const char* version = "0.1.0";

}  // namespace powerdom
