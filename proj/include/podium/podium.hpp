#pragma once

#include "podium/axioms.hpp"
#include "podium/core.hpp"
#include "podium/fixtures.hpp"
#include "podium/io.hpp"
#include "podium/optimal.hpp"
#include "podium/rational.hpp"
#include "podium/replay.hpp"
#include "podium/rules.hpp"
#include "podium/witness.hpp"

namespace podium {

inline constexpr const char* version = "0.1.0";

}  // namespace podium
