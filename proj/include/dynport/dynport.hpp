#pragma once

// Umbrella header for the core library (everything except io.hpp, which
// additionally needs nlohmann/json).

#include "dynport/arith.hpp"
#include "dynport/counting.hpp"
#include "dynport/critical.hpp"
#include "dynport/dynamics.hpp"
#include "dynport/forms.hpp"
#include "dynport/model.hpp"
#include "dynport/morphism.hpp"
#include "dynport/multipliers.hpp"
#include "dynport/polynomial.hpp"
#include "dynport/portrait.hpp"
#include "dynport/projective.hpp"
#include "dynport/rational_map.hpp"
#include "dynport/reduction.hpp"
#include "dynport/relations.hpp"
#include "dynport/stability.hpp"
