#pragma once

// Umbrella header: the full quadruple-point invariant toolkit.

#include "quadpoint/bitvec.hpp"
#include "quadpoint/bitmat.hpp"
#include "quadpoint/errors.hpp"
#include "quadpoint/invariant.hpp"
#include "quadpoint/json_io.hpp"
#include "quadpoint/oracle.hpp"
#include "quadpoint/quadform.hpp"
#include "quadpoint/subspace.hpp"
#include "quadpoint/tsd.hpp"
