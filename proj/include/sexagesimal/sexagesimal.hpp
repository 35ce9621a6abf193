#pragma once

// Umbrella header: exact base-60 arithmetic over regular numbers, the 23
// basic reciprocal-table families, and the AO 6456 table reconstruction.

#include "sexagesimal/number.hpp"
#include "sexagesimal/regular.hpp"
#include "sexagesimal/tables.hpp"
#include "sexagesimal/reconstruct.hpp"
#include "sexagesimal/emit.hpp"
