#pragma once

// Umbrella include for the whole library.

#include "bigint.hpp"
#include "composition.hpp"
#include "dp.hpp"
#include "errors.hpp"
#include "hooks.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "render.hpp"
#include "tableau.hpp"
