#pragma once

// Umbrella header for the tropscheme library.

#include "tropscheme/bend.hpp"
#include "tropscheme/congruence.hpp"
#include "tropscheme/curve.hpp"
#include "tropscheme/errors.hpp"
#include "tropscheme/field.hpp"
#include "tropscheme/linalg.hpp"
#include "tropscheme/linear_space.hpp"
#include "tropscheme/poly.hpp"
#include "tropscheme/problem.hpp"
#include "tropscheme/rational.hpp"
#include "tropscheme/semimodule.hpp"
#include "tropscheme/tropical.hpp"
#include "tropscheme/tropicalization.hpp"
