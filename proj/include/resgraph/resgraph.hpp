#pragma once

// Umbrella header: the whole library.

#include "resgraph/canonical.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/cycle.hpp"
#include "resgraph/dsl.hpp"
#include "resgraph/enumerate.hpp"
#include "resgraph/error.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/intersection.hpp"
#include "resgraph/laufer.hpp"
#include "resgraph/numeric.hpp"
#include "resgraph/quotient.hpp"
#include "resgraph/report.hpp"
#include "resgraph/reproduce.hpp"
