#pragma once

#include "p4d/bounds.hpp"
#include "p4d/canonical.hpp"
#include "p4d/config.hpp"
#include "p4d/construct.hpp"
#include "p4d/count.hpp"
#include "p4d/graph.hpp"
#include "p4d/io.hpp"
#include "p4d/optimize.hpp"
#include "p4d/random.hpp"
#include "p4d/search.hpp"
#include "p4d/stepfun.hpp"
#include "p4d/verify.hpp"
