#pragma once

// Umbrella header: the whole toolkit for periodic upper-bounded temporal
// graph realization -- instances, labelings, fastest-duration machinery,
// polynomial special cases, the exact search, splice gadgets, reductions,
// and JSON input/output.

#include "tgr/cnf.hpp"
#include "tgr/distances.hpp"
#include "tgr/errors.hpp"
#include "tgr/gadgets.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/json_io.hpp"
#include "tgr/labeling.hpp"
#include "tgr/oracle.hpp"
#include "tgr/polycases.hpp"
#include "tgr/reductions.hpp"
#include "tgr/search.hpp"
#include "tgr/temporal.hpp"
#include "tgr/topology.hpp"
#include "tgr/ttr.hpp"
#include "tgr/util.hpp"
