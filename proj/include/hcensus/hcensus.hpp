#pragma once

#include "hcensus/directed_census.hpp"
#include "hcensus/dynamic_graph.hpp"
#include "hcensus/elbow_store.hpp"
#include "hcensus/generator.hpp"
#include "hcensus/h_partition.hpp"
#include "hcensus/multiplicity.hpp"
#include "hcensus/oracle.hpp"
#include "hcensus/quad_census.hpp"
#include "hcensus/runner.hpp"
#include "hcensus/stream.hpp"
#include "hcensus/structure_store.hpp"
#include "hcensus/types.hpp"
