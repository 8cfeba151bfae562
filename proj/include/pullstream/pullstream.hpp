#pragma once

// Umbrella header: the analytical diffusion models, the slot-based
// simulator, and the experiment harness for pull-based P2P live streaming.

#include "pullstream/binomial.hpp"
#include "pullstream/csv.hpp"
#include "pullstream/harness.hpp"
#include "pullstream/model.hpp"
#include "pullstream/params.hpp"
#include "pullstream/profile.hpp"
#include "pullstream/push_pull.hpp"
#include "pullstream/report.hpp"
#include "pullstream/rng.hpp"
#include "pullstream/sim.hpp"
#include "pullstream/single_chunk.hpp"
#include "pullstream/topology.hpp"
