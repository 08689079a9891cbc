#pragma once

// Learnable evolutionary multi-objective optimization for permutation
// problems: host EA (NSGA-II / MOEA/D) plus a pointer network trained on
// angle-matched poor-to-elite solution pairs that proposes new candidates
// each generation.

#include "seqmo/compare.hpp"
#include "seqmo/evaluator.hpp"
#include "seqmo/genetic.hpp"
#include "seqmo/harness.hpp"
#include "seqmo/hungarian.hpp"
#include "seqmo/instance_io.hpp"
#include "seqmo/lstm.hpp"
#include "seqmo/matrix.hpp"
#include "seqmo/metrics.hpp"
#include "seqmo/moead.hpp"
#include "seqmo/nondominated.hpp"
#include "seqmo/nsga2.hpp"
#include "seqmo/objective.hpp"
#include "seqmo/pairing.hpp"
#include "seqmo/permutation.hpp"
#include "seqmo/pointer_net.hpp"
#include "seqmo/population.hpp"
#include "seqmo/problems.hpp"
#include "seqmo/results_io.hpp"
#include "seqmo/rng.hpp"
#include "seqmo/run_config.hpp"
