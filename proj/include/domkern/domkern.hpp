#pragma once

// Umbrella header pulling in the whole library.

#include "domkern/errors.hpp"
#include "domkern/generate.hpp"
#include "domkern/graph.hpp"
#include "domkern/io.hpp"
#include "domkern/kernelize.hpp"
#include "domkern/oracle.hpp"
#include "domkern/rational.hpp"
#include "domkern/reductions.hpp"
#include "domkern/solvers.hpp"
#include "domkern/tree_decomposition.hpp"
