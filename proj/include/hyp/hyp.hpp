#pragma once

#include "hyp/bounds.hpp"
#include "hyp/constructions.hpp"
#include "hyp/decomposition.hpp"
#include "hyp/enumerate.hpp"
#include "hyp/errors.hpp"
#include "hyp/geodesics.hpp"
#include "hyp/graph.hpp"
#include "hyp/hyperbolicity.hpp"
#include "hyp/length.hpp"
#include "hyp/metric.hpp"
#include "hyp/parallel.hpp"
#include "hyp/random.hpp"
