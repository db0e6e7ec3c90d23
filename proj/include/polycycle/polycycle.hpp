#pragma once

// polycycle: straight-line embedding of an n-vertex cycle onto n points
// inside a simple polygon, minimizing crossings with a genetic algorithm.

#include "polycycle/errors.hpp"
#include "polycycle/experiment.hpp"
#include "polycycle/ga.hpp"
#include "polycycle/geometry.hpp"
#include "polycycle/instance.hpp"
#include "polycycle/oracle.hpp"
#include "polycycle/rng.hpp"
#include "polycycle/svg.hpp"
