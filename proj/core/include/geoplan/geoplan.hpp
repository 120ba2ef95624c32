#pragma once

#include "geoplan/convex_polygon.hpp"
#include "geoplan/cube.hpp"
#include "geoplan/cut_locus.hpp"
#include "geoplan/errors.hpp"
#include "geoplan/klein.hpp"
#include "geoplan/metric.hpp"
#include "geoplan/permutation.hpp"
#include "geoplan/rational.hpp"
#include "geoplan/strat.hpp"
#include "geoplan/torus.hpp"
