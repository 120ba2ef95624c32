#pragma once

#include "geoplan/metric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geoplan {

struct CutVertex {
    Vec point;           // in the fundamental domain
    int multiplicity = 0; // number of geodesics from the basepoint
};

// An arc of the cut locus drawn as a polyline in the universal cover chart.
// Its interior points project to points joined to the basepoint by
// `multiplicity` geodesics.
struct CutEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<Vec> arc;
    int multiplicity = 2;
};

// Higher dimensional description: the points whose difference with the
// basepoint is antipodal exactly in the listed coordinates.
struct CutStratum {
    std::vector<std::size_t> antipodal;
    std::size_t dimension = 0;
    int multiplicity = 0;
};

struct CutLocusGraph {
    std::string space;
    Vec basepoint;
    std::vector<CutVertex> vertices;
    std::vector<CutEdge> edges;
    std::vector<CutStratum> strata;

    // Loops count twice.
    std::vector<std::size_t> degrees() const;
    // "point", "wedge", "theta" or "graph".
    std::string shape() const;
};

template <class Geodesic>
struct PlannerResult {
    int domain = 0;
    Geodesic geodesic;
};

} // namespace geoplan
