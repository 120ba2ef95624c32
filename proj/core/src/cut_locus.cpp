#include "geoplan/cut_locus.hpp"

namespace geoplan {

std::vector<std::size_t> CutLocusGraph::degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& e : edges) {
        ++deg.at(e.from);
        ++deg.at(e.to);
    }
    return deg;
}

std::string CutLocusGraph::shape() const {
    if (vertices.size() == 1 && edges.empty()) return "point";
    if (vertices.size() == 1 && edges.size() == 2) return "wedge";
    if (vertices.size() == 2 && edges.size() == 3) {
        for (const auto& e : edges)
            if (e.from == e.to) return "graph";
        return "theta";
    }
    return "graph";
}

} // namespace geoplan
