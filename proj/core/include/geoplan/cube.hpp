#pragma once

#include "geoplan/metric.hpp"
#include "geoplan/strat.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geoplan {

// Faces of the boundary of [-1/2,1/2]^3, listed in label order. Face charts
// are centered at the face midpoint with unit side:
//   zm: (X, Y)   zp: (X, -Y)   xp, xm: (Y, Z)   yp, ym: (X, Z)
enum class Face : int { zm = 0, zp = 1, xp = 2, xm = 3, yp = 4, ym = 5 };

inline constexpr std::array<Face, 6> kAllFaces{Face::zm, Face::zp, Face::xp, Face::xm, Face::yp, Face::ym};

std::string face_name(Face f);
Face parse_face(std::string_view name);
bool faces_adjacent(Face a, Face b);

class CubePoint {
public:
    CubePoint() = default;
    // |u|, |v| <= 1/2. Points on edges are re-owned by their lowest-label face.
    CubePoint(Face face, Rational u, Rational v);
    static CubePoint from_position(const Vec& position);

    Face face() const { return face_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    Vec position() const;
    // Every face whose closed square contains the point.
    std::vector<Face> faces() const;

    bool operator==(const CubePoint&) const = default;

private:
    Face face_ = Face::zm;
    Rational u_, v_;
};

// The opposite corners used throughout: p = zm(-1/2,-1/2), q = zp(1/2,-1/2).
CubePoint cube_corner_p();
CubePoint cube_corner_q();

// Rotation (X,Y,Z) -> (Z,X,Y) about the axis through p and q, applied `times` times.
Vec rotate_about_corners(const Vec& position, int times = 1);
CubePoint rotate_about_corners(const CubePoint& point, int times = 1);
Face rotate_about_corners(Face face, int times = 1);

struct UnfoldedPath {
    std::vector<Face> face_sequence;
    Vec planar_start; // chart of the first face
    Vec planar_end;
    Rational squared_length;
    // Breakpoints on the surface (start, edge crossings, end) without repeats,
    // and their path parameters.
    std::vector<Vec> trace;
    std::vector<Rational> params;

    // Constant-speed path in R^3 through the breakpoints.
    Polyline surface_polyline() const;
    // "A1".."C12" for the candidate unfoldings, "D1".."D6" for the corner
    // geodesics, empty otherwise.
    std::string label() const;
};

// Unfolds `faces` and keeps the straight segment when it crosses every shared
// edge strictly inside the edge, in order.
std::optional<UnfoldedPath> unfold(const std::vector<Face>& faces, const CubePoint& x, const CubePoint& y);

// All admissible surface paths over simple face sequences of at most
// `max_faces` faces, deduplicated by surface trace, sorted by length.
std::vector<UnfoldedPath> cube_paths(const CubePoint& x, const CubePoint& y, std::size_t max_faces = 5);

// The global minimizers among cube_paths.
std::vector<UnfoldedPath> cube_geodesics(const CubePoint& x, const CubePoint& y, std::size_t max_faces = 5);

// Face sequence of A_i, B_i or C_i (i in 1..12).
const std::vector<Face>& candidate_sequence(char family, int index);

struct CandidateTable {
    std::array<Rational, 12> L_sq;
    std::array<Rational, 12> N;
    std::array<bool, 12> admissible{};
    Rational common; // x1^2 + x2^2 + y1^2 + y2^2 + 4
};

// x in the zm chart, y in the zp chart, both strictly inside their faces.
CandidateTable opposite_face_table(const Vec& x, const Vec& y);

// N_i on the diagonals x1 = x2 = -xd, y1 = -y2 = yd, 0 < xd, yd < 1/2.
std::array<Rational, 12> diagonal_table(const Rational& xd, const Rational& yd);

struct WitnessPair {
    std::string name;
    CubePoint x;
    CubePoint y;
    std::vector<std::string> geodesics; // labels from cube_geodesics
};

struct WitnessSet {
    WitnessPair s;                   // s_A^i
    WitnessPair r_I;                 // r_iI^j
    std::optional<WitnessPair> r_II; // r_iII^j, inside the face only for j > i
    WitnessPair t_I;                 // t_ijI^k
    WitnessPair t_II;                // t_ijII^k
};

WitnessSet witness_sequences(int i, int j, int k);

// Smallest k for which the perturbed pair t_ijI^k (second = false) or
// t_ijII^k (second = true) keeps its target path strictly shortest among
// A1, A4, A7, A10 for every smaller perturbation, found from the N_i, which
// are affine in the perturbation.
int witness_min_k(int i, int j, bool second);

// {A,B,C} x {1,4,7,10} -> D1..D6, as printed.
const std::map<std::string, std::string>& corner_limit_table();

// The six corner geodesics from p to q, ordered D1..D6.
std::vector<UnfoldedPath> corner_geodesics();

StratPoset cube_corner_poset();

} // namespace geoplan
