#pragma once

#include <vector>

#include "bipoly.hpp"
#include "graph.hpp"
#include "hstar.hpp"
#include "outerplanar.hpp"

namespace trilength {

/// Symbolic pose of one rhombus copy.  z0, z1 are the base-corner positions;
/// their difference P = z1 - z0 is always a single monomial with coefficient
/// one (a symbolic unit vector).  ty selects which torus variable opens this
/// copy's angle, and fwd_run counts Fwd steps since the last turn (the run
/// length that feeds the ty update at the next turn).
struct RhombusState {
    BiPoly z0;
    BiPoly z1;
    int ty = 0;
    int fwd_run = 0;
};

/// Root pose: base corners at 0 and 1.
RhombusState rhombus_root();

/// Base direction P = z1 - z0 (checked to be a unit monomial).
BiPoly rhombus_direction(const RhombusState& s);

/// Far corners of the copy: v2 = z0 + P*x_ty and v3 = z1 + P*x_ty.
BiPoly rhombus_corner2(const RhombusState& s);
BiPoly rhombus_corner3(const RhombusState& s);

/// Pose of the child glued across the labelled edge.  Fwd advances the base
/// to (v2, v3) keeping ty; Left pivots onto (v0, v2), Right onto (v1, v3),
/// each flipping ty by (fwd_run mod 2) xor (0 for Left, 1 for Right).
RhombusState rhombus_child(const RhombusState& s, Label l);

/// Base-corner position of the node with run-length encoding e, computed
/// directly from the telescoped sum (no tree walk):
///     nu_0 = 0,  nu_i = nu_{i-1} xor q_i xor rho_i
///     P_0  = 1,  P_i  = P_{i-1} * x_{nu_{i-1}}
///     psi  = sum_{i=1..m} (q_i * P_i + rho_i * P_{i-1})  +  q_{m+1} * P_{m+1}
/// The final term covers trailing Fwd steps, so the result matches the
/// recursive walk for every encoding, proper or not.
BiPoly psi_closed_form(const QREncoding& e);

/// Exact symbolic positions, indexed by vertex id.
struct Placement {
    std::vector<BiPoly> positions;
};

/// Assigns a position polynomial to every vertex of the triangulated graph
/// by walking the face tree in lockstep with rhombus poses.  A face entered
/// across its (left, right) edge covers either the base triangle
/// (v0, v1, v2) or the far triangle (v1, v2, v3) of the current pose;
/// children continue across (left, apex) / (right, apex) as the pose's
/// Left / same-pose-far / Right / Fwd neighbours.  Vertices reached twice
/// must agree exactly (internal error otherwise).
Placement embed_face_tree(const FaceTree& ft, const DeltaTree& dt);

/// The finite portion of the infinite rhombus tree with addresses of length
/// at most depth (0 <= depth <= 10), as a placed graph.  Vertices are the
/// distinct proper encodings, ids assigned in order of first appearance
/// (nodes in lexicographic address order F < L < R, corners v0..v3).
struct TstarPortion {
    Placement placement;
    Graph graph;
};

TstarPortion embed_tstar_portion(int depth);

/// Placement only (positions of the portion's vertices).
Placement embed_tstar(int depth);

/// Exact pairwise-distinctness check over all position polynomials, by
/// grouping canonical serializations.  On failure reports one colliding pair.
struct InjectivityCertificate {
    bool injective = true;
    int first = -1;
    int second = -1;
};

InjectivityCertificate certify_injective(const Placement& p);

/// Symbolic difference shape along an embedded edge: a unit monomial
/// (length 1 on the torus), a monomial times (x_b - 1) (diagonal of angle
/// theta_b), or neither.  Every edge of a correctly embedded graph falls in
/// the first two classes; class indices match drawing length classes.
enum class EdgeShape { unit = 0, diagonal0 = 1, diagonal1 = 2, invalid = -1 };

EdgeShape classify_edge_shape(const BiPoly& pu, const BiPoly& pv);

} // namespace trilength
