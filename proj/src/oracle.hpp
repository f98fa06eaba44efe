#pragma once

#include <functional>
#include <vector>

#include "graph.hpp"
#include "hstar.hpp"
#include "rng.hpp"

namespace trilength {

/// Exhaustive test for a K4 or K23 minor, the two obstructions that
/// characterise outerplanarity.  Enumerates connected branch sets as
/// bitmasks, so inputs are capped at 10 vertices.  Deliberately shares no
/// machinery with the ear-reduction recogniser.
bool has_k4_or_k23_minor(const Graph& g);

/// Random maximal outerplanar graph on n >= 3 vertices: a seed triangle
/// grows one vertex at a time onto a uniformly chosen boundary edge, which
/// is then replaced in the boundary list by the two new edges (the chosen
/// slot keeps the earlier endpoint's edge, the later one is appended).
Graph random_delta_tree(int n, SplitMix64& rng);

/// Random outerplanar graph: a random maximal one with every edge kept
/// independently with probability keep_prob, drawn in canonical edge order.
/// The result may be disconnected.
Graph random_outerplanar(int n, double keep_prob, SplitMix64& rng);

/// Every address of length at most depth (depth <= 12), in preorder with
/// children visited Fwd, Left, Right; the first address is the empty root.
void enumerate_addresses(int depth,
                         const std::function<void(const Address&)>& fn);
std::vector<Address> enumerate_addresses(int depth);

} // namespace trilength
