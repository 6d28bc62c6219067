#ifndef EXACTCHROMA_FACE_FILL_HPP
#define EXACTCHROMA_FACE_FILL_HPP

#include <vector>

#include "exactchroma/graph.hpp"

namespace exactchroma {

/// A cycle C_{k-1} drawn inside a face bounded by C_k, with the annulus
/// between them triangulated. Outer vertices are 0..k-1 (the cycle z_0..
/// z_{k-1}), inner vertices k..2k-2 (w_0..w_{k-2}); inner edge e_i joins
/// w_{i-1} and w_{i mod (k-1)}, z_i is joined to both endpoints of e_i, and
/// z_0 to w_0.
struct FaceFillGadget {
    int k = 0;
    Graph graph;
    std::vector<Vertex> outer;
    std::vector<Vertex> inner;
};

FaceFillGadget face_fill_gadget(int k);

/// True iff every pair of outer vertices is at the same distance in the
/// gadget as on the bare outer cycle.
bool verify_distance_preservation(const FaceFillGadget& gadget);

/// Inserts a degree-2 vertex between consecutive non-adjacent neighbours of
/// y (in the given cyclic order), so y stops being a cut vertex. Distances
/// between original vertices are unchanged.
Graph patch_cut_vertex(const Graph& g, Vertex y, const std::vector<Vertex>& cyclic_order);

}  // namespace exactchroma

#endif
