#pragma once

#include <compare>
#include <map>
#include <vector>

#include "holecolor/graph.hpp"
#include "holecolor/levelling.hpp"

namespace holecolor {

/// How a spine neighbour v in L_i touches the spine S = s_0 - ... - s_k:
///   alpha 1: s_{i-1} only, 2: both s_{i-1} and s_i, 3: s_i only;
///   lambda: i mod (ell + 1).
struct GammaType {
  int alpha = 1;
  int lambda = 0;
  friend auto operator<=>(const GammaType&, const GammaType&) = default;
};

/// All 3 * (ell + 1) types in ascending order.
std::vector<GammaType> all_types(int ell);

/// Vertices off the spine with a neighbour on it.
VertexSet spine_neighbourhood(const Levelling& lv, const Path& s);

/// Type of every vertex in N(S). Throws std::logic_error when a vertex
/// touches the spine anywhere other than s_{i-1} or s_i.
std::map<Vertex, GammaType> classify_types(const Levelling& lv, const Path& s,
                                           int ell);

/// Least V containing the type-gamma spine neighbours and every vertex
/// outside S + N(S) that has a parent in V.
VertexSet gamma_closure(const Levelling& lv, const Path& s,
                        const std::map<Vertex, GammaType>& types,
                        GammaType gamma);

struct CoverChain {
  std::vector<VertexSet> j;                // j[i] = J_i, j[0] unused
  std::map<Vertex, Vertex> private_child;  // u in J_i -> child in J_{i+1}
};

/// J_k = top_comp; for i = k-1..1, J_i is a minimal subset of V(gamma) + L_i
/// covering the parents of J_{i+1} \ N(S). Minimality is reached by deleting
/// the largest ids first.
CoverChain minimal_cover_chain(const Levelling& lv, const Path& s,
                               const VertexSet& v_gamma,
                               const VertexSet& top_comp);

/// The levelling (M_0..M_k) built from a cover chain. Throws
/// StructureViolation when it is not a levelling or breaks the parent rule
/// below level k - max(2, ell).
Levelling assemble_m(const Levelling& lv, GammaType gamma, const Path& s,
                     const CoverChain& chain, int ell);

struct TransformPiece {
  GammaType gamma;
  VertexSet top_component;
  Levelling m_levelling;
  std::vector<VertexSet> j_chain;
  std::map<Vertex, Vertex> private_child;
};

struct TransformResult {
  Path spine;
  std::vector<TransformPiece> pieces;
  Vertex spine_top = -1;
  /// Every vertex of L_k other than the spine top -> index into `pieces`:
  /// smallest type first, then smallest component.
  std::map<Vertex, std::size_t> designated;
};

/// Splits L_k \ {s_k} into pieces, each the top of a levelling that obeys the
/// parent rule up to k - max(2, ell). Requires G[L_k] connected and every
/// vertex of L_0..L_{k-1} to have a dependent.
TransformResult parent_transform(const Levelling& lv, int ell);

}  // namespace holecolor
