#ifndef CX2_SPLITTING_HPP_
#define CX2_SPLITTING_HPP_

#include <vector>

#include "cx2/complex.hpp"

namespace cx2 {

/// Result of contracting a spanning tree down to one vertex.
struct CollapseResult {
  /// <non-tree edge labels | boundary words of the collapsed faces>.
  Presentation presentation;
  /// The standard complex of `presentation`, built directly from x.
  TwoComplex complex;
  /// edge_source[i] = index in x of edge i of the collapsed complex.
  std::vector<int> edge_source;
};

/// Contracts the spanning tree found by breadth-first search from vertex 0
/// (edges tried in index order). A homotopy equivalence; Euler
/// characteristic is preserved. On a one-vertex complex this is the
/// identity. Requires x connected with distinct edge labels; throws when a
/// face's whole attaching path lies in the tree, since the face would be
/// left with an empty boundary.
CollapseResult collapse_spanning_tree(const TwoComplex& x);

/// One wedge summand: a link-connected subcomplex plus maps sending its
/// cells back to cells of the complex the split was computed on.
struct WedgePiece {
  TwoComplex complex;
  /// Link component of the split vertex that became each piece vertex.
  std::vector<int> vertex_link_component;
  std::vector<int> edge_source;
  std::vector<int> face_source;
};

/// Wedge decomposition: the input is homotopy equivalent to the wedge of
/// `circles` circles and the `pieces`.
struct WedgeDecomposition {
  int link_components = 0;        // |I|
  int minus_vertex_components = 0;  // |J|
  int circles = 0;                // |I| - |J|
  std::vector<WedgePiece> pieces;
};

/// Splits a polygon quotient into circles and link-connected pieces.
///
/// For a one-vertex complex this runs the pulling-apart construction
/// directly: I = components of the link of the vertex, J = components of
/// the edge graph where two edges are adjacent when they share a face,
/// circles = |I| - |J|, and piece j collects the link components, edges and
/// faces of class j. A link-connected input (any vertex count) is already
/// the trivial wedge of itself, returned as one piece with no circles.
/// Remaining multi-vertex inputs are collapsed with collapse_spanning_tree
/// first and the provenance maps composed through the collapse.
WedgeDecomposition wedge_split(const TwoComplex& x);

/// Diagonal of the Smith normal form of an integer matrix: nonnegative,
/// each entry dividing the next, zeros trailing; length min(rows, cols).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

/// Abelianized group Z^rank + Z/t1 + Z/t2 + ... with t1 | t2 | ...
struct Abelianization {
  int rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const Abelianization&,
                         const Abelianization&) = default;
};

/// Invariant factors of the exponent-sum matrix of the presentation
/// (one row per relator, one column per generator).
Abelianization abelianization(const Presentation& p);

}  // namespace cx2

#endif  // CX2_SPLITTING_HPP_
