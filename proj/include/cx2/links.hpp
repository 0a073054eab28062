#ifndef CX2_LINKS_HPP_
#define CX2_LINKS_HPP_

#include <string>
#include <vector>

#include "cx2/complex.hpp"

namespace cx2 {

/// The link of a vertex u: an undirected multigraph whose vertices are the
/// edge-ends incident to u (a loop at u contributes both its ends) and whose
/// edges are the face corners at u. The corner at position i of a face joins
/// the end of step i that arrives at u to the end of step i+1 that departs
/// from it.
struct LinkGraph {
  /// An edge-end of the ambient complex. `end` is 0 at the tail, 1 at the
  /// head, so sorting by (edge, end) puts tails before heads.
  struct End {
    int edge;
    int end;
    friend bool operator==(const End&, const End&) = default;
    friend auto operator<=>(const End&, const End&) = default;
  };
  /// A corner: an unordered link edge between ends a and b, remembering
  /// which face position produced it.
  struct Corner {
    int a;  // index into ends
    int b;
    int face;
    int position;
  };

  int vertex = -1;                  // whose link this is
  std::vector<End> ends;            // sorted by (edge, end)
  std::vector<Corner> corners;
  std::vector<int> component;       // per end; ids ordered by smallest end
  int component_count = 0;

  bool connected() const { return component_count <= 1; }
};

/// Builds the link of vertex u. Total corner count over all vertices of a
/// complex always equals the total boundary length of its faces.
LinkGraph vertex_link(const TwoComplex& x, int u);

/// True when every vertex of x has a connected (possibly empty) link.
bool is_link_connected(const TwoComplex& x);

/// The universal multi-vertex complex over x: rebuilding x's description
/// from scratch identifies only the vertex contacts that the edge gluings
/// force, so its vertices biject with link components of x's vertices. The
/// fibers record that correspondence; x is link-connected exactly when every
/// fiber is a singleton (and then y is isomorphic to x).
struct LinkFactorization {
  TwoComplex y;
  /// fibers[u] = vertices of y lying over vertex u of x, ascending.
  std::vector<std::vector<int>> fibers;
};

/// Requires x to be a polygon quotient with distinct edge labels.
LinkFactorization link_quotient_factorization(const TwoComplex& x);

/// DOT rendering of one link. Vertices are named e<edge>.t / e<edge>.h and
/// each corner edge is labelled f<face>@<position>.
std::string to_dot(const LinkGraph& link);

}  // namespace cx2

#endif  // CX2_LINKS_HPP_
