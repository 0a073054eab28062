#ifndef CX2_COMPLEX_HPP_
#define CX2_COMPLEX_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "cx2/words.hpp"

namespace cx2 {

/// Group presentation <generators | relators>. Generators are distinct
/// lowercase letters; relator letters must all come from the generator list.
/// Relators form a multiset (duplicates are meaningful) and need not be
/// reduced, but must be nonempty: an attaching path has at least one edge.
struct Presentation {
  std::vector<char> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Throws std::invalid_argument when the presentation breaks the rules above.
void validate(const Presentation& p);

/// A multiset of nonempty words, with no separate generator list: the
/// alphabet is exactly the set of letters that occur. Determines a
/// multi-vertex complex via forced edge identifications (see
/// description_complex).
struct CombinatorialDescription {
  std::vector<Word> relators;

  friend bool operator==(const CombinatorialDescription&,
                         const CombinatorialDescription&) = default;
};

void validate(const CombinatorialDescription& d);

/// Distinct letters of a description, ordered by first occurrence
/// (relator-major, position-minor). This is also the edge order of the
/// complex it builds.
std::vector<char> letters_of(const CombinatorialDescription& d);

/// Disjoint labeled polygons, one per relator, before any identification.
/// Polygon p for a word of length n has boundary edges at positions
/// 0..n-1 and corner vertices 0..n-1, with corner i sitting between
/// boundary edges i-1 and i. Boundary edge i runs from corner i to
/// corner i+1 (mod n) when its letter is positive, and the other way when
/// negative.
struct PolygonSet {
  std::vector<Word> polygons;

  std::size_t polygon_count() const { return polygons.size(); }
  std::size_t side_count(std::size_t p) const { return polygons[p].size(); }
  Letter letter(std::size_t p, std::size_t i) const {
    return polygons[p].letters[i];
  }
  /// Corner at the tail end of boundary edge i of polygon p.
  std::size_t tail_corner(std::size_t p, std::size_t i) const {
    std::size_t n = side_count(p);
    return letter(p, i).sign > 0 ? i : (i + 1) % n;
  }
  /// Corner at the head end of boundary edge i of polygon p.
  std::size_t head_corner(std::size_t p, std::size_t i) const {
    std::size_t n = side_count(p);
    return letter(p, i).sign > 0 ? (i + 1) % n : i;
  }
};

PolygonSet polygon_set(const CombinatorialDescription& d);

/// A combinatorial 2-complex: vertices 0..vertex_count-1, directed labeled
/// edges, and faces given by closed attaching paths. A step (e, +1) crosses
/// edge e from tail to head, (e, -1) the other way.
struct TwoComplex {
  struct Edge {
    char label;
    int tail;
    int head;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  struct FaceStep {
    int edge;
    int dir;  // +1 or -1
    friend bool operator==(const FaceStep&, const FaceStep&) = default;
  };
  using FacePath = std::vector<FaceStep>;

  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<FacePath> faces;

  int step_source(FaceStep s) const {
    return s.dir > 0 ? edges[s.edge].tail : edges[s.edge].head;
  }
  int step_target(FaceStep s) const {
    return s.dir > 0 ? edges[s.edge].head : edges[s.edge].tail;
  }

  friend bool operator==(const TwoComplex&, const TwoComplex&) = default;
};

/// Structural sanity check: endpoint indices in range, face paths nonempty
/// and closed, consecutive steps end-to-end. Constructors run this; a
/// failure coming out of library-built complexes is a bug.
void validate(const TwoComplex& x);

int euler_characteristic(const TwoComplex& x);

/// True when every edge lies on at least one face and no vertex is isolated.
bool is_polygon_quotient(const TwoComplex& x);

/// The one-vertex complex of a presentation: a loop per generator, a face
/// per relator.
TwoComplex standard_complex(const Presentation& p);

/// description_complex plus the identification data the construction
/// produces: which complex vertex each polygon corner landed on.
struct DescriptionBuild {
  TwoComplex complex;
  /// vertex_of_corner[p][i] = complex vertex of corner i of polygon p.
  std::vector<std::vector<int>> vertex_of_corner;
};

/// Builds the multi-vertex complex of a description: takes the disjoint
/// polygons and glues all same-label boundary edges together, identifying
/// only the corner vertices this forces (tail ends with tail ends, head
/// ends with head ends, closed under transitivity). Vertices are numbered
/// by their smallest member corner in (polygon, position) order; edges by
/// first occurrence of their label.
DescriptionBuild build_description_complex(const CombinatorialDescription& d);

TwoComplex description_complex(const CombinatorialDescription& d);

/// True when the description's complex is a closed surface: every letter
/// occurs exactly twice across the multiset, and every vertex link is a
/// single circle.
bool is_closed_surface(const CombinatorialDescription& d);

/// Reads off the face boundary words of a polygon quotient. Inverse to
/// description_complex up to complex isomorphism (exactly when x is
/// link-connected). Throws std::invalid_argument when x is not a polygon
/// quotient or its edge labels are not distinct.
CombinatorialDescription describe(const TwoComplex& x);

/// Collapses a non-loop edge: its endpoints merge, the edge disappears from
/// all face paths. Preserves homotopy type and Euler characteristic.
/// Throws std::invalid_argument for loops, and when deleting the edge would
/// leave some face with an empty attaching path.
TwoComplex contract_edge(const TwoComplex& x, int edge_index);

/// Label-respecting isomorphism test for complexes with distinct edge
/// labels: matching labels must induce a consistent vertex bijection, and
/// face multisets must agree up to rotation and inversion of each boundary
/// word.
bool is_isomorphic(const TwoComplex& x, const TwoComplex& y);

/// Fixed JSON shape:
///   {"vertices": N,
///    "edges": [{"id": 0, "label": "a", "tail": 0, "head": 1}, ...],
///    "faces": [[["a", 1], ["b", -1]], ...]}
nlohmann::ordered_json to_json(const TwoComplex& x);

}  // namespace cx2

#endif  // CX2_COMPLEX_HPP_
