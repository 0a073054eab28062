#include "cx2/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "cx2/links.hpp"
#include "cx2/union_find.hpp"

namespace cx2 {

CollapseResult collapse_spanning_tree(const TwoComplex& x) {
  {
    std::set<char> labels;
    for (const TwoComplex::Edge& e : x.edges) {
      if (!labels.insert(e.label).second) {
        throw std::invalid_argument(
            "collapse_spanning_tree: edge labels are not distinct");
      }
    }
  }
  if (x.vertex_count == 0) {
    throw std::invalid_argument("collapse_spanning_tree: empty complex");
  }

  // Breadth-first spanning tree from vertex 0, edges tried in index order.
  std::vector<std::vector<int>> incident(x.vertex_count);
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    incident[x.edges[e].tail].push_back(e);
    if (x.edges[e].head != x.edges[e].tail) {
      incident[x.edges[e].head].push_back(e);
    }
  }
  std::vector<bool> in_tree(x.edges.size(), false);
  std::vector<bool> seen(x.vertex_count, false);
  std::queue<int> bfs;
  seen[0] = true;
  bfs.push(0);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int e : incident[u]) {
      const TwoComplex::Edge& edge = x.edges[e];
      int other = edge.tail == u ? edge.head : edge.tail;
      if (!seen[other]) {
        seen[other] = true;
        in_tree[e] = true;
        bfs.push(other);
      }
    }
  }
  for (bool s : seen) {
    if (!s) {
      throw std::invalid_argument(
          "collapse_spanning_tree: complex is not connected");
    }
  }

  CollapseResult out;
  out.complex.vertex_count = 1;
  std::vector<int> new_index(x.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    if (in_tree[e]) continue;
    new_index[e] = static_cast<int>(out.complex.edges.size());
    out.complex.edges.push_back({x.edges[e].label, 0, 0});
    out.edge_source.push_back(e);
    out.presentation.generators.push_back(x.edges[e].label);
  }
  for (std::size_t fi = 0; fi < x.faces.size(); ++fi) {
    TwoComplex::FacePath f;
    Word w;
    for (const TwoComplex::FaceStep& s : x.faces[fi]) {
      if (in_tree[s.edge]) continue;
      f.push_back({new_index[s.edge], s.dir});
      w.letters.push_back(Letter{x.edges[s.edge].label, s.dir});
    }
    if (f.empty()) {
      throw std::invalid_argument(
          "collapse_spanning_tree: face " + std::to_string(fi) +
          " lies entirely in the spanning tree");
    }
    out.complex.faces.push_back(std::move(f));
    out.presentation.relators.push_back(std::move(w));
  }
  validate(out.complex);
  return out;
}

namespace {

WedgeDecomposition split_one_vertex(const TwoComplex& x) {
  LinkGraph link = vertex_link(x, 0);
  int num_i = link.component_count;
  std::map<LinkGraph::End, int> end_component;
  for (std::size_t i = 0; i < link.ends.size(); ++i) {
    end_component[link.ends[i]] = link.component[i];
  }

  // Two edges are in one class when some face uses both.
  int ne = static_cast<int>(x.edges.size());
  UnionFind uf(ne);
  for (const TwoComplex::FacePath& f : x.faces) {
    for (const TwoComplex::FaceStep& s : f) uf.unite(f[0].edge, s.edge);
  }
  std::vector<int> class_of(ne, -1);
  std::map<int, int> class_index;
  int num_j = 0;
  for (int e = 0; e < ne; ++e) {
    int root = uf.find(e);
    auto [it, fresh] = class_index.try_emplace(root, num_j);
    if (fresh) ++num_j;
    class_of[e] = it->second;
  }

  // A link component touches only edges of one class.
  std::vector<int> class_of_component(num_i, -1);
  for (std::size_t i = 0; i < link.ends.size(); ++i) {
    int comp = link.component[i];
    int cls = class_of[link.ends[i].edge];
    if (class_of_component[comp] != -1 && class_of_component[comp] != cls) {
      throw std::logic_error("wedge_split: link component spans two classes");
    }
    class_of_component[comp] = cls;
  }

  WedgeDecomposition out;
  out.link_components = num_i;
  out.minus_vertex_components = num_j;
  out.circles = num_i - num_j;
  out.pieces.resize(num_j);
  for (int j = 0; j < num_j; ++j) {
    WedgePiece& piece = out.pieces[j];
    std::vector<int> piece_vertex(num_i, -1);
    for (int comp = 0; comp < num_i; ++comp) {
      if (class_of_component[comp] != j) continue;
      piece_vertex[comp] = piece.complex.vertex_count++;
      piece.vertex_link_component.push_back(comp);
    }
    std::vector<int> piece_edge(ne, -1);
    for (int e = 0; e < ne; ++e) {
      if (class_of[e] != j) continue;
      int tail = piece_vertex[end_component.at({e, 0})];
      int head = piece_vertex[end_component.at({e, 1})];
      piece_edge[e] = static_cast<int>(piece.complex.edges.size());
      piece.complex.edges.push_back({x.edges[e].label, tail, head});
      piece.edge_source.push_back(e);
    }
    for (int fi = 0; fi < static_cast<int>(x.faces.size()); ++fi) {
      const TwoComplex::FacePath& f = x.faces[fi];
      if (class_of[f[0].edge] != j) continue;
      TwoComplex::FacePath pf;
      pf.reserve(f.size());
      for (const TwoComplex::FaceStep& s : f) {
        pf.push_back({piece_edge[s.edge], s.dir});
      }
      piece.complex.faces.push_back(std::move(pf));
      piece.face_source.push_back(fi);
    }
    validate(piece.complex);
  }
  return out;
}

}  // namespace

WedgeDecomposition wedge_split(const TwoComplex& x) {
  if (!is_polygon_quotient(x)) {
    throw std::invalid_argument(
        "wedge_split: input must be a polygon quotient");
  }
  if (is_link_connected(x)) {
    // Already indecomposable by this construction. For one vertex this is
    // exactly what the machinery below would return.
    WedgeDecomposition out;
    out.link_components = 1;
    out.minus_vertex_components = 1;
    out.circles = 0;
    WedgePiece piece;
    piece.complex = x;
    for (int v = 0; v < x.vertex_count; ++v) {
      piece.vertex_link_component.push_back(v);
    }
    for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
      piece.edge_source.push_back(e);
    }
    for (int f = 0; f < static_cast<int>(x.faces.size()); ++f) {
      piece.face_source.push_back(f);
    }
    out.pieces.push_back(std::move(piece));
    return out;
  }
  if (x.vertex_count == 1) return split_one_vertex(x);

  CollapseResult collapsed = collapse_spanning_tree(x);
  WedgeDecomposition out = split_one_vertex(collapsed.complex);
  for (WedgePiece& piece : out.pieces) {
    for (int& e : piece.edge_source) e = collapsed.edge_source[e];
    // Faces of the collapse are the faces of x, same order.
  }
  return out;
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows > 0 ? static_cast<int>(m[0].size()) : 0;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("smith_diagonal: ragged matrix");
    }
  }
  int bound = std::min(rows, cols);
  std::vector<long long> diag;
  int k = 0;
  while (k < bound) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pi = -1, pj = -1;
    for (int i = k; i < rows; ++i) {
      for (int j = k; j < cols; ++j) {
        if (m[i][j] != 0 &&
            (pi == -1 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == -1) break;  // all zero from here on
    std::swap(m[k], m[pi]);
    for (int i = k; i < rows; ++i) std::swap(m[i][k], m[i][pj]);

    bool stable = false;
    while (!stable) {
      stable = true;
      for (int i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        long long q = m[i][k] / m[k][k];
        for (int j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) {  // remainder is smaller; make it the pivot
          std::swap(m[k], m[i]);
          stable = false;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        long long q = m[k][j] / m[k][k];
        for (int i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) {
          for (int i = k; i < rows; ++i) std::swap(m[i][k], m[i][j]);
          stable = false;
        }
      }
      if (stable) {
        // The pivot must divide everything that remains, or the invariant
        // factors come out wrong. Fold a bad row in and start over.
        for (int i = k + 1; i < rows && stable; ++i) {
          for (int j = k + 1; j < cols && stable; ++j) {
            if (m[i][j] % m[k][k] != 0) {
              for (int c = k; c < cols; ++c) m[k][c] += m[i][c];
              stable = false;
            }
          }
        }
      }
    }
    diag.push_back(std::abs(m[k][k]));
    ++k;
  }
  diag.resize(bound, 0);
  return diag;
}

Abelianization abelianization(const Presentation& p) {
  validate(p);
  std::map<char, int> col;
  for (char g : p.generators) col[g] = static_cast<int>(col.size());
  std::vector<std::vector<long long>> m(
      p.relators.size(), std::vector<long long>(p.generators.size(), 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const Letter& l : p.relators[r]) {
      m[r][col.at(l.generator)] += l.sign;
    }
  }
  Abelianization ab;
  ab.rank = static_cast<int>(p.generators.size());
  for (long long d : smith_diagonal(m)) {
    if (d != 0) --ab.rank;
    if (d >= 2) ab.torsion.push_back(d);
  }
  return ab;
}

}  // namespace cx2
