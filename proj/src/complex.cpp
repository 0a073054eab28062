#include "cx2/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cx2/union_find.hpp"

namespace cx2 {

void validate(const Presentation& p) {
  std::set<char> seen;
  for (char g : p.generators) {
    if (g < 'a' || g > 'z') {
      throw std::invalid_argument(
          std::string("generator must be a lowercase letter, got '") + g +
          "'");
    }
    if (!seen.insert(g).second) {
      throw std::invalid_argument(std::string("duplicate generator '") + g +
                                  "'");
    }
  }
  for (const Word& r : p.relators) {
    if (r.empty()) {
      throw std::invalid_argument(
          "empty relator: an attaching path needs at least one edge");
    }
    for (const Letter& l : r) {
      if (!seen.count(l.generator)) {
        throw std::invalid_argument(std::string("relator uses '") +
                                    l.generator +
                                    "' which is not a generator");
      }
    }
  }
}

void validate(const CombinatorialDescription& d) {
  if (d.relators.empty()) {
    throw std::invalid_argument("description needs at least one word");
  }
  for (const Word& r : d.relators) {
    if (r.empty()) {
      throw std::invalid_argument(
          "empty word in description: polygons have at least one side");
    }
  }
}

std::vector<char> letters_of(const CombinatorialDescription& d) {
  std::vector<char> out;
  std::set<char> seen;
  for (const Word& r : d.relators) {
    for (const Letter& l : r) {
      if (seen.insert(l.generator).second) out.push_back(l.generator);
    }
  }
  return out;
}

PolygonSet polygon_set(const CombinatorialDescription& d) {
  validate(d);
  return PolygonSet{d.relators};
}

void validate(const TwoComplex& x) {
  if (x.vertex_count < 0) throw std::logic_error("negative vertex count");
  for (const TwoComplex::Edge& e : x.edges) {
    if (e.tail < 0 || e.tail >= x.vertex_count || e.head < 0 ||
        e.head >= x.vertex_count) {
      throw std::logic_error("edge endpoint out of range");
    }
  }
  for (const TwoComplex::FacePath& f : x.faces) {
    if (f.empty()) throw std::logic_error("face with empty attaching path");
    for (std::size_t i = 0; i < f.size(); ++i) {
      const TwoComplex::FaceStep& s = f[i];
      if (s.edge < 0 || s.edge >= static_cast<int>(x.edges.size())) {
        throw std::logic_error("face step references missing edge");
      }
      if (s.dir != 1 && s.dir != -1) {
        throw std::logic_error("face step direction must be +1 or -1");
      }
      const TwoComplex::FaceStep& t = f[(i + 1) % f.size()];
      if (x.step_target(s) != x.step_source(t)) {
        throw std::logic_error("face path is not a closed edge path");
      }
    }
  }
}

int euler_characteristic(const TwoComplex& x) {
  return x.vertex_count - static_cast<int>(x.edges.size()) +
         static_cast<int>(x.faces.size());
}

bool is_polygon_quotient(const TwoComplex& x) {
  std::vector<bool> edge_used(x.edges.size(), false);
  for (const TwoComplex::FacePath& f : x.faces) {
    for (const TwoComplex::FaceStep& s : f) edge_used[s.edge] = true;
  }
  for (bool b : edge_used) {
    if (!b) return false;
  }
  std::vector<bool> vertex_used(x.vertex_count, false);
  for (const TwoComplex::Edge& e : x.edges) {
    vertex_used[e.tail] = true;
    vertex_used[e.head] = true;
  }
  for (bool b : vertex_used) {
    if (!b) return false;
  }
  return true;
}

TwoComplex standard_complex(const Presentation& p) {
  validate(p);
  TwoComplex x;
  x.vertex_count = 1;
  std::map<char, int> edge_of;
  for (char g : p.generators) {
    edge_of[g] = static_cast<int>(x.edges.size());
    x.edges.push_back({g, 0, 0});
  }
  for (const Word& r : p.relators) {
    TwoComplex::FacePath f;
    f.reserve(r.size());
    for (const Letter& l : r) f.push_back({edge_of.at(l.generator), l.sign});
    x.faces.push_back(std::move(f));
  }
  validate(x);
  return x;
}

DescriptionBuild build_description_complex(const CombinatorialDescription& d) {
  PolygonSet polys = polygon_set(d);
  std::size_t np = polys.polygon_count();

  // Global corner numbering, polygon-major.
  std::vector<std::size_t> offset(np + 1, 0);
  for (std::size_t p = 0; p < np; ++p) {
    offset[p + 1] = offset[p] + polys.side_count(p);
  }
  std::size_t total = offset[np];

  // All boundary edges with one label become a single edge of the quotient,
  // which forces exactly two corner classes per label: all tail-end corners
  // together, all head-end corners together.
  UnionFind uf(static_cast<int>(total));
  std::map<char, std::pair<int, int>> anchor;  // label -> (tail, head) corner
  std::vector<char> labels;
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t i = 0; i < polys.side_count(p); ++i) {
      char g = polys.letter(p, i).generator;
      int tc = static_cast<int>(offset[p] + polys.tail_corner(p, i));
      int hc = static_cast<int>(offset[p] + polys.head_corner(p, i));
      auto it = anchor.find(g);
      if (it == anchor.end()) {
        anchor[g] = {tc, hc};
        labels.push_back(g);
      } else {
        uf.unite(it->second.first, tc);
        uf.unite(it->second.second, hc);
      }
    }
  }

  // Number the corner classes by smallest member; sweeping corners in order
  // assigns indices in exactly that order.
  std::vector<int> vertex_of(total, -1);
  std::map<int, int> class_index;
  int nv = 0;
  for (std::size_t c = 0; c < total; ++c) {
    int root = uf.find(static_cast<int>(c));
    auto [it, fresh] = class_index.try_emplace(root, nv);
    if (fresh) ++nv;
    vertex_of[c] = it->second;
  }

  DescriptionBuild out;
  out.complex.vertex_count = nv;
  std::map<char, int> edge_of;
  for (char g : labels) {
    auto [tc, hc] = anchor.at(g);
    edge_of[g] = static_cast<int>(out.complex.edges.size());
    out.complex.edges.push_back({g, vertex_of[tc], vertex_of[hc]});
  }
  for (std::size_t p = 0; p < np; ++p) {
    TwoComplex::FacePath f;
    f.reserve(polys.side_count(p));
    for (std::size_t i = 0; i < polys.side_count(p); ++i) {
      Letter l = polys.letter(p, i);
      f.push_back({edge_of.at(l.generator), l.sign});
    }
    out.complex.faces.push_back(std::move(f));
  }
  out.vertex_of_corner.resize(np);
  for (std::size_t p = 0; p < np; ++p) {
    out.vertex_of_corner[p].assign(vertex_of.begin() + offset[p],
                                   vertex_of.begin() + offset[p + 1]);
  }
  validate(out.complex);
  return out;
}

TwoComplex description_complex(const CombinatorialDescription& d) {
  return build_description_complex(d).complex;
}

CombinatorialDescription describe(const TwoComplex& x) {
  if (!is_polygon_quotient(x)) {
    throw std::invalid_argument(
        "describe: complex is not a polygon quotient (an edge misses every "
        "face, or a vertex is isolated)");
  }
  std::set<char> labels;
  for (const TwoComplex::Edge& e : x.edges) {
    if (!labels.insert(e.label).second) {
      throw std::invalid_argument("describe: edge labels are not distinct");
    }
  }
  CombinatorialDescription d;
  for (const TwoComplex::FacePath& f : x.faces) {
    Word w;
    w.letters.reserve(f.size());
    for (const TwoComplex::FaceStep& s : f) {
      w.letters.push_back(Letter{x.edges[s.edge].label, s.dir});
    }
    d.relators.push_back(std::move(w));
  }
  return d;
}

TwoComplex contract_edge(const TwoComplex& x, int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(x.edges.size())) {
    throw std::invalid_argument("contract_edge: no such edge");
  }
  const TwoComplex::Edge& e = x.edges[edge_index];
  if (e.tail == e.head) {
    throw std::invalid_argument("contract_edge: cannot contract a loop");
  }
  int keep = std::min(e.tail, e.head);
  int gone = std::max(e.tail, e.head);
  auto map_vertex = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };

  TwoComplex y;
  y.vertex_count = x.vertex_count - 1;
  for (int i = 0; i < static_cast<int>(x.edges.size()); ++i) {
    if (i == edge_index) continue;
    y.edges.push_back({x.edges[i].label, map_vertex(x.edges[i].tail),
                       map_vertex(x.edges[i].head)});
  }
  for (std::size_t fi = 0; fi < x.faces.size(); ++fi) {
    TwoComplex::FacePath f;
    for (const TwoComplex::FaceStep& s : x.faces[fi]) {
      if (s.edge == edge_index) continue;
      f.push_back({s.edge > edge_index ? s.edge - 1 : s.edge, s.dir});
    }
    if (f.empty()) {
      throw std::invalid_argument(
          "contract_edge: face " + std::to_string(fi) +
          " would lose its whole attaching path");
    }
    y.faces.push_back(std::move(f));
  }
  validate(y);
  return y;
}

namespace {

Word face_word(const TwoComplex& x, const TwoComplex::FacePath& f) {
  Word w;
  w.letters.reserve(f.size());
  for (const TwoComplex::FaceStep& s : f) {
    w.letters.push_back(Letter{x.edges[s.edge].label, s.dir});
  }
  return w;
}

}  // namespace

bool is_isomorphic(const TwoComplex& x, const TwoComplex& y) {
  std::map<char, TwoComplex::Edge> ex, ey;
  for (const TwoComplex::Edge& e : x.edges) {
    if (!ex.emplace(e.label, e).second) {
      throw std::invalid_argument("is_isomorphic: duplicate edge label");
    }
  }
  for (const TwoComplex::Edge& e : y.edges) {
    if (!ey.emplace(e.label, e).second) {
      throw std::invalid_argument("is_isomorphic: duplicate edge label");
    }
  }
  if (x.vertex_count != y.vertex_count || x.edges.size() != y.edges.size() ||
      x.faces.size() != y.faces.size()) {
    return false;
  }
  // Matching labels force the vertex bijection on every non-isolated vertex.
  std::vector<int> to_y(x.vertex_count, -1);
  std::vector<bool> hit(y.vertex_count, false);
  for (const auto& [label, edge] : ex) {
    auto it = ey.find(label);
    if (it == ey.end()) return false;
    for (auto [vx, vy] :
         {std::pair{edge.tail, it->second.tail},
          std::pair{edge.head, it->second.head}}) {
      if (to_y[vx] == -1) {
        to_y[vx] = vy;
      } else if (to_y[vx] != vy) {
        return false;
      }
    }
  }
  for (int v = 0; v < x.vertex_count; ++v) {
    if (to_y[v] == -1) continue;
    if (hit[to_y[v]]) return false;  // not injective
    hit[to_y[v]] = true;
  }
  // Isolated vertices carry no structure; with equal totals it is enough
  // that every edge-incident vertex of y is matched.
  std::vector<bool> used(y.vertex_count, false);
  for (const TwoComplex::Edge& e : y.edges) {
    used[e.tail] = used[e.head] = true;
  }
  for (int v = 0; v < y.vertex_count; ++v) {
    if (used[v] && !hit[v]) return false;
  }

  // Faces as multisets of cyclic boundary words.
  std::vector<Word> fx, fy;
  for (const auto& f : x.faces) fx.push_back(canonical_cyclic(face_word(x, f)));
  for (const auto& f : y.faces) fy.push_back(canonical_cyclic(face_word(y, f)));
  std::sort(fx.begin(), fx.end(), lex_less);
  std::sort(fy.begin(), fy.end(), lex_less);
  return fx == fy;
}

nlohmann::ordered_json to_json(const TwoComplex& x) {
  nlohmann::ordered_json j;
  j["vertices"] = x.vertex_count;
  j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    j["edges"].push_back({{"id", i},
                          {"label", std::string(1, x.edges[i].label)},
                          {"tail", x.edges[i].tail},
                          {"head", x.edges[i].head}});
  }
  j["faces"] = nlohmann::ordered_json::array();
  for (const TwoComplex::FacePath& f : x.faces) {
    nlohmann::ordered_json face = nlohmann::ordered_json::array();
    for (const TwoComplex::FaceStep& s : f) {
      face.push_back(nlohmann::ordered_json::array(
          {std::string(1, x.edges[s.edge].label), s.dir}));
    }
    j["faces"].push_back(face);
  }
  return j;
}

}  // namespace cx2
