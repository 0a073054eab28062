#include "cx2/links.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cx2/union_find.hpp"

namespace cx2 {

LinkGraph vertex_link(const TwoComplex& x, int u) {
  if (u < 0 || u >= x.vertex_count) {
    throw std::invalid_argument("vertex_link: no such vertex");
  }
  LinkGraph link;
  link.vertex = u;
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    if (x.edges[e].tail == u) link.ends.push_back({e, 0});
    if (x.edges[e].head == u) link.ends.push_back({e, 1});
  }
  // Construction order is already (edge, end)-sorted.
  std::map<LinkGraph::End, int> index;
  for (std::size_t i = 0; i < link.ends.size(); ++i) {
    index[link.ends[i]] = static_cast<int>(i);
  }

  // Step s arrives at its target through its head end when crossed
  // forwards, through its tail end when crossed backwards; the next step
  // departs through the opposite kind.
  auto arrival = [&](TwoComplex::FaceStep s) -> LinkGraph::End {
    return {s.edge, s.dir > 0 ? 1 : 0};
  };
  auto departure = [&](TwoComplex::FaceStep s) -> LinkGraph::End {
    return {s.edge, s.dir > 0 ? 0 : 1};
  };

  for (int fi = 0; fi < static_cast<int>(x.faces.size()); ++fi) {
    const TwoComplex::FacePath& f = x.faces[fi];
    for (std::size_t i = 0; i < f.size(); ++i) {
      const TwoComplex::FaceStep& s = f[i];
      if (x.step_target(s) != u) continue;
      const TwoComplex::FaceStep& t = f[(i + 1) % f.size()];
      link.corners.push_back({index.at(arrival(s)), index.at(departure(t)),
                              fi, static_cast<int>(i)});
    }
  }

  UnionFind uf(static_cast<int>(link.ends.size()));
  for (const LinkGraph::Corner& c : link.corners) uf.unite(c.a, c.b);
  link.component.assign(link.ends.size(), -1);
  std::map<int, int> comp_index;
  for (std::size_t i = 0; i < link.ends.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    auto [it, fresh] = comp_index.try_emplace(root, link.component_count);
    if (fresh) ++link.component_count;
    link.component[i] = it->second;
  }
  return link;
}

bool is_link_connected(const TwoComplex& x) {
  for (int u = 0; u < x.vertex_count; ++u) {
    if (!vertex_link(x, u).connected()) return false;
  }
  return true;
}

LinkFactorization link_quotient_factorization(const TwoComplex& x) {
  CombinatorialDescription d = describe(x);
  DescriptionBuild build = build_description_complex(d);

  LinkFactorization out;
  out.y = std::move(build.complex);
  out.fibers.assign(x.vertex_count, {});
  // Corner i of polygon p sits where step i of face p departs in x; the
  // same corner's class is a vertex of y. That places every y-vertex over
  // an x-vertex.
  std::vector<int> over(out.y.vertex_count, -1);
  for (std::size_t p = 0; p < x.faces.size(); ++p) {
    const TwoComplex::FacePath& f = x.faces[p];
    for (std::size_t i = 0; i < f.size(); ++i) {
      int yv = build.vertex_of_corner[p][i];
      int xv = x.step_source(f[i]);
      if (over[yv] != -1 && over[yv] != xv) {
        throw std::logic_error("factorization: inconsistent vertex image");
      }
      over[yv] = xv;
    }
  }
  for (int yv = 0; yv < out.y.vertex_count; ++yv) {
    if (over[yv] == -1) {
      throw std::logic_error("factorization: unplaced vertex");
    }
    out.fibers[over[yv]].push_back(yv);
  }
  return out;
}

bool is_closed_surface(const CombinatorialDescription& d) {
  // Closed surface = every letter used exactly twice and every vertex link
  // a single circle (connected, all degrees 2).
  std::map<char, int> uses;
  for (const Word& r : d.relators) {
    for (const Letter& l : r) ++uses[l.generator];
  }
  for (const auto& [g, n] : uses) {
    if (n != 2) return false;
  }
  TwoComplex y = description_complex(d);
  for (int u = 0; u < y.vertex_count; ++u) {
    LinkGraph link = vertex_link(y, u);
    if (!link.connected() || link.ends.empty()) return false;
    std::vector<int> degree(link.ends.size(), 0);
    for (const LinkGraph::Corner& c : link.corners) {
      ++degree[c.a];
      ++degree[c.b];
    }
    for (int deg : degree) {
      if (deg != 2) return false;
    }
  }
  return true;
}

std::string to_dot(const LinkGraph& link) {
  std::ostringstream os;
  os << "graph link_v" << link.vertex << " {\n";
  for (const LinkGraph::End& e : link.ends) {
    os << "  \"e" << e.edge << '.' << (e.end == 0 ? 't' : 'h') << "\";\n";
  }
  for (const LinkGraph::Corner& c : link.corners) {
    const LinkGraph::End& a = link.ends[c.a];
    const LinkGraph::End& b = link.ends[c.b];
    os << "  \"e" << a.edge << '.' << (a.end == 0 ? 't' : 'h') << "\" -- \"e"
       << b.edge << '.' << (b.end == 0 ? 't' : 'h') << "\" [label=\"f"
       << c.face << '@' << c.position << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cx2
