#ifndef CX2_UNION_FIND_HPP_
#define CX2_UNION_FIND_HPP_

#include <numeric>
#include <vector>

namespace cx2 {

/// Plain disjoint-set forest with path compression.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace cx2

#endif  // CX2_UNION_FIND_HPP_
