#pragma once

#include <string>
#include <vector>

#include "mtreg/groupring/group.hpp"

namespace mtreg {

/// Double index (r, j) of P_{(r,j)} and P^t_{(r,j)}; j is 0-based.
struct PointIndex {
  int r = 0;
  int j = 0;
  friend bool operator==(const PointIndex& a, const PointIndex& b) { return a.r == b.r && a.j == b.j; }
};

/// m = (m_0, ..., m_n) with the points ordered by (r, j) lexicographically.
class PointsStructure {
 public:
  PointsStructure() = default;
  /// ShapeError unless m has n + 1 non-negative entries.
  PointsStructure(GroupData g, std::vector<int> m);

  const GroupData& group() const { return g_; }
  const std::vector<int>& m() const { return m_; }
  int n() const { return g_.n(); }
  int N() const { return N_; }
  int m_top() const { return m_.back(); }
  int offset(int r) const { return offset_[static_cast<std::size_t>(r)]; }
  int index(int r, int j) const;
  PointIndex at(int k) const { return labels_[static_cast<std::size_t>(k)]; }
  int level(int k) const { return at(k).r; }
  /// Number of indices with r < n.
  int lower_count() const { return N_ - m_top(); }

  friend bool operator==(const PointsStructure& a, const PointsStructure& b) { return a.g_ == b.g_ && a.m_ == b.m_; }

 private:
  GroupData g_;
  std::vector<int> m_{0, 0};
  std::vector<int> offset_{0, 0};
  std::vector<PointIndex> labels_;
  int N_ = 0;
};

std::string to_string(const PointIndex& x);

}  // namespace mtreg
