#include "mtreg/bockstein/structure.hpp"

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

PointsStructure::PointsStructure(GroupData g, std::vector<int> m) : g_(g), m_(std::move(m)) {
  if (static_cast<int>(m_.size()) != g_.n() + 1)
    raise(ErrorCode::ShapeError, "structure needs n + 1 = " + std::to_string(g_.n() + 1) + " multiplicities");
  offset_.assign(m_.size(), 0);
  N_ = 0;
  for (std::size_t r = 0; r < m_.size(); ++r) {
    if (m_[r] < 0) raise(ErrorCode::ShapeError, "negative multiplicity");
    offset_[r] = N_;
    for (int j = 0; j < m_[r]; ++j) labels_.push_back({static_cast<int>(r), j});
    N_ += m_[r];
  }
}

int PointsStructure::index(int r, int j) const {
  if (r < 0 || r > n() || j < 0 || j >= m_[static_cast<std::size_t>(r)])
    raise(ErrorCode::ShapeError, "no point (" + std::to_string(r) + "," + std::to_string(j) + ")");
  return offset_[static_cast<std::size_t>(r)] + j;
}

std::string to_string(const PointIndex& x) { return "(" + std::to_string(x.r) + "," + std::to_string(x.j) + ")"; }

}  // namespace mtreg
