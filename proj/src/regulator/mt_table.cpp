#include "mtreg/regulator/mt_table.hpp"

#include <algorithm>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

void MTTable::validate() const {
  const PointsStructure& st = structure;
  const GroupData& g = st.group();
  const int lower = st.lower_count();
  for (int row = 0; row < lower; ++row)
    for (int col = 0; col < lower; ++col) {
      const int r = st.level(row), s = st.level(col);
      const int l = std::max(r, s);
      const std::string where = "entry " + to_string(st.at(row)) + "," + to_string(st.at(col));
      auto it = entries.find({row, col});
      if (it == entries.end()) raise(ErrorCode::TableLevelMismatch, where + " is missing");
      const auto& fam = it->second;
      if (static_cast<std::int64_t>(fam.size()) != ipow(g.p(), r))
        raise(ErrorCode::TableLevelMismatch, where + " needs " + std::to_string(ipow(g.p(), r)) + " values");
      for (const auto& v : fam)
        if (v.level() != l || !(v.group() == g))
          raise(ErrorCode::TableLevelMismatch, where + " has level " + std::to_string(v.level()) + ", expected " + std::to_string(l));
      if (r > s) {
        const std::int64_t q = ipow(g.p(), s);
        for (std::size_t c = 0; c < fam.size(); ++c)
          if (!(fam[c] == fam[c % static_cast<std::size_t>(q)]))
            raise(ErrorCode::TableLevelMismatch, where + " is not invariant under J_" + std::to_string(s));
      }
    }
  for (const auto& [key, fam] : entries)
    if (key.first >= lower || key.second >= lower || key.first < 0 || key.second < 0)
      raise(ErrorCode::TableLevelMismatch, "entry index out of range");
}

const std::vector<AugClass>& MTTable::at(int row, int col) const {
  auto it = entries.find({row, col});
  if (it == entries.end()) raise(ErrorCode::TableLevelMismatch, "missing table entry");
  return it->second;
}

bool operator==(const MTTable& a, const MTTable& b) { return a.structure == b.structure && a.entries == b.entries; }

std::vector<AugClass> aug_family(const GroupData& g, int level, const std::vector<std::int64_t>& exps) {
  std::vector<AugClass> out;
  out.reserve(exps.size());
  for (auto e : exps) out.emplace_back(g, level, Integer(static_cast<long>(e)));
  return out;
}

}  // namespace mtreg
