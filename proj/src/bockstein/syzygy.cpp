#include "mtreg/bockstein/syzygy.hpp"

#include "mtreg/bockstein/phi.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg {

SyzygyPresentation::SyzygyPresentation(const PointsStructure& st, int M) : structure(st), R(st.group().p(), M) {
  const GroupData& g = st.group();
  const int ord = static_cast<int>(g.order());
  const int dimX = st.N() * ord;
  const int dimA = point_coord_dim(st);
  iota = ZpmMatrix(dimX, dimA);
  pi = ZpmMatrix(dimA, dimX);
  std::vector<std::vector<std::int64_t>> blocks;
  for (int k = 0; k < st.N(); ++k) {
    const int r = st.level(k);
    const std::int64_t q = ipow(g.p(), r);
    const int aoff = point_coord_offset(st, k);
    // iota(sigma^c P^t) = sigma^c Tr_{J_r} b.
    for (std::int64_t c = 0; c < q; ++c)
      for (std::int64_t t = 0; t < g.sub_order(r); ++t) iota(k * ord + static_cast<int>(c + t * q), aoff + static_cast<int>(c)) = 1;
    // pi(sigma^i b) = sigma^(i mod p^r) P^*.
    for (int i = 0; i < ord; ++i) pi(aoff + static_cast<int>(i % q), k * ord + i) = 1;
    blocks.push_back(reduce_coeffs(sigma_pow_minus_one(g, r), R));
  }
  theta = block_multiplication(blocks);
}

ZpmMatrix SyzygyPresentation::block_multiplication(const std::vector<std::vector<std::int64_t>>& per_block) const {
  const GroupData& g = structure.group();
  const int ord = static_cast<int>(g.order());
  ZpmMatrix A(structure.N() * ord, structure.N() * ord);
  for (int k = 0; k < structure.N(); ++k) {
    ZpmMatrix blk = multiplication_matrix(per_block[static_cast<std::size_t>(k)], g, R);
    for (int a = 0; a < ord; ++a)
      for (int b = 0; b < ord; ++b) A(k * ord + a, k * ord + b) = blk(a, b);
  }
  return A;
}

bool SyzygyPresentation::is_exact() const {
  if (!multiply(R, theta, iota).is_zero() || !multiply(R, pi, theta).is_zero()) return false;
  const long dimX = theta.rows(), dimA = iota.cols();
  const long im_iota = image_log_size(R, iota);
  const long im_theta = image_log_size(R, theta);
  const long im_pi = image_log_size(R, pi);
  const long M = R.M;
  // Injective iota, ker Theta = im iota, ker pi = im Theta, surjective pi.
  return im_iota == M * dimA && M * dimX - im_theta == im_iota && M * dimX - im_pi == im_theta && im_pi == M * dimA;
}

}  // namespace mtreg
