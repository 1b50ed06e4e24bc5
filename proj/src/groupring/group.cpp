#include "mtreg/groupring/group.hpp"

#include <sstream>

#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

GroupData::GroupData(int p, int n) : p_(p), n_(n), order_(ipow(p, n)) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("GroupData: p must be an odd prime");
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("GroupData: p must be prime");
  if (n < 0) throw std::invalid_argument("GroupData: n must be non-negative");
}

std::int64_t GroupData::sub_order(int r) const {
  if (r < 0 || r > n_) throw std::invalid_argument("GroupData: level out of range");
  return ipow(p_, n_ - r);
}

GroupData GroupData::quotient(int r) const {
  if (r < 0 || r > n_) throw std::invalid_argument("GroupData: level out of range");
  return GroupData(p_, r);
}

IntElem trace_J(const GroupData& g, int r) {
  IntElem t = IntElem::zero(g, Integer(0));
  std::int64_t step = ipow(g.p(), r);
  for (std::int64_t k = 0; k < g.sub_order(r); ++k) t[k * step] = 1;
  return t;
}

IntElem trace_relative(const GroupData& g, int s, int r) {
  if (s > r) throw std::invalid_argument("trace_relative: need s <= r");
  IntElem t = IntElem::zero(g, Integer(0));
  std::int64_t step = ipow(g.p(), s);
  for (std::int64_t k = 0; k < ipow(g.p(), r - s); ++k) t[k * step] = 1;
  return t;
}

IntElem sigma_pow_minus_one(const GroupData& g, int r) {
  IntElem t = IntElem::basis(g, ipow(g.p(), r), Integer(0));
  t[0] -= 1;
  return t;
}

RatElem to_rational(const IntElem& x) {
  std::vector<Rational> c;
  c.reserve(x.coeffs().size());
  for (const auto& v : x.coeffs()) c.emplace_back(v);
  return RatElem(x.group(), std::move(c));
}

std::vector<std::int64_t> reduce_coeffs(const RatElem& x, const ZpmRing& R) {
  std::vector<std::int64_t> out;
  for (const auto& v : x.coeffs()) out.push_back(reduce_rational(v, R.mod));
  return out;
}

std::vector<std::int64_t> reduce_coeffs(const IntElem& x, const ZpmRing& R) {
  std::vector<std::int64_t> out;
  for (const auto& v : x.coeffs()) out.push_back(reduce_integer(v, R.mod));
  return out;
}

ZpmMatrix multiplication_matrix(const std::vector<std::int64_t>& x, const GroupData& g, const ZpmRing& R) {
  const std::int64_t ord = g.order();
  ZpmMatrix A(static_cast<int>(ord), static_cast<int>(ord));
  for (std::int64_t j = 0; j < ord; ++j)
    for (std::int64_t i = 0; i < ord; ++i)
      A(static_cast<int>((i + j) % ord), static_cast<int>(j)) = R.norm(x[static_cast<std::size_t>(i)]);
  return A;
}

std::vector<std::int64_t> invert_unit(const std::vector<std::int64_t>& x, const GroupData& g, const ZpmRing& R) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(g.order()), 0);
  e[0] = 1;
  auto sol = solve(R, multiplication_matrix(x, g, R), e);
  if (!sol) raise(ErrorCode::ZeroInversion, "group ring element is not a unit");
  return *sol;
}

namespace {
template <class D>
std::string render(const GroupRingElem<D>& x) {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t i = 0; i < x.group().order(); ++i) {
    if (x[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x[i].get_str() << ")";
    if (i != 0) os << "*s^" << i;
  }
  if (first) os << "0";
  return os.str();
}
}  // namespace

std::string to_string(const IntElem& x) { return render(x); }
std::string to_string(const RatElem& x) { return render(x); }

AugClass::AugClass(GroupData g, int level, const Integer& exponent) : g_(g), level_(level), c_(0) {
  if (level < 0 || level > g.n()) throw std::invalid_argument("AugClass: level out of range");
  c_ = reduce_integer(exponent, g.sub_order(level));
}

AugClass AugClass::of_element(GroupData g, int level, std::int64_t k) {
  std::int64_t step = ipow(g.p(), level);
  k = mod_norm(k, g.order());
  if (k % step != 0) throw std::invalid_argument("AugClass: element is not in J_l");
  return AugClass(g, level, Integer(static_cast<long>(k / step)));
}

namespace {
void same(const AugClass& a, const AugClass& b) {
  if (!(a.group() == b.group()) || a.level() != b.level())
    throw std::invalid_argument("AugClass: mixing different levels");
}
}  // namespace

AugClass operator+(const AugClass& a, const AugClass& b) {
  same(a, b);
  return AugClass(a.g_, a.level_, Integer(static_cast<long>(a.c_ + b.c_)));
}
AugClass operator-(const AugClass& a, const AugClass& b) {
  same(a, b);
  return AugClass(a.g_, a.level_, Integer(static_cast<long>(a.c_ - b.c_)));
}
AugClass operator-(const AugClass& a) { return AugClass(a.g_, a.level_, Integer(static_cast<long>(-a.c_))); }
AugClass operator*(const Integer& s, const AugClass& a) {
  return AugClass(a.g_, a.level_, s * Integer(static_cast<long>(a.c_)));
}
bool operator==(const AugClass& a, const AugClass& b) {
  return a.g_ == b.g_ && a.level_ == b.level_ && a.c_ == b.c_;
}

}  // namespace mtreg
