#include "toricfill/lattice.hpp"

#include <ostream>
#include <sstream>

namespace toricfill {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Rat rat_floor(const Rat& q) { return Rat(floor_div(rat_num(q), rat_den(q))); }

bool LatticeVec::is_primitive() const {
  if (is_zero()) return false;
  return boost::multiprecision::gcd(x, y) == 1;
}

std::string LatticeVec::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
  return os << "(" << v.x << "," << v.y << ")";
}

std::string LatticeMat::str() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

namespace {

// g = a*s + b*t with g = gcd(a,b) >= 0.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  Int old_r = a, r = b;
  Int old_s = 1, s1 = 0;
  Int old_t = 0, t1 = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s1; old_s = s1; s1 = tmp;
    tmp = old_t - q * t1; old_t = t1; t1 = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  g = old_r; s = old_s; t = old_t;
}

}  // namespace

LatticeMat sl2_sending_to_e1(const LatticeVec& v) {
  if (!v.is_primitive())
    throw Error(Error::Code::NotPrimitive,
                "vector " + v.str() + " is not primitive");
  Int g, a, b;
  ext_gcd(v.x, v.y, g, a, b);
  // a*x + b*y = 1, so U = [[a, b], [-y, x]] has det = a*x + b*y = 1
  // and U*v = (1, 0).
  return LatticeMat{a, b, -v.y, v.x};
}

}  // namespace toricfill
