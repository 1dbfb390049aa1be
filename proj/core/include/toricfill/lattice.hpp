#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

#include "toricfill/error.hpp"

namespace toricfill {

// All integer arithmetic in the library is arbitrary precision: continued
// fractions and matrix products outgrow fixed-width types quickly.
using Int = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator (cpp_rational canonicalizes).
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor(a/b) for b != 0.
Int floor_div(const Int& a, const Int& b);
// Residue in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);
Rat rat_floor(const Rat& q);

struct LatticeVec {
  Int x;
  Int y;

  bool operator==(const LatticeVec&) const = default;
  LatticeVec operator+(const LatticeVec& o) const { return {x + o.x, y + o.y}; }
  LatticeVec operator-(const LatticeVec& o) const { return {x - o.x, y - o.y}; }
  LatticeVec operator-() const { return {-x, -y}; }

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_primitive() const;
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const LatticeVec& v);

// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct LatticeMat {
  Int a, b, c, d;

  static LatticeMat identity() { return {1, 0, 0, 1}; }

  bool operator==(const LatticeMat&) const = default;
  LatticeMat operator*(const LatticeMat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  LatticeVec apply(const LatticeVec& v) const {
    return {a * v.x + b * v.y, c * v.x + d * v.y};
  }

  Int det() const { return a * d - b * c; }
  bool is_unimodular() const { return det() == 1 || det() == -1; }
  bool is_special() const { return det() == 1; }
  std::string str() const;
};

enum class Rotation { ccw, cw };

inline Int det2(const LatticeVec& u, const LatticeVec& v) {
  return u.x * v.y - u.y * v.x;
}

inline Int dot2(const LatticeVec& u, const LatticeVec& v) {
  return u.x * v.x + u.y * v.y;
}

inline LatticeVec rotate90(const LatticeVec& v, Rotation sense) {
  return sense == Rotation::ccw ? LatticeVec{-v.y, v.x} : LatticeVec{v.y, -v.x};
}

// A special unimodular U with U*v = (1,0). Not unique; this one is fixed by
// the extended Euclid run below, so results are deterministic.
LatticeMat sl2_sending_to_e1(const LatticeVec& v);

}  // namespace toricfill
