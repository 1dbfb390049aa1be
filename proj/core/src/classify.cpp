#include "toricfill/classify.hpp"

#include <stdexcept>

namespace toricfill {

ContactToricClass ContactToricClass::lens(Int k, Int l, int h) {
  if (k < 1) throw Error(Error::Code::InvalidLens, "lens k must be positive");
  if (l < 0 || l >= k) throw Error(Error::Code::InvalidLens, "lens l must lie in [0, k)");
  if (l > 0 && boost::multiprecision::gcd(k, l) != 1)
    throw Error(Error::Code::InvalidLens, "lens k and l must be coprime");
  if (h < 0) throw std::invalid_argument("half-Lutz count must be non-negative");
  ContactToricClass c;
  c.kind = Kind::Lens;
  c.k = std::move(k);
  c.l = std::move(l);
  c.half_lutz = h;
  return c;
}

ContactToricClass ContactToricClass::s1xs2(int h) {
  if (h < 0) throw std::invalid_argument("half-Lutz count must be non-negative");
  ContactToricClass c;
  c.kind = Kind::S1xS2;
  c.half_lutz = h;
  return c;
}

ContactToricClass ContactToricClass::free_t3(int n) {
  if (n < 1) throw std::invalid_argument("winding must be at least 1");
  ContactToricClass c;
  c.kind = Kind::Free;
  c.winding = n;
  return c;
}

std::string ContactToricClass::str() const {
  switch (kind) {
    case Kind::Lens:
      return "L(" + k.str() + "," + l.str() + ") H=" + std::to_string(half_lutz);
    case Kind::S1xS2:
      return "S1xS2 H=" + std::to_string(half_lutz);
    case Kind::Free:
      return "T3 N=" + std::to_string(winding);
  }
  return "?";
}

namespace {

// Maps u1 to (0,1); composed with the orientation fix on u2 this reads off
// the residue l of the model cone with normals (0,1) and (-k, l).
LatticeMat normalize_to_vertical(const LatticeVec& u1) {
  // ccw quarter turn carries (1,0), the target of sl2_sending_to_e1, to (0,1).
  LatticeMat j{0, -1, 1, 0};
  return j * sl2_sending_to_e1(u1);
}

}  // namespace

ContactToricClass classify_linear_boundary(const std::vector<Int>& weights) {
  NormalChain chain = normal_chain(weights);
  ConeAngle angle = cone_angle(chain);
  const LatticeVec& u1 = chain.left_ray_normal();
  const LatticeVec& u2 = chain.right_ray_normal();

  if (angle.exact) return ContactToricClass::s1xs2(angle.half_turns - 1);

  Int d = det2(u1, u2);
  Int k = d < 0 ? Int(-d) : d;
  LatticeVec w = d > 0 ? u2 : -u2;  // orient so det(u1, w) = +k
  LatticeMat u = normalize_to_vertical(u1);
  LatticeVec model = u.apply(w);
  if (model.x != -k)
    throw std::logic_error("normalization did not reach the model cone");
  return ContactToricClass::lens(k, mod_floor(model.y, k), angle.half_turns);
}

CyclicToricStructure cyclic_toric_structure(const PlumbingGraph& g) {
  if (g.shape != Shape::Cyclic)
    throw Error(Error::Code::InvalidGraph, "expected a cyclic plumbing");
  const std::size_t n = g.size();
  std::vector<RotationFailure> failures;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Int> rotated(n + 1);
    for (std::size_t i = 0; i < n; ++i) rotated[i] = g.weights[(r + i) % n];
    rotated[n] = 0;
    auto res = cyclic_closure(rotated);
    if (auto* ok = std::get_if<CyclicClosure>(&res))
      return CyclicToricStructure{r, std::move(*ok)};
    const auto& err = std::get<ClosureError>(res);
    failures.push_back({r, err.code, err.message});
  }
  std::string msg = "no rotation of the cyclic plumbing closes";
  throw NotToricError(std::move(msg), std::move(failures));
}

ContactToricClass classify_cyclic_boundary(const PlumbingGraph& g) {
  return ContactToricClass::free_t3(cyclic_toric_structure(g).closure.winding);
}

bool cones_equivalent(const MomentCone& c1, const MomentCone& c2) {
  if (!(c1.angle == c2.angle)) return false;
  if (c1.angle.exact) {
    // The second ray is +-R1 with the sign fixed by the parity of the angle;
    // any primitive vector maps to any other by a special unimodular matrix.
    return true;
  }
  Int b1 = det2(c1.r1, c1.r2);
  Int b2 = det2(c2.r1, c2.r2);
  if (b1 != b2) return false;
  LatticeVec m1 = sl2_sending_to_e1(c1.r1).apply(c1.r2);
  LatticeVec m2 = sl2_sending_to_e1(c2.r1).apply(c2.r2);
  // Both are (a_i, b) with b = -det; the shear stabilizer of (1,0) shifts a
  // by multiples of b.
  Int b = m1.y;
  Int babs = b < 0 ? Int(-b) : b;
  return mod_floor(m1.x, babs) == mod_floor(m2.x, babs);
}

std::pair<Int, Int> shear_equivalence(const Int& k, const Int& l, const Int& m) {
  if (k <= 0) throw Error(Error::Code::InvalidLens, "k must be positive");
  return {k, m * k + l};
}

}  // namespace toricfill
