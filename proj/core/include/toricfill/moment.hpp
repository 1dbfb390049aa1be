#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "toricfill/feasibility.hpp"
#include "toricfill/lattice.hpp"
#include "toricfill/plumbing.hpp"

namespace toricfill {

// Inward normals of the moment picture of a linear plumbing: nu[0] and
// nu[n+1] are the ray collapse normals, nu[1..n] the edge normals.
// Consecutive determinants are all 1 (Delzant smoothness).
struct NormalChain {
  std::vector<LatticeVec> nu;

  std::size_t edge_count() const { return nu.size() - 2; }
  const LatticeVec& left_ray_normal() const { return nu.front(); }
  const LatticeVec& right_ray_normal() const { return nu.back(); }
  const LatticeVec& edge_normal(std::size_t j) const { return nu[j]; }  // 1-based
};

// The angle t2 - t1 between the moment-cone rays, kept exact: either exactly
// h*pi (exact = true, h >= 1) or strictly between h*pi and (h+1)*pi.
struct ConeAngle {
  int half_turns = 0;
  bool exact = false;

  bool operator==(const ConeAngle&) const = default;
};

struct MomentCone {
  LatticeVec r1;
  LatticeVec r2;
  ConeAngle angle;
};

// Realized moment picture: edge lengths plus (open case) ray parameters.
// Open case: rho1 * R1 + sum_j len[j] * d_j = rho2 * R2.
// Closed case: sum_j len[j] * d_j = 0, winding = N.
struct MomentImage {
  bool closed = false;
  NormalChain chain;
  std::vector<Rat> lengths;
  Rat rho1 = 0;
  Rat rho2 = 0;
  int winding = 0;
  std::vector<std::array<Rat, 2>> vertices;
};

LatticeMat gluing_matrix(const Int& s);

// The two cone rays straight from the weights (n >= 2).
std::pair<LatticeVec, LatticeVec> rays_eq1(const std::vector<Int>& weights);

NormalChain normal_chain(const std::vector<Int>& weights);

std::pair<LatticeVec, LatticeVec> rays_from_chain(const NormalChain& c);

// Inverse of normal_chain via the determinant rule.
std::vector<Int> recover_weights(const NormalChain& c);

ConeAngle cone_angle(const NormalChain& c);

MomentCone moment_cone(const NormalChain& c);

// Direction of travel along edge j when walking from ray 1 to ray 2.
inline LatticeVec edge_direction(const NormalChain& c, std::size_t j) {
  return rotate90(c.edge_normal(j), Rotation::cw);
}

// Corner chop between nu[j] and nu[j+1] (j = 0 chops at the left ray,
// j = edge_count() at the right ray): inserts nu[j] + nu[j+1].
NormalChain chop_corner(const NormalChain& c, std::size_t j);

// Positive rational edge lengths and ray parameters; throws NoRealization
// (with the solver's refutation in the message) when infeasible.
MomentImage edge_lengths(const NormalChain& c);

struct ClosureError {
  Error::Code code;
  std::string message;
  std::optional<Refutation> refutation;
};

struct CyclicClosure {
  PlumbingGraph cyclic;
  int winding = 0;   // N, angle of the source linear plumbing = 2N*pi
  MomentImage image;
};

// Plumb the first and last vertices of a linear plumbing (..., 0) whose rays
// coincide and whose end edges are parallel.
std::variant<CyclicClosure, ClosureError> cyclic_closure(const std::vector<Int>& weights);

}  // namespace toricfill
