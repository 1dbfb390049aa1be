#pragma once

#include <string>
#include <vector>

#include "toricfill/moment.hpp"
#include "toricfill/plumbing.hpp"

namespace toricfill {

// Lerman classification data of the boundary contact toric 3-manifold.
// Non-free: lens space L(k, l) or S^1 x S^2, plus the number H of half-Lutz
// twists applied to the tight structure (tight iff H = 0).
// Free: (T^3, xi_N).
struct ContactToricClass {
  enum class Kind { Lens, S1xS2, Free };
  Kind kind = Kind::Lens;
  Int k = 0;          // Lens only, k >= 1
  Int l = 0;          // Lens only, in [0, k)
  int half_lutz = 0;  // non-free only
  int winding = 0;    // Free only, N >= 1

  bool tight() const { return kind == Kind::Free || half_lutz == 0; }
  bool operator==(const ContactToricClass&) const = default;

  static ContactToricClass lens(Int k, Int l, int h);
  static ContactToricClass s1xs2(int h);
  static ContactToricClass free_t3(int n);

  std::string str() const;
};

ContactToricClass classify_linear_boundary(const std::vector<Int>& weights);

struct RotationFailure {
  std::size_t rotation = 0;
  Error::Code code;
  std::string message;
};

class NotToricError : public Error {
public:
  NotToricError(std::string msg, std::vector<RotationFailure> f)
      : Error(Error::Code::NotToric, std::move(msg)), failures(std::move(f)) {}
  std::vector<RotationFailure> failures;
};

// Searches the rotations of the cyclic weight list for one whose 0-extended
// linear plumbing closes; throws NotToricError with per-rotation reasons.
ContactToricClass classify_cyclic_boundary(const PlumbingGraph& g);

struct CyclicToricStructure {
  std::size_t rotation = 0;
  CyclicClosure closure;
};
CyclicToricStructure cyclic_toric_structure(const PlumbingGraph& g);

// Same angle and some special unimodular matrix carrying one ray pair to the
// other.
bool cones_equivalent(const MomentCone& c1, const MomentCone& c2);

// L(k, l) ~ L(k, mk + l) through the shear [[1, m], [0, 1]].
std::pair<Int, Int> shear_equivalence(const Int& k, const Int& l, const Int& m);

}  // namespace toricfill
