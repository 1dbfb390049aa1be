#pragma once

#include <optional>
#include <vector>

#include "toricfill/classify.hpp"
#include "toricfill/moment.hpp"
#include "toricfill/plumbing.hpp"

namespace toricfill {

// k/l = s1 - 1/(s2 - 1/(... - 1/sn)) with s1 >= 0 and s2..sn <= -2.
struct ContinuedFraction {
  std::vector<Int> coefficients;
  Rat value;
};

// Greedy expansion; unique within the shape above.
ContinuedFraction continued_fraction(const Int& k, const Int& l);

// Evaluates the nest exactly; throws DivisionByZero.
Rat eval_cf(const std::vector<Int>& coeffs);

// (n, 0, -n) for n = n0 .. n0+count-1: concave fillings of (S^1 x S^2, xi_t).
std::vector<PlumbingGraph> family_case1(int count, const Int& n0 = 0);

// Expansions of k/(mk+l) for successive m >= m0 with mk+l > 0: concave
// fillings of (L(k, l mod k), xi_t).
std::vector<PlumbingGraph> family_case2(const Int& k, const Int& l, int count,
                                        const Int& m0 = 0);

// Appends 2K zeros to every base member: K extra half-Lutz twists.
std::vector<PlumbingGraph> family_case3(const std::vector<PlumbingGraph>& base, int K);

// Cyclic closures of (n, 0, -n, 0 x (4N-2)): fillings of (T^3, xi_N).
std::vector<PlumbingGraph> family_free(int N, int count, const Int& n0 = 0);

struct FamilyRequest {
  ContactToricClass target;
  int count = 1;
  Int start = 0;  // n0 or m0 depending on the case
};

struct VerifiedMember {
  PlumbingGraph graph;
  ContactToricClass boundary;
  ConcavityCertificate certificate;
  bool toric_minimal = false;
  std::vector<Int> canonical;
};

struct VerifiedFamily {
  FamilyRequest request;
  std::vector<VerifiedMember> members;
};

// Dispatches to the case generators and attaches, for every member, a
// verified concavity certificate, the round-trip classification (must equal
// the target), the toric-minimality flag and the canonical form (pairwise
// distinct). Throws on any verification failure.
VerifiedFamily generate_fillings(const FamilyRequest& req);

}  // namespace toricfill
