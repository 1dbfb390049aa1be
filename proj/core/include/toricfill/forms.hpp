#pragma once

#include <optional>
#include <vector>

#include "toricfill/plumbing.hpp"

namespace toricfill {

struct FormInvariants {
  Int determinant;
  int rank = 0;
  int positive = 0;  // signature (n+, n-, n0)
  int negative = 0;
  int zero = 0;
  bool even = false;  // all diagonal entries even

  bool operator==(const FormInvariants&) const = default;
};

// Determinant by exact elimination; rank and signature by exact rational
// symmetric (congruence) diagonalization; parity from the diagonal.
FormInvariants form_invariants(const IntersectionForm& q);

using CongruenceWitness = std::vector<std::vector<Int>>;

// Exhaustive search for unimodular P with entries in [-bound, bound] and
// Q1 = P Q2 P^T; lexicographically first witness, or absent. Evidence of
// non-congruence only; definitive negatives need a separating invariant.
std::optional<CongruenceWitness> congruent_within_bound(const IntersectionForm& q1,
                                                        const IntersectionForm& q2,
                                                        int bound);

}  // namespace toricfill
