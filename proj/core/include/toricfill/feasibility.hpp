#pragma once

#include <optional>
#include <vector>

#include "toricfill/lattice.hpp"

namespace toricfill {

// Homogeneous system: find x with  equalities * x = 0  and every strict row
// strictly positive, i.e. (stricts * x)_i > 0.
struct HomogeneousSystem {
  std::size_t cols = 0;
  std::vector<std::vector<Rat>> equalities;  // r_E x cols, may be empty
  std::vector<std::vector<Rat>> stricts;     // r_S x cols, r_S >= 1

  HomogeneousSystem(std::size_t columns,
                    std::vector<std::vector<Rat>> eq,
                    std::vector<std::vector<Rat>> st);
};

// Gordan/Farkas-type alternative: multipliers y_strict >= 0 (not all zero)
// and free y_eq with  stricts^T y_strict + equalities^T y_eq = 0.
// No x can then satisfy the system: it would give 0 = <Sx, y_S> > 0.
struct Refutation {
  std::vector<Rat> strict_multipliers;
  std::vector<Rat> equality_multipliers;
};

struct FeasibilityAnswer {
  std::optional<std::vector<Rat>> solution;
  std::optional<Refutation> refutation;

  bool feasible() const { return solution.has_value(); }
};

// Deterministic for a fixed input (fixed elimination and value-picking rules).
FeasibilityAnswer solve_homogeneous(const HomogeneousSystem& sys);

// Exact re-substitution check of either kind of answer.
bool verify_answer(const HomogeneousSystem& sys, const FeasibilityAnswer& ans);
bool verify_solution(const HomogeneousSystem& sys, const std::vector<Rat>& x);
bool verify_refutation(const HomogeneousSystem& sys, const Refutation& ref);

}  // namespace toricfill
