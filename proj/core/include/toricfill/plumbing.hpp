#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "toricfill/feasibility.hpp"
#include "toricfill/lattice.hpp"

namespace toricfill {

enum class Shape { Linear, Cyclic };

// Plumbing of disk bundles over spheres along a path or a cycle; only the
// self-intersection weights are data (all base surfaces have genus 0 and all
// plumbing edges are positive).
struct PlumbingGraph {
  Shape shape;
  std::vector<Int> weights;

  PlumbingGraph(Shape s, std::vector<Int> w);

  std::size_t size() const { return weights.size(); }
  bool operator==(const PlumbingGraph&) const = default;
};

// Symmetric integer matrix with the weights on the diagonal and a 1 for every
// plumbing edge.
struct IntersectionForm {
  std::size_t n = 0;
  std::vector<Int> entries;  // row-major n*n

  IntersectionForm() = default;
  IntersectionForm(std::size_t dim, std::vector<Int> e);

  const Int& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  Int& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  bool operator==(const IntersectionForm&) const = default;
};

IntersectionForm intersection_form(const PlumbingGraph& g);

// Exact Sylvester test: (-1)^k * det(leading k x k minor) > 0 for all k.
bool is_negative_definite(const IntersectionForm& q);

// z < 0 componentwise, a > 0 componentwise, -Q z = a exactly.
struct ConcavityCertificate {
  std::vector<Rat> z;
  std::vector<Rat> a;
};

std::variant<ConcavityCertificate, Refutation> concavity_certificate(
    const IntersectionForm& q);

bool verify_certificate(const IntersectionForm& q, const ConcavityCertificate& c);

struct BlowUpSite {
  enum class Kind { Interior, LeftEnd, RightEnd };
  Kind kind;
  std::size_t index = 0;  // 1-based edge index for Interior

  static BlowUpSite interior(std::size_t j) { return {Kind::Interior, j}; }
  static BlowUpSite left_end() { return {Kind::LeftEnd, 0}; }
  static BlowUpSite right_end() { return {Kind::RightEnd, 0}; }
};

// Corner chop at the weight level: the new sphere has weight -1 and both
// neighbours across the chopped corner drop by one.
PlumbingGraph blow_up(const PlumbingGraph& g, const BlowUpSite& site);

// Inverse move at a -1 vertex (1-based index j).
PlumbingGraph blow_down(const PlumbingGraph& g, std::size_t j);

// No -1 weight, so no toric blow-down applies.
bool is_toric_minimal(const PlumbingGraph& g);

// Repeatedly blow down -1 vertices (first one in index order) until minimal
// or no move applies. Used to compare blow-up orbits.
PlumbingGraph toric_minimal_model(const PlumbingGraph& g);

// Linear: lexicographic min of (weights, reversed weights).
// Cyclic: lexicographic min over the dihedral orbit.
// Graphs with different canonical forms are equivariantly distinct.
std::vector<Int> canonical_form(const PlumbingGraph& g);

std::vector<std::vector<Rat>> negated_form_rows(const IntersectionForm& q);

}  // namespace toricfill
