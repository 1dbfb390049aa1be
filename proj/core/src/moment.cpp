#include "toricfill/moment.hpp"

#include <stdexcept>

namespace toricfill {

LatticeMat gluing_matrix(const Int& s) { return LatticeMat{-s, -1, 1, 0}; }

std::pair<LatticeVec, LatticeVec> rays_eq1(const std::vector<Int>& weights) {
  const std::size_t n = weights.size();
  if (n < 2)
    throw Error(Error::Code::TooShort, "ray formula needs at least 2 vertices");
  LatticeVec r1{-1, weights[0]};
  LatticeVec r2{weights[n - 1], -1};
  for (std::size_t j = n - 1; j >= 2; --j) r2 = gluing_matrix(weights[j - 1]).apply(r2);
  return {r1, r2};
}

NormalChain normal_chain(const std::vector<Int>& weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw Error(Error::Code::TooShort, "empty weight list");
  std::vector<LatticeVec> nu(n + 2);
  nu[1] = LatticeVec{1, 0};
  nu[2] = LatticeVec{0, 1};
  for (std::size_t j = 2; j <= n; ++j) {
    const Int& s = weights[j - 1];
    nu[j + 1] = LatticeVec{-nu[j - 1].x - s * nu[j].x, -nu[j - 1].y - s * nu[j].y};
  }
  nu[0] = LatticeVec{-nu[2].x - weights[0] * nu[1].x, -nu[2].y - weights[0] * nu[1].y};
  NormalChain c{std::move(nu)};
  for (std::size_t j = 0; j + 1 < c.nu.size(); ++j)
    if (det2(c.nu[j], c.nu[j + 1]) != 1)
      throw std::logic_error("normal chain lost the determinant invariant");
  return c;
}

std::pair<LatticeVec, LatticeVec> rays_from_chain(const NormalChain& c) {
  return {rotate90(c.left_ray_normal(), Rotation::cw),
          rotate90(c.right_ray_normal(), Rotation::ccw)};
}

std::vector<Int> recover_weights(const NormalChain& c) {
  const std::size_t n = c.edge_count();
  std::vector<Int> w(n);
  for (std::size_t j = 1; j <= n; ++j) w[j - 1] = det2(c.nu[j + 1], c.nu[j - 1]);
  return w;
}

namespace {

// Position of v relative to the line through base and its perpendicular,
// using only exact sign computations. Even classes are the four exact
// directions (0 = +base, 4 = -base), odd classes the open quadrants between
// them, in counterclockwise order.
int position_class(const LatticeVec& base, const LatticeVec& v) {
  Int d = det2(base, v);
  Int t = dot2(base, v);
  if (d > 0) return t > 0 ? 1 : (t == 0 ? 2 : 3);
  if (d < 0) return t < 0 ? 5 : (t == 0 ? 6 : 7);
  return t > 0 ? 0 : 4;
}

}  // namespace

ConeAngle cone_angle(const NormalChain& c) {
  // Each chain step turns counterclockwise by strictly less than pi
  // (consecutive determinant 1), so the step from class a lands at most four
  // classes ahead and the crossings of the +-nu0 line can be read off from
  // the class walk alone. Counting classes 0 and 4 in the half-open walk
  // (a, b] gives m = number of multiples of pi in (0, T], T = total turning.
  const LatticeVec& base = c.left_ray_normal();
  int m = 0;
  int cur = 0;  // class of nu0 itself
  for (std::size_t j = 1; j < c.nu.size(); ++j) {
    int next = position_class(base, c.nu[j]);
    int steps = 0;
    while (cur != next) {
      cur = (cur + 1) % 8;
      if (cur == 0 || cur == 4) ++m;
      if (++steps > 4) throw std::logic_error("chain step turned by pi or more");
    }
  }
  bool exact = (cur == 0 || cur == 4);
  // T = m*pi exactly, or m*pi < T < (m+1)*pi; the cone angle is T - pi.
  if (m < (exact ? 2 : 1))
    throw Error(Error::Code::DegenerateAngle,
                "chain turns by at most pi: no concave toric picture in this frame");
  return ConeAngle{m - 1, exact};
}

MomentCone moment_cone(const NormalChain& c) {
  auto [r1, r2] = rays_from_chain(c);
  return MomentCone{r1, r2, cone_angle(c)};
}

NormalChain chop_corner(const NormalChain& c, std::size_t j) {
  if (j + 1 >= c.nu.size())
    throw Error(Error::Code::InvalidSite, "no corner at index " + std::to_string(j));
  NormalChain out = c;
  out.nu.insert(out.nu.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                c.nu[j] + c.nu[j + 1]);
  return out;
}

namespace {

std::vector<std::array<Rat, 2>> walk_vertices(const NormalChain& c,
                                              const std::array<Rat, 2>& start,
                                              const std::vector<Rat>& lengths) {
  std::vector<std::array<Rat, 2>> pts{start};
  for (std::size_t j = 1; j <= lengths.size(); ++j) {
    LatticeVec d = edge_direction(c, j);
    const auto& p = pts.back();
    pts.push_back({p[0] + lengths[j - 1] * Rat(d.x), p[1] + lengths[j - 1] * Rat(d.y)});
  }
  return pts;
}

}  // namespace

MomentImage edge_lengths(const NormalChain& c) {
  const std::size_t n = c.edge_count();
  auto [r1, r2] = rays_from_chain(c);

  // Unknowns (rho1, len_1..len_n, rho2), all > 0, with
  // rho1*R1 + sum len_j d_j - rho2*R2 = 0.
  const std::size_t cols = n + 2;
  std::vector<std::vector<Rat>> eq(2, std::vector<Rat>(cols, Rat(0)));
  eq[0][0] = Rat(r1.x);
  eq[1][0] = Rat(r1.y);
  for (std::size_t j = 1; j <= n; ++j) {
    LatticeVec d = edge_direction(c, j);
    eq[0][j] = Rat(d.x);
    eq[1][j] = Rat(d.y);
  }
  eq[0][cols - 1] = Rat(-r2.x);
  eq[1][cols - 1] = Rat(-r2.y);

  std::vector<std::vector<Rat>> stricts(cols, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t i = 0; i < cols; ++i) stricts[i][i] = 1;

  HomogeneousSystem sys(cols, std::move(eq), std::move(stricts));
  FeasibilityAnswer ans = solve_homogeneous(sys);
  if (!ans.feasible())
    throw Error(Error::Code::NoRealization,
                "no positive edge lengths close the picture (refutation verified)");

  const auto& x = *ans.solution;
  MomentImage img;
  img.closed = false;
  img.chain = c;
  img.rho1 = x[0];
  img.rho2 = x[cols - 1];
  img.lengths.assign(x.begin() + 1, x.end() - 1);
  img.vertices =
      walk_vertices(c, {img.rho1 * Rat(r1.x), img.rho1 * Rat(r1.y)}, img.lengths);
  return img;
}

std::variant<CyclicClosure, ClosureError> cyclic_closure(const std::vector<Int>& weights) {
  const std::size_t m = weights.size();
  if (m < 4)
    throw Error(Error::Code::TooShort, "cyclic closure needs at least 4 vertices");
  if (weights.back() != 0)
    throw Error(Error::Code::InvalidGraph, "cyclic closure needs a trailing 0 weight");

  NormalChain c = normal_chain(weights);

  ConeAngle ang;
  try {
    ang = cone_angle(c);
  } catch (const Error&) {
    return ClosureError{Error::Code::RaysDoNotCoincide,
                        "cone angle is degenerate; rays do not coincide", {}};
  }
  if (!ang.exact || ang.half_turns % 2 != 0)
    return ClosureError{Error::Code::RaysDoNotCoincide,
                        "rays of the moment cone do not coincide (angle "
                        "half-turns: " + std::to_string(ang.half_turns) +
                            (ang.exact ? ", exact" : ", not exact") + ")",
                        {}};

  // End edges must continue each other through the shared vertex.
  if (!(c.edge_normal(1) == c.edge_normal(m))) {
    LatticeVec d1 = edge_direction(c, 1);
    LatticeVec dm = edge_direction(c, m);
    return ClosureError{Error::Code::EndEdgesNotParallel,
                        "end edges not parallel: d1 = " + d1.str() +
                            ", d" + std::to_string(m) + " = " + dm.str(),
                        {}};
  }

  std::vector<std::vector<Rat>> eq(2, std::vector<Rat>(m, Rat(0)));
  for (std::size_t j = 1; j <= m; ++j) {
    LatticeVec d = edge_direction(c, j);
    eq[0][j - 1] = Rat(d.x);
    eq[1][j - 1] = Rat(d.y);
  }
  std::vector<std::vector<Rat>> stricts(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) stricts[i][i] = 1;

  HomogeneousSystem sys(m, std::move(eq), std::move(stricts));
  FeasibilityAnswer ans = solve_homogeneous(sys);
  if (!ans.feasible())
    return ClosureError{Error::Code::NoClosedRealization,
                        "no positive lengths close the cycle", ans.refutation};

  MomentImage img;
  img.closed = true;
  img.chain = c;
  img.lengths = *ans.solution;
  img.winding = ang.half_turns / 2;
  img.vertices = walk_vertices(c, {Rat(0), Rat(0)}, img.lengths);

  std::vector<Int> cyc(weights.begin(), weights.end() - 1);
  return CyclicClosure{PlumbingGraph(Shape::Cyclic, std::move(cyc)), img.winding,
                       std::move(img)};
}

}  // namespace toricfill
