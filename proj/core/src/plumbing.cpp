#include "toricfill/plumbing.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricfill {

PlumbingGraph::PlumbingGraph(Shape s, std::vector<Int> w)
    : shape(s), weights(std::move(w)) {
  if (shape == Shape::Linear && weights.empty())
    throw Error(Error::Code::InvalidGraph, "linear plumbing needs at least 1 vertex");
  if (shape == Shape::Cyclic && weights.size() < 3)
    throw Error(Error::Code::InvalidGraph, "cyclic plumbing needs at least 3 vertices");
}

IntersectionForm::IntersectionForm(std::size_t dim, std::vector<Int> e)
    : n(dim), entries(std::move(e)) {
  if (entries.size() != n * n)
    throw std::invalid_argument("entry count does not match dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i))
        throw std::invalid_argument("intersection form must be symmetric");
}

IntersectionForm intersection_form(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  IntersectionForm q(n, std::vector<Int>(n * n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) q.at(i, i) = g.weights[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    q.at(i, i + 1) = 1;
    q.at(i + 1, i) = 1;
  }
  if (g.shape == Shape::Cyclic) {
    q.at(0, n - 1) = 1;
    q.at(n - 1, 0) = 1;
  }
  return q;
}

namespace {

// Determinant of the leading k x k minor, exact over Q.
Int leading_minor_det(const IntersectionForm& q, std::size_t k) {
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rat(q.at(i, j));
  Rat det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = col;
    while (p < k && m[p][col] == 0) ++p;
    if (p == k) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < k; ++j) m[r][j] -= f * m[col][j];
    }
  }
  // Integer matrix, so the product of pivots is an integer.
  return rat_num(det);
}

}  // namespace

bool is_negative_definite(const IntersectionForm& q) {
  if (q.n == 0) return false;
  for (std::size_t k = 1; k <= q.n; ++k) {
    Int d = leading_minor_det(q, k);
    if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

std::vector<std::vector<Rat>> negated_form_rows(const IntersectionForm& q) {
  std::vector<std::vector<Rat>> rows(q.n, std::vector<Rat>(q.n));
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j) rows[i][j] = Rat(-q.at(i, j));
  return rows;
}

std::variant<ConcavityCertificate, Refutation> concavity_certificate(
    const IntersectionForm& q) {
  // Stack -Qz > 0 over -z > 0.
  std::vector<std::vector<Rat>> stricts = negated_form_rows(q);
  for (std::size_t i = 0; i < q.n; ++i) {
    std::vector<Rat> row(q.n, Rat(0));
    row[i] = -1;
    stricts.push_back(std::move(row));
  }
  HomogeneousSystem sys(q.n, {}, std::move(stricts));
  FeasibilityAnswer ans = solve_homogeneous(sys);
  if (!ans.feasible()) return *ans.refutation;

  ConcavityCertificate cert;
  cert.z = *ans.solution;
  cert.a.resize(q.n, Rat(0));
  for (std::size_t i = 0; i < q.n; ++i)
    for (std::size_t j = 0; j < q.n; ++j) cert.a[i] -= Rat(q.at(i, j)) * cert.z[j];
  if (!verify_certificate(q, cert))
    throw std::logic_error("certificate failed exact re-verification");
  return cert;
}

bool verify_certificate(const IntersectionForm& q, const ConcavityCertificate& c) {
  if (c.z.size() != q.n || c.a.size() != q.n) return false;
  for (const auto& zi : c.z)
    if (!(zi < 0)) return false;
  for (const auto& ai : c.a)
    if (!(ai > 0)) return false;
  for (std::size_t i = 0; i < q.n; ++i) {
    Rat v(0);
    for (std::size_t j = 0; j < q.n; ++j) v -= Rat(q.at(i, j)) * c.z[j];
    if (v != c.a[i]) return false;
  }
  return true;
}

PlumbingGraph blow_up(const PlumbingGraph& g, const BlowUpSite& site) {
  const std::size_t n = g.size();
  std::vector<Int> w = g.weights;
  switch (site.kind) {
    case BlowUpSite::Kind::Interior: {
      std::size_t j = site.index;
      if (g.shape == Shape::Linear) {
        if (j < 1 || j >= n)
          throw Error(Error::Code::InvalidSite,
                      "no edge between vertices " + std::to_string(j) + " and " +
                          std::to_string(j + 1));
        w[j - 1] -= 1;
        w[j] -= 1;
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(j), Int(-1));
      } else {
        if (j < 1 || j > n)
          throw Error(Error::Code::InvalidSite,
                      "cyclic edge index out of range: " + std::to_string(j));
        std::size_t succ = j % n;  // 0-based successor vertex
        w[j - 1] -= 1;
        w[succ] -= 1;
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(j), Int(-1));
      }
      break;
    }
    case BlowUpSite::Kind::LeftEnd:
      if (g.shape != Shape::Linear)
        throw Error(Error::Code::InvalidSite, "end sites only apply to linear plumbings");
      w[0] -= 1;
      w.insert(w.begin(), Int(-1));
      break;
    case BlowUpSite::Kind::RightEnd:
      if (g.shape != Shape::Linear)
        throw Error(Error::Code::InvalidSite, "end sites only apply to linear plumbings");
      w[n - 1] -= 1;
      w.push_back(Int(-1));
      break;
  }
  return PlumbingGraph(g.shape, std::move(w));
}

PlumbingGraph blow_down(const PlumbingGraph& g, std::size_t j) {
  const std::size_t n = g.size();
  if (j < 1 || j > n)
    throw Error(Error::Code::InvalidSite, "vertex index out of range: " + std::to_string(j));
  if (g.weights[j - 1] != -1)
    throw Error(Error::Code::NotMinusOne,
                "vertex " + std::to_string(j) + " has weight " + g.weights[j - 1].str() +
                    ", not -1");
  std::vector<Int> w = g.weights;
  if (g.shape == Shape::Linear) {
    if (n == 1)
      throw Error(Error::Code::InvalidSite, "blowing down the last vertex would empty the graph");
    if (j > 1) w[j - 2] += 1;
    if (j < n) w[j] += 1;
  } else {
    if (n == 3)
      throw Error(Error::Code::InvalidSite,
                  "blowing down a 3-vertex cyclic plumbing is not defined");
    w[(j - 2 + n) % n] += 1;
    w[j % n] += 1;
  }
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(j - 1));
  return PlumbingGraph(g.shape, std::move(w));
}

bool is_toric_minimal(const PlumbingGraph& g) {
  return std::none_of(g.weights.begin(), g.weights.end(),
                      [](const Int& s) { return s == -1; });
}

PlumbingGraph toric_minimal_model(const PlumbingGraph& g) {
  PlumbingGraph cur = g;
  for (;;) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur.weights[i] != -1) continue;
      if (cur.shape == Shape::Linear && cur.size() == 1) continue;
      if (cur.shape == Shape::Cyclic && cur.size() == 3) continue;
      j = i + 1;
      break;
    }
    if (j == 0) return cur;
    cur = blow_down(cur, j);
  }
}

std::vector<Int> canonical_form(const PlumbingGraph& g) {
  const auto& w = g.weights;
  if (g.shape == Shape::Linear) {
    std::vector<Int> rev(w.rbegin(), w.rend());
    return std::min(w, rev);
  }
  const std::size_t n = w.size();
  std::vector<Int> best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    std::vector<Int> seq = w;
    if (reflect) std::reverse(seq.begin(), seq.end());
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Int> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(i + r) % n];
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

}  // namespace toricfill
