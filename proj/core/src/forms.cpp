#include "toricfill/forms.hpp"

#include <stdexcept>

namespace toricfill {

namespace {

Int exact_det(const IntersectionForm& q) {
  const std::size_t n = q.n;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(q.at(i, j));
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return rat_num(det);
}

}  // namespace

FormInvariants form_invariants(const IntersectionForm& q) {
  const std::size_t n = q.n;
  FormInvariants inv;
  inv.determinant = exact_det(q);

  // Congruence diagonalization over Q: symmetric row+column operations.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(q.at(i, j));

  auto swap_rc = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  };
  auto add_rc = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t c = 0; c < n; ++c) m[dst][c] += f * m[src][c];
    for (std::size_t r = 0; r < n; ++r) m[r][dst] += f * m[r][src];
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t d = k + 1;
      while (d < n && m[d][d] == 0) ++d;
      if (d < n) {
        swap_rc(k, d);
      } else {
        // All remaining diagonal entries vanish; a nonzero off-diagonal pair
        // (i, j) yields 2*m[i][j] on the diagonal after adding j into i.
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (m[i][j] != 0) {
              add_rc(i, j, Rat(1));
              if (i != k) swap_rc(k, i);
              found = true;
            }
        if (!found) break;  // zero block
      }
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      add_rc(r, k, -m[r][k] / m[k][k]);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] > 0) ++inv.positive;
    else if (m[i][i] < 0) ++inv.negative;
    else ++inv.zero;
  }
  inv.rank = inv.positive + inv.negative;

  inv.even = true;
  for (std::size_t i = 0; i < n; ++i)
    if (mod_floor(q.at(i, i), Int(2)) != 0) inv.even = false;
  return inv;
}

namespace {

Int det_n(const std::vector<std::vector<Int>>& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(p[i][j]);
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return rat_num(det);
}

bool congruent_by(const IntersectionForm& q1, const IntersectionForm& q2,
                  const std::vector<std::vector<Int>>& p) {
  const std::size_t n = q1.n;
  // Compare P Q2 P^T with Q1 entrywise, bailing out early.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Int v = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) v += p[i][a] * q2.at(a, b) * p[j][b];
      if (v != q1.at(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<CongruenceWitness> congruent_within_bound(const IntersectionForm& q1,
                                                        const IntersectionForm& q2,
                                                        int bound) {
  if (q1.n != q2.n)
    throw Error(Error::Code::DimensionMismatch,
                "forms have different dimensions");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  const std::size_t n = q1.n;
  const std::size_t cells = n * n;
  const Int lo = -bound;

  // Odometer over entries in row-major order; the first hit is the
  // lexicographically smallest witness.
  std::vector<std::vector<Int>> p(n, std::vector<Int>(n, lo));
  for (;;) {
    Int d = det_n(p);
    if ((d == 1 || d == -1) && congruent_by(q1, q2, p)) return p;
    std::size_t i = cells;
    bool carried = true;
    while (i-- > 0) {
      Int& cell = p[i / n][i % n];
      if (cell < bound) {
        ++cell;
        carried = false;
        break;
      }
      cell = lo;
    }
    if (carried) return std::nullopt;
  }
}

}  // namespace toricfill
