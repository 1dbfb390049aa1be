#include "toricfill/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toricfill {

HomogeneousSystem::HomogeneousSystem(std::size_t columns,
                                     std::vector<std::vector<Rat>> eq,
                                     std::vector<std::vector<Rat>> st)
    : cols(columns), equalities(std::move(eq)), stricts(std::move(st)) {
  if (cols == 0) throw std::invalid_argument("system needs at least one column");
  if (stricts.empty()) throw std::invalid_argument("system needs a strict row");
  for (const auto& r : equalities)
    if (r.size() != cols) throw std::invalid_argument("ragged equality row");
  for (const auto& r : stricts)
    if (r.size() != cols) throw std::invalid_argument("ragged strict row");
}

namespace {

// A strict inequality  coef . x > 0  together with its provenance: it equals
// sum_i ys[i] * stricts[i] + sum_e ye[e] * equalities[e] with ys >= 0.
// Fourier-Motzkin only ever combines rows with positive weights, so the
// provenance of a derived all-zero row is exactly a refutation certificate.
struct Row {
  std::vector<Rat> coef;
  std::vector<Rat> ys;
  std::vector<Rat> ye;
};

void add_scaled(std::vector<Rat>& dst, const std::vector<Rat>& src, const Rat& f) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += f * src[i];
}

bool all_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

// Scale by a positive rational so the coefficients become a primitive integer
// vector; lets duplicate rows (up to positive scaling) collapse in a map.
void normalize_row(Row& r) {
  Int l = 1;
  for (const auto& q : r.coef) l = boost::multiprecision::lcm(l, rat_den(q));
  Int g = 0;
  for (const auto& q : r.coef) g = boost::multiprecision::gcd(g, rat_num(q) * (l / rat_den(q)));
  if (g == 0) return;
  Rat f(l, g);
  for (auto& q : r.coef) q *= f;
  for (auto& q : r.ys) q *= f;
  for (auto& q : r.ye) q *= f;
}

struct Eliminated {
  std::size_t var;
  // Rows constraining the variable, saved before elimination. coef[var] != 0.
  std::vector<Row> rows;
};

}  // namespace

FeasibilityAnswer solve_homogeneous(const HomogeneousSystem& sys) {
  const std::size_t c = sys.cols;
  const std::size_t re = sys.equalities.size();
  const std::size_t rs = sys.stricts.size();

  // Row-reduce the equalities, tracking each reduced row as a combination of
  // the original ones.
  struct EqRow {
    std::vector<Rat> coef;
    std::vector<Rat> combo;  // over original equality rows
  };
  std::vector<EqRow> eqs;
  eqs.reserve(re);
  for (std::size_t e = 0; e < re; ++e) {
    EqRow r{sys.equalities[e], std::vector<Rat>(re, Rat(0))};
    r.combo[e] = 1;
    eqs.push_back(std::move(r));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, eq index)
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < c && next_row < eqs.size(); ++col) {
    std::size_t p = next_row;
    while (p < eqs.size() && eqs[p].coef[col] == 0) ++p;
    if (p == eqs.size()) continue;
    std::swap(eqs[next_row], eqs[p]);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      if (r == next_row || eqs[r].coef[col] == 0) continue;
      Rat f = -eqs[r].coef[col] / eqs[next_row].coef[col];
      add_scaled(eqs[r].coef, eqs[next_row].coef, f);
      add_scaled(eqs[r].combo, eqs[next_row].combo, f);
      eqs[r].coef[col] = 0;
    }
    pivots.emplace_back(col, next_row);
    ++next_row;
  }

  std::vector<bool> is_pivot(c, false);
  for (auto [col, r] : pivots) is_pivot[col] = true;

  // Strict rows, with pivot variables substituted away.
  std::vector<Row> rows;
  rows.reserve(rs);
  for (std::size_t i = 0; i < rs; ++i) {
    Row r{sys.stricts[i], std::vector<Rat>(rs, Rat(0)), std::vector<Rat>(re, Rat(0))};
    r.ys[i] = 1;
    for (auto [col, e] : pivots) {
      if (r.coef[col] == 0) continue;
      Rat f = -r.coef[col] / eqs[e].coef[col];
      add_scaled(r.coef, eqs[e].coef, f);
      add_scaled(r.ye, eqs[e].combo, f);
      r.coef[col] = 0;
    }
    rows.push_back(std::move(r));
  }

  auto find_contradiction = [](const std::vector<Row>& rr) -> const Row* {
    for (const auto& r : rr)
      if (all_zero(r.coef)) return &r;
    return nullptr;
  };

  auto make_refutation = [&](const Row& r) {
    FeasibilityAnswer ans;
    ans.refutation = Refutation{r.ys, r.ye};
    if (!verify_refutation(sys, *ans.refutation))
      throw std::logic_error("solver produced an invalid refutation");
    return ans;
  };

  if (const Row* bad = find_contradiction(rows)) return make_refutation(*bad);

  // Eliminate free variables in index order.
  std::vector<Eliminated> trail;
  for (std::size_t var = 0; var < c; ++var) {
    if (is_pivot[var]) continue;
    std::vector<Row> zero, pos, neg;
    for (auto& r : rows) {
      if (r.coef[var] == 0) zero.push_back(std::move(r));
      else if (r.coef[var] > 0) pos.push_back(std::move(r));
      else neg.push_back(std::move(r));
    }
    Eliminated el{var, {}};
    el.rows.reserve(pos.size() + neg.size());
    for (const auto& r : pos) el.rows.push_back(r);
    for (const auto& r : neg) el.rows.push_back(r);
    trail.push_back(std::move(el));

    std::map<std::vector<Rat>, Row> dedup;
    auto keep = [&](Row&& r) {
      normalize_row(r);
      dedup.emplace(r.coef, std::move(r));  // first combination wins
    };
    for (auto& r : zero) keep(std::move(r));
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Rat a = -n.coef[var];  // > 0
        Rat b = p.coef[var];   // > 0
        Row r{std::vector<Rat>(c, Rat(0)), std::vector<Rat>(rs, Rat(0)),
              std::vector<Rat>(re, Rat(0))};
        for (std::size_t i = 0; i < c; ++i) r.coef[i] = a * p.coef[i] + b * n.coef[i];
        for (std::size_t i = 0; i < rs; ++i) r.ys[i] = a * p.ys[i] + b * n.ys[i];
        for (std::size_t i = 0; i < re; ++i) r.ye[i] = a * p.ye[i] + b * n.ye[i];
        r.coef[var] = 0;
        keep(std::move(r));
      }
    }
    rows.clear();
    rows.reserve(dedup.size());
    for (auto& [k, r] : dedup) rows.push_back(std::move(r));

    if (const Row* bad = find_contradiction(rows)) return make_refutation(*bad);
  }

  // Feasible: pick free-variable values in reverse elimination order.
  std::vector<Rat> x(c, Rat(0));
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    std::optional<Rat> lower, upper;  // strict bounds
    for (const auto& r : it->rows) {
      Rat rest(0);
      for (std::size_t i = 0; i < c; ++i)
        if (i != it->var && r.coef[i] != 0) rest += r.coef[i] * x[i];
      Rat bound = -rest / r.coef[it->var];
      if (r.coef[it->var] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    Rat v;
    if (lower && upper) v = (*lower + *upper) / 2;
    else if (lower) v = *lower + 1;
    else if (upper) v = *upper - 1;
    else v = 1;
    x[it->var] = v;
  }

  // Pivot variables from the reduced equalities.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [col, e] = *it;
    Rat rest(0);
    for (std::size_t i = 0; i < c; ++i)
      if (i != col && eqs[e].coef[i] != 0) rest += eqs[e].coef[i] * x[i];
    x[col] = -rest / eqs[e].coef[col];
  }

  FeasibilityAnswer ans;
  ans.solution = std::move(x);
  if (!verify_solution(sys, *ans.solution))
    throw std::logic_error("solver produced an invalid solution");
  return ans;
}

bool verify_solution(const HomogeneousSystem& sys, const std::vector<Rat>& x) {
  if (x.size() != sys.cols) return false;
  for (const auto& row : sys.equalities) {
    Rat v(0);
    for (std::size_t i = 0; i < sys.cols; ++i) v += row[i] * x[i];
    if (v != 0) return false;
  }
  for (const auto& row : sys.stricts) {
    Rat v(0);
    for (std::size_t i = 0; i < sys.cols; ++i) v += row[i] * x[i];
    if (!(v > 0)) return false;
  }
  return true;
}

bool verify_refutation(const HomogeneousSystem& sys, const Refutation& ref) {
  if (ref.strict_multipliers.size() != sys.stricts.size()) return false;
  if (ref.equality_multipliers.size() != sys.equalities.size()) return false;
  bool nonzero = false;
  for (const auto& y : ref.strict_multipliers) {
    if (y < 0) return false;
    if (y > 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (std::size_t col = 0; col < sys.cols; ++col) {
    Rat v(0);
    for (std::size_t i = 0; i < sys.stricts.size(); ++i)
      v += ref.strict_multipliers[i] * sys.stricts[i][col];
    for (std::size_t e = 0; e < sys.equalities.size(); ++e)
      v += ref.equality_multipliers[e] * sys.equalities[e][col];
    if (v != 0) return false;
  }
  return true;
}

bool verify_answer(const HomogeneousSystem& sys, const FeasibilityAnswer& ans) {
  if (ans.solution) return verify_solution(sys, *ans.solution);
  if (ans.refutation) return verify_refutation(sys, *ans.refutation);
  return false;
}

}  // namespace toricfill
