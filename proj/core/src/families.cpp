#include "toricfill/families.hpp"

#include <set>
#include <stdexcept>

namespace toricfill {

ContinuedFraction continued_fraction(const Int& k, const Int& l) {
  if (k <= 0 || l <= 0)
    throw Error(Error::Code::NotCoprime, "continued fraction needs k, l > 0");
  if (boost::multiprecision::gcd(k, l) != 1)
    throw Error(Error::Code::NotCoprime,
                k.str() + " and " + l.str() + " are not coprime");
  ContinuedFraction cf;
  cf.value = Rat(k, l);
  Int s1 = floor_div(k, l);
  cf.coefficients.push_back(s1);
  if (Rat(s1) != cf.value) {
    // Remainder r = 1/(s1 - k/l) < -1; the tail is its greedy expansion with
    // every coefficient <= -2 (floor of a non-integer below -1).
    Rat r = Rat(1) / (Rat(s1) - cf.value);
    for (;;) {
      Rat f = rat_floor(r);
      if (f == r) {
        cf.coefficients.push_back(rat_num(r));
        break;
      }
      cf.coefficients.push_back(rat_num(f));
      r = Rat(1) / (f - r);
    }
  }
  if (eval_cf(cf.coefficients) != cf.value)
    throw std::logic_error("continued fraction failed to re-evaluate");
  return cf;
}

Rat eval_cf(const std::vector<Int>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  Rat v(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (v == 0)
      throw Error(Error::Code::DivisionByZero, "zero denominator inside the nest");
    v = Rat(coeffs[i]) - Rat(1) / v;
  }
  return v;
}

std::vector<PlumbingGraph> family_case1(int count, const Int& n0) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (n0 < 0) throw std::invalid_argument("family starts at n >= 0");
  std::vector<PlumbingGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Int n = n0 + i;
    out.emplace_back(Shape::Linear, std::vector<Int>{n, 0, -n});
  }
  return out;
}

std::vector<PlumbingGraph> family_case2(const Int& k, const Int& l, int count,
                                        const Int& m0) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (k <= 0) throw Error(Error::Code::InvalidLens, "k must be positive");
  Int res = mod_floor(l, k);
  if (res == 0)
    throw Error(Error::Code::InvalidLens, "l must not be divisible by k");
  if (boost::multiprecision::gcd(k, res) != 1)
    throw Error(Error::Code::InvalidLens, "k and l must be coprime");
  std::vector<PlumbingGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  Int m = m0;
  while (out.size() < static_cast<std::size_t>(count)) {
    Int denom = m * k + l;
    if (denom > 0) {
      ContinuedFraction cf = continued_fraction(k, denom);
      out.emplace_back(Shape::Linear, cf.coefficients);
    }
    ++m;
  }
  return out;
}

std::vector<PlumbingGraph> family_case3(const std::vector<PlumbingGraph>& base, int K) {
  if (K < 1) throw std::invalid_argument("K must be at least 1");
  std::vector<PlumbingGraph> out;
  out.reserve(base.size());
  for (const auto& g : base) {
    if (g.shape != Shape::Linear)
      throw Error(Error::Code::InvalidGraph, "half-Lutz padding applies to linear plumbings");
    std::vector<Int> w = g.weights;
    w.insert(w.end(), static_cast<std::size_t>(2 * K), Int(0));
    out.emplace_back(Shape::Linear, std::move(w));
  }
  return out;
}

std::vector<PlumbingGraph> family_free(int N, int count, const Int& n0) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (n0 < 0) throw std::invalid_argument("family starts at n >= 0");
  std::vector<PlumbingGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Int n = n0 + i;
    std::vector<Int> w{n, 0, -n};
    w.insert(w.end(), static_cast<std::size_t>(4 * N - 2), Int(0));
    auto res = cyclic_closure(w);
    if (auto* ok = std::get_if<CyclicClosure>(&res)) {
      out.push_back(ok->cyclic);
    } else {
      throw Error(std::get<ClosureError>(res).code,
                  "free family member n=" + n.str() +
                      " failed to close: " + std::get<ClosureError>(res).message);
    }
  }
  return out;
}

namespace {

std::vector<PlumbingGraph> members_for(const FamilyRequest& req) {
  const ContactToricClass& t = req.target;
  switch (t.kind) {
    case ContactToricClass::Kind::S1xS2: {
      auto base = family_case1(req.count, req.start);
      return t.half_lutz == 0 ? base : family_case3(base, t.half_lutz);
    }
    case ContactToricClass::Kind::Lens: {
      std::vector<PlumbingGraph> base;
      if (t.k == 1) {
        // L(1, 0) = S^3: the shear orbit degenerates to k/m, m >= 1.
        base.reserve(static_cast<std::size_t>(req.count));
        Int m = req.start < 1 ? Int(1) : req.start;
        for (int i = 0; i < req.count; ++i, ++m)
          base.emplace_back(Shape::Linear, continued_fraction(1, m).coefficients);
      } else {
        base = family_case2(t.k, t.l, req.count, req.start);
      }
      return t.half_lutz == 0 ? base : family_case3(base, t.half_lutz);
    }
    case ContactToricClass::Kind::Free:
      return family_free(t.winding, req.count, req.start);
  }
  throw Error(Error::Code::UnsupportedTarget, "unrecognized target");
}

}  // namespace

VerifiedFamily generate_fillings(const FamilyRequest& req) {
  if (req.count < 1) throw std::invalid_argument("count must be positive");
  if (req.target.kind == ContactToricClass::Kind::Lens && req.target.k > 1 &&
      req.target.l == 0)
    throw Error(Error::Code::UnsupportedTarget,
                "L(k, 0) with k > 1 is not a lens space target");

  VerifiedFamily fam{req, {}};
  std::set<std::pair<Shape, std::vector<Int>>> seen;
  for (const auto& g : members_for(req)) {
    auto cert = concavity_certificate(intersection_form(g));
    if (!std::holds_alternative<ConcavityCertificate>(cert))
      throw Error(Error::Code::NoRealization,
                  "family member admits no concavity certificate");
    ContactToricClass boundary = g.shape == Shape::Linear
                                     ? classify_linear_boundary(g.weights)
                                     : classify_cyclic_boundary(g);
    if (!(boundary == req.target))
      throw Error(Error::Code::UnsupportedTarget,
                  "member classifies to " + boundary.str() + ", expected " +
                      req.target.str());
    VerifiedMember m{g, boundary, std::get<ConcavityCertificate>(cert),
                     is_toric_minimal(g), canonical_form(g)};
    if (!seen.insert({g.shape, m.canonical}).second)
      throw std::logic_error("family members collide up to symmetry");
    fam.members.push_back(std::move(m));
  }
  return fam;
}

}  // namespace toricfill
