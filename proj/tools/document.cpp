#include "document.hpp"

#include "spec_text.hpp"

namespace toricfill::cli {

Doc jint(const Int& v) { return v.str(); }

Doc jrat(const Rat& q) {
  return Doc{{"num", rat_num(q).str()}, {"den", rat_den(q).str()}};
}

Doc jvec(const LatticeVec& v) { return Doc::array({jint(v.x), jint(v.y)}); }

Doc jweights(const std::vector<Int>& w) {
  Doc a = Doc::array();
  for (const auto& s : w) a.push_back(jint(s));
  return a;
}

Doc jgraph(const PlumbingGraph& g) {
  return Doc{{"spec", unparse(g)},
             {"shape", g.shape == Shape::Linear ? "linear" : "cyclic"},
             {"weights", jweights(g.weights)}};
}

Doc jclass(const ContactToricClass& c) {
  switch (c.kind) {
    case ContactToricClass::Kind::Lens:
      return Doc{{"type", "lens"},
                 {"k", jint(c.k)},
                 {"l", jint(c.l)},
                 {"half_lutz", c.half_lutz},
                 {"tight", c.tight()}};
    case ContactToricClass::Kind::S1xS2:
      return Doc{{"type", "s1xs2"}, {"half_lutz", c.half_lutz}, {"tight", c.tight()}};
    case ContactToricClass::Kind::Free:
      return Doc{{"type", "t3"}, {"N", c.winding}, {"tight", true}};
  }
  return {};
}

namespace {

Doc jratvec(const std::vector<Rat>& v) {
  Doc a = Doc::array();
  for (const auto& q : v) a.push_back(jrat(q));
  return a;
}

Doc jmatrix(const IntersectionForm& q) {
  Doc rows = Doc::array();
  for (std::size_t i = 0; i < q.n; ++i) {
    Doc row = Doc::array();
    for (std::size_t j = 0; j < q.n; ++j) row.push_back(jint(q.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Doc jconcavity(const IntersectionForm& q) {
  auto cert = concavity_certificate(q);
  if (auto* c = std::get_if<ConcavityCertificate>(&cert))
    return Doc{{"status", "certificate"}, {"z", jratvec(c->z)}, {"a", jratvec(c->a)}};
  return Doc{{"status", "refuted"},
             {"refutation", jrefutation(std::get<Refutation>(cert))}};
}

Doc jboundary_or_error(const PlumbingGraph& g) {
  try {
    if (g.shape == Shape::Linear) return jclass(classify_linear_boundary(g.weights));
    return jclass(classify_cyclic_boundary(g));
  } catch (const NotToricError& e) {
    Doc rots = Doc::array();
    for (const auto& f : e.failures)
      rots.push_back(Doc{{"rotation", f.rotation},
                         {"code", Error::code_name(f.code)},
                         {"message", f.message}});
    return Doc{{"error",
                Doc{{"code", e.code_name()}, {"message", e.what()}, {"rotations", rots}}}};
  } catch (const Error& e) {
    return Doc{{"error", Doc{{"code", e.code_name()}, {"message", e.what()}}}};
  }
}

Doc jrays_block(const PlumbingGraph& g, const NormalChain& chain) {
  auto [r1, r2] = rays_from_chain(chain);
  Doc block{{"from_chain", Doc{{"R1", jvec(r1)}, {"R2", jvec(r2)}}}};
  if (g.weights.size() >= 2) {
    auto [e1, e2] = rays_eq1(g.weights);
    block["eq1"] = Doc{{"R1", jvec(e1)}, {"R2", jvec(e2)}};
    block["agree"] = (r1 == e1 && r2 == e2);
  } else {
    block["eq1"] = nullptr;
    block["agree"] = nullptr;
  }
  return block;
}

Doc jangle_or_null(const NormalChain& chain) {
  try {
    ConeAngle a = cone_angle(chain);
    return Doc{{"half_turns", a.half_turns}, {"exact", a.exact}};
  } catch (const Error&) {
    return nullptr;
  }
}

Doc jchain(const NormalChain& c) {
  Doc a = Doc::array();
  for (const auto& v : c.nu) a.push_back(jvec(v));
  return a;
}

}  // namespace

Doc jcertificate(const ConcavityCertificate& c) {
  return Doc{{"z", jratvec(c.z)}, {"a", jratvec(c.a)}};
}

Doc jrefutation(const Refutation& r) {
  return Doc{{"strict_multipliers", jratvec(r.strict_multipliers)},
             {"equality_multipliers", jratvec(r.equality_multipliers)}};
}

Doc jinvariants(const FormInvariants& inv) {
  return Doc{{"determinant", jint(inv.determinant)},
             {"rank", inv.rank},
             {"signature", Doc::array({inv.positive, inv.negative, inv.zero})},
             {"parity", inv.even ? "even" : "odd"}};
}

Doc info_document(const std::string& spec, const PlumbingGraph& g) {
  IntersectionForm q = intersection_form(g);
  Doc doc{{"command", "info"}, {"input", jgraph(g)}};
  doc["input"]["text"] = spec;
  doc["intersection_form"] = jmatrix(q);
  doc["negative_definite"] = is_negative_definite(q);
  doc["toric_minimal"] = is_toric_minimal(g);
  doc["canonical_form"] = jweights(canonical_form(g));
  doc["concavity"] = jconcavity(q);
  if (g.shape == Shape::Linear) {
    NormalChain chain = normal_chain(g.weights);
    doc["rays"] = jrays_block(g, chain);
    doc["normal_chain"] = jchain(chain);
    doc["cone_angle"] = jangle_or_null(chain);
  } else {
    doc["rays"] = nullptr;
    doc["normal_chain"] = nullptr;
    doc["cone_angle"] = nullptr;
  }
  doc["boundary"] = jboundary_or_error(g);
  return doc;
}

Doc rays_document(const std::string& spec, const PlumbingGraph& g) {
  if (g.shape != Shape::Linear)
    throw Error(Error::Code::InvalidGraph, "rays are defined for linear plumbings");
  NormalChain chain = normal_chain(g.weights);
  Doc doc{{"command", "rays"}, {"input", jgraph(g)}};
  doc["input"]["text"] = spec;
  doc["rays"] = jrays_block(g, chain);
  doc["cone_angle"] = jangle_or_null(chain);
  return doc;
}

Doc classify_document(const std::string& spec, const PlumbingGraph& g) {
  Doc doc{{"command", "classify"}, {"input", jgraph(g)}};
  doc["input"]["text"] = spec;
  doc["boundary"] = jboundary_or_error(g);
  return doc;
}

Doc fill_document(const VerifiedFamily& fam) {
  Doc doc{{"command", "fill"},
          {"target", jclass(fam.request.target)},
          {"count", fam.request.count},
          {"start", jint(fam.request.start)}};
  Doc members = Doc::array();
  for (const auto& m : fam.members) {
    members.push_back(Doc{{"spec", unparse(m.graph)},
                          {"weights", jweights(m.graph.weights)},
                          {"shape", m.graph.shape == Shape::Linear ? "linear" : "cyclic"},
                          {"boundary", jclass(m.boundary)},
                          {"certificate", jcertificate(m.certificate)},
                          {"toric_minimal", m.toric_minimal},
                          {"canonical_form", jweights(m.canonical)}});
  }
  doc["members"] = std::move(members);
  doc["pairwise_distinct"] = true;
  return doc;
}

Doc cf_document(const Int& k, const Int& l) {
  ContinuedFraction cf = continued_fraction(k, l);
  return Doc{{"command", "cf"},
             {"k", jint(k)},
             {"l", jint(l)},
             {"coefficients", jweights(cf.coefficients)},
             {"value", jrat(cf.value)}};
}

Doc cyclic_close_document(const std::string& spec, const PlumbingGraph& g) {
  if (g.shape != Shape::Linear)
    throw Error(Error::Code::InvalidGraph, "cyclic-close expects a linear plumbing");
  Doc doc{{"command", "cyclic-close"}, {"input", jgraph(g)}};
  doc["input"]["text"] = spec;
  auto res = cyclic_closure(g.weights);
  if (auto* err = std::get_if<ClosureError>(&res)) {
    Doc e{{"code", Error::code_name(err->code)}, {"message", err->message}};
    if (err->refutation) e["refutation"] = jrefutation(*err->refutation);
    doc["error"] = std::move(e);
    return doc;
  }
  const auto& ok = std::get<CyclicClosure>(res);
  doc["cyclic"] = jgraph(ok.cyclic);
  doc["winding"] = ok.winding;
  doc["boundary"] = jclass(ContactToricClass::free_t3(ok.winding));
  doc["lengths"] = jratvec(ok.image.lengths);
  Doc verts = Doc::array();
  for (const auto& p : ok.image.vertices)
    verts.push_back(Doc::array({jrat(p[0]), jrat(p[1])}));
  doc["vertices"] = std::move(verts);
  return doc;
}

Doc congruent_document(const std::string& spec1, const std::string& spec2,
                       const PlumbingGraph& g1, const PlumbingGraph& g2, int bound) {
  IntersectionForm q1 = intersection_form(g1);
  IntersectionForm q2 = intersection_form(g2);
  Doc doc{{"command", "congruent"},
          {"first", jgraph(g1)},
          {"second", jgraph(g2)},
          {"bound", bound}};
  doc["first"]["text"] = spec1;
  doc["second"]["text"] = spec2;
  FormInvariants i1 = form_invariants(q1);
  FormInvariants i2 = form_invariants(q2);
  doc["invariants"] = Doc::array({jinvariants(i1), jinvariants(i2)});
  const char* separating = nullptr;
  if (i1.even != i2.even) separating = "parity";
  else if (i1.rank != i2.rank) separating = "rank";
  else if (i1.positive != i2.positive || i1.negative != i2.negative)
    separating = "signature";
  else if (i1.determinant != i2.determinant &&
           i1.determinant != -i2.determinant) separating = "determinant";
  doc["separating_invariant"] = separating ? Doc(separating) : Doc(nullptr);
  auto witness = congruent_within_bound(q1, q2, bound);
  if (witness) {
    Doc rows = Doc::array();
    for (const auto& row : *witness) {
      Doc r = Doc::array();
      for (const auto& v : row) r.push_back(jint(v));
      rows.push_back(std::move(r));
    }
    doc["witness"] = std::move(rows);
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

Doc blowup_document(const std::string& spec, const PlumbingGraph& g,
                    const std::string& site_text, const BlowUpSite& site) {
  PlumbingGraph out = blow_up(g, site);
  Doc doc{{"command", "blowup"}, {"input", jgraph(g)}};
  doc["input"]["text"] = spec;
  doc["site"] = site_text;
  doc["result"] = jgraph(out);
  return doc;
}

Doc blowdown_document(const std::string& spec, const PlumbingGraph& g, std::size_t vertex) {
  PlumbingGraph out = blow_down(g, vertex);
  Doc doc{{"command", "blowdown"}, {"input", jgraph(g)}};
  doc["input"]["text"] = spec;
  doc["vertex"] = vertex;
  doc["result"] = jgraph(out);
  return doc;
}

Doc error_document(const std::string& command, const Error& e) {
  return Doc{{"command", command},
             {"error", Doc{{"code", e.code_name()}, {"message", e.what()}}}};
}

std::string dump_document(const Doc& doc) { return doc.dump(2) + "\n"; }

}  // namespace toricfill::cli
