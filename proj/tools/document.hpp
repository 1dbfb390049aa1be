#pragma once

#include <json.hpp>

#include <string>

#include "toricfill/classify.hpp"
#include "toricfill/families.hpp"
#include "toricfill/forms.hpp"
#include "toricfill/moment.hpp"
#include "toricfill/plumbing.hpp"

namespace toricfill::cli {

// All documents are nlohmann ordered_json: field order is fixed by the
// builders, so serialization is byte-stable. Arbitrary-precision integers
// are emitted as decimal strings, rationals as {"num", "den"} string pairs.
using Doc = nlohmann::ordered_json;

Doc jint(const Int& v);
Doc jrat(const Rat& q);
Doc jvec(const LatticeVec& v);
Doc jweights(const std::vector<Int>& w);
Doc jgraph(const PlumbingGraph& g);  // {spec, shape, weights}
Doc jclass(const ContactToricClass& c);
Doc jcertificate(const ConcavityCertificate& c);
Doc jrefutation(const Refutation& r);
Doc jinvariants(const FormInvariants& inv);

Doc info_document(const std::string& spec, const PlumbingGraph& g);
Doc rays_document(const std::string& spec, const PlumbingGraph& g);
Doc classify_document(const std::string& spec, const PlumbingGraph& g);
Doc fill_document(const VerifiedFamily& fam);
Doc cf_document(const Int& k, const Int& l);
Doc cyclic_close_document(const std::string& spec, const PlumbingGraph& g);
Doc congruent_document(const std::string& spec1, const std::string& spec2,
                       const PlumbingGraph& g1, const PlumbingGraph& g2, int bound);
Doc blowup_document(const std::string& spec, const PlumbingGraph& g,
                    const std::string& site_text, const BlowUpSite& site);
Doc blowdown_document(const std::string& spec, const PlumbingGraph& g, std::size_t vertex);
Doc error_document(const std::string& command, const Error& e);

// Serialize with the project-wide indentation and trailing newline.
std::string dump_document(const Doc& doc);

}  // namespace toricfill::cli
