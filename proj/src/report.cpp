#include "armlab/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

#include "armlab/errors.hpp"
#include "armlab/monoid_ring.hpp"

namespace armlab {

namespace {

nlohmann::json terms_json(const MrElem& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const MrTerm& t : x.terms())
    terms.push_back({{"g", t.g}, {"coeff", t.coeff}});
  return terms;
}

}  // namespace

nlohmann::json to_json(const Witness& w) {
  nlohmann::json j;
  j["ring"] = w.alpha.ring().name();
  j["monoid"] = w.alpha.monoid().name();
  j["alpha"] = {{"render", render(w.alpha)}, {"terms", terms_json(w.alpha)}};
  j["beta"] = {{"render", render(w.beta)}, {"terms", terms_json(w.beta)}};
  j["i"] = w.i;
  j["j"] = w.j;
  j["product"] = w.product;
  j["product_name"] = w.alpha.ring().elem_name(w.product);
  if (w.partner) j["partner"] = *w.partner;
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  j["property"] = v.property;
  j["ring"] = v.ring;
  if (!v.monoid.empty()) j["monoid"] = v.monoid;
  if (!v.bound.empty()) j["bound"] = v.bound;
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json j;
  j["ring"] = r.ring;
  j["size"] = r.size;
  j["has_one"] = r.has_one;
  j["commutative"] = r.commutative;
  j["center"] = r.center;
  j["idempotents"] = r.idempotents;
  j["nilpotents"] = r.nilpotents;
  if (r.units) j["units"] = *r.units;
  if (r.jacobson_radical) j["jacobson_radical"] = *r.jacobson_radical;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const MonoidReport& r) {
  nlohmann::json j;
  j["monoid"] = r.monoid;
  j["size"] = r.size;
  j["axiomatic"] = r.axiomatic;
  j["cancellative"] = r.cancellative;
  if (r.cancellative_witness) {
    j["cancellative_witness"] = {(*r.cancellative_witness)[0],
                                 (*r.cancellative_witness)[1],
                                 (*r.cancellative_witness)[2]};
    j["cancellative_witness_side"] = r.cancellative_witness_side;
  }
  j["unique_product"] = r.unique_product;
  if (r.up_witness)
    j["up_witness"] = {{"A", r.up_witness->first}, {"B", r.up_witness->second}};
  j["is_group"] = r.is_group;
  j["torsion"] = r.torsion;
  j["torsion_free"] = r.torsion_free;
  j["strict_total_order_exists"] = r.strict_total_order_exists;
  return j;
}

nlohmann::json to_json(const InstanceResult& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["outcome"] = r.outcome;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["bounds"] = r.bounds;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["vacuous"] = r.vacuous;
  j["skipped"] = r.skipped;
  j["ok"] = r.ok;
  j["probe"] = r.probe;
  j["anomaly"] = r.anomaly;
  if (!r.note.empty()) j["note"] = r.note;
  nlohmann::json inst = nlohmann::json::array();
  for (const InstanceResult& i : r.instances) inst.push_back(to_json(i));
  j["instances"] = std::move(inst);
  return j;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j;
  j["target"] = r.target;
  j["partial"] = r.partial;
  if (!r.note.empty()) j["note"] = r.note;
  j["skipped"] = r.skipped;
  nlohmann::json f = nlohmann::json::array();
  for (const SearchFinding& x : r.findings) {
    nlohmann::json e;
    e["ring"] = x.ring;
    e["size"] = x.size;
    nlohmann::json vs = nlohmann::json::array();
    for (const Verdict& v : x.verdicts) vs.push_back(to_json(v));
    e["verdicts"] = std::move(vs);
    f.push_back(std::move(e));
  }
  j["findings"] = std::move(f);
  return j;
}

std::string input_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json make_envelope(const std::string& command,
                             const std::string& input,
                             nlohmann::json results) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input_digest"] = input_digest(input);
  j["results"] = std::move(results);
  return j;
}

namespace {

void collect_witnesses(const nlohmann::json& node,
                       std::vector<std::pair<std::string, nlohmann::json>>& out,
                       const std::string& context) {
  if (node.is_object()) {
    if (node.contains("witness") && node["witness"].is_object()) {
      std::string prop = node.value("property", "");
      out.emplace_back(prop, node["witness"]);
    }
    for (const auto& [k, v] : node.items()) collect_witnesses(v, out, context + "/" + k);
  } else if (node.is_array()) {
    for (const auto& v : node) collect_witnesses(v, out, context);
  }
}

}  // namespace

int verify_envelope(const nlohmann::json& envelope, const Catalog& cat,
                    std::vector<std::string>& problems,
                    std::vector<std::string>& skipped) {
  std::vector<std::pair<std::string, nlohmann::json>> ws;
  collect_witnesses(envelope, ws, "");
  int verified = 0;
  for (const auto& [prop, wj] : ws) {
    const std::string rname = wj.value("ring", "");
    const std::string mname = wj.value("monoid", "");
    if (!cat.has_ring(rname) || !cat.has_monoid(mname)) {
      skipped.push_back(rname + "/" + mname + ": structure not in catalog");
      continue;
    }
    // Untagged witnesses (e.g. inside suite instances) replay against every
    // kind; a witness valid for any of them is a genuine counterexample.
    std::vector<ArmKind> kinds;
    if (prop == "plain_armendariz")
      kinds = {ArmKind::Plain};
    else if (prop == "central_armendariz")
      kinds = {ArmKind::Central};
    else if (prop == "nil_armendariz")
      kinds = {ArmKind::Nil};
    else if (prop.empty())
      kinds = {ArmKind::Central, ArmKind::Plain, ArmKind::Nil};
    else {
      skipped.push_back(rname + ": property '" + prop + "' has no replay");
      continue;
    }
    const FiniteRing& R = cat.ring(rname);
    const Monoid& M = cat.monoid(mname);
    auto elem = [&](const nlohmann::json& side) {
      std::vector<MrTerm> terms;
      for (const auto& t : side.at("terms"))
        terms.push_back({t.at("g").get<MonoidElem>(), t.at("coeff").get<int>()});
      return MrElem::from_terms(R, M, std::move(terms));
    };
    try {
      Witness w{elem(wj.at("alpha")), elem(wj.at("beta")),
                wj.at("i").get<int>(), wj.at("j").get<int>(),
                wj.at("product").get<int>(), std::nullopt};
      if (wj.contains("partner")) w.partner = wj["partner"].get<int>();
      bool ok = false;
      for (ArmKind kind : kinds)
        if (recheck_witness(w, kind)) { ok = true; break; }
      if (ok)
        ++verified;
      else
        problems.push_back(rname + "/" + mname + ": witness does not replay");
    } catch (const std::exception& ex) {
      problems.push_back(rname + "/" + mname + ": " + ex.what());
    }
  }
  return verified;
}

}  // namespace armlab
