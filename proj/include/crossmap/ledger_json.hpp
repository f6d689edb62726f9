#pragma once

#include <json.hpp>

#include "crossmap/discharge.hpp"
#include "crossmap/faces.hpp"
#include "crossmap/map.hpp"

namespace crossmap {

// Ledger export: per-step face/vertex charges as exact "p/q" strings plus the
// contribution events.  Output is fully ordered, so equal inputs serialize to
// identical bytes.
inline nlohmann::ordered_json ledger_to_json(const PlanarMap& m, const FaceSet& fs,
                                             const DischargeReport& rep) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["n"] = rep.certificate.n;
  doc["m"] = rep.certificate.m;
  doc["bound"] = rep.certificate.bound;
  doc["holds"] = rep.certificate.holds;
  doc["final_nonnegative"] = rep.final_nonnegative;
  doc["vertex_charges_ok"] = rep.vertex_charges_ok;
  doc["assumption_flags"] = rep.assumption_flags;
  doc["assertion_violations"] = rep.assertion_violations;

  json faces = json::array();
  for (int f = 0; f < fs.count(); ++f) {
    json jf;
    jf["face"] = f;
    jf["label"] = fs.faces[f].label();
    jf["size"] = fs.faces[f].size();
    jf["originals"] = fs.faces[f].originals;
    faces.push_back(std::move(jf));
  }
  doc["faces"] = std::move(faces);

  json steps = json::array();
  for (const ChargeLedger& led : rep.ledgers) {
    json jl;
    jl["step"] = led.step;
    json jfaces = json::array();
    for (size_t f = 0; f < led.face_charge.size(); ++f)
      jfaces.push_back({{"face", f}, {"charge", pq_string(led.face_charge[f])}});
    jl["faces"] = std::move(jfaces);
    json jverts = json::array();
    for (size_t i = 0; i < led.vertex_charge.size(); ++i)
      jverts.push_back({{"vertex", m.name(m.originals()[i])},
                        {"charge", pq_string(led.vertex_charge[i])}});
    jl["vertices"] = std::move(jverts);
    json jevents = json::array();
    for (const ContributionEvent& e : led.events) {
      json je;
      je["step"] = e.step;
      je["donor"] = e.donor;
      if (e.receiver_is_vertex)
        je["vertex"] = m.name(e.receiver);
      else
        je["face"] = e.receiver;
      je["amount"] = pq_string(e.amount);
      if (e.conduit_segment >= 0)
        je["through"] = m.segment_name(e.conduit_segment);
      else if (e.conduit_crossing >= 0)
        je["through_crossing"] = m.name(e.conduit_crossing);
      else
        je["through"] = nullptr;
      jevents.push_back(std::move(je));
    }
    jl["events"] = std::move(jevents);
    steps.push_back(std::move(jl));
  }
  doc["steps"] = std::move(steps);
  return doc;
}

}  // namespace crossmap
