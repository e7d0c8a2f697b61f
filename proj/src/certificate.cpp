#include "curvedrift/certificate.hpp"

#include <stdexcept>

#include "json.hpp"

namespace curvedrift {

bool BoundCertificate::has_step(const std::string& op) const {
  for (const auto& s : provenance)
    if (s.op == op) return true;
  return false;
}

Rational replay(const BoundCertificate& cert) {
  std::optional<Rational> value;
  for (const auto& step : cert.provenance) {
    if (step.op == "disjointness") {
      value = Rational(1, step.params.at("power"));
    } else if (step.op == "rescale") {
      if (!value) throw std::logic_error("rescale before any disjointness step");
      *value /= step.params.at("k");
    }
  }
  if (!value) throw std::logic_error("provenance has no disjointness step");
  return *value;
}

std::string to_json(const BoundCertificate& cert, int indent) {
  nlohmann::ordered_json j;
  j["group"] = cert.group;
  if (cert.block_m) j["m"] = *cert.block_m;
  j["r"] = cert.power;
  j["bound"] = to_string(cert.bound());
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : cert.provenance) {
    nlohmann::ordered_json step;
    step["op"] = s.op;
    for (const auto& [k, v] : s.params) step[k] = v;
    if (!s.note.empty()) step["note"] = s.note;
    steps.push_back(step);
  }
  j["provenance"] = steps;
  return j.dump(indent);
}

}  // namespace curvedrift
