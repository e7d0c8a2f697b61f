#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvedrift/rational.hpp"

namespace curvedrift {

struct ProvenanceStep {
  std::string op;
  std::map<std::string, long long> params;
  std::string note;
};

// l_C(f) <= 1/power. The surface is recorded so lifts can check puncture counts.
struct BoundCertificate {
  std::string group;
  int genus = 0;
  int punctures = 0;  // punctures of the sphere or surface the group acts on
  long long power = 1;
  std::optional<long long> block_m;  // the m of the block argument, when one was used
  std::vector<ProvenanceStep> provenance;

  Rational bound() const { return Rational(1, power); }
  bool has_step(const std::string& op) const;
};

// Recompute the bound from the provenance trail alone.
Rational replay(const BoundCertificate& cert);

std::string to_json(const BoundCertificate& cert, int indent = 2);

}  // namespace curvedrift
