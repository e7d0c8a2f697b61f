#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curvedrift/certificate.hpp"

namespace curvedrift {

// Branches of tau_n carrying the image of the arc: r when has_r, and the
// pairs p_t q_t for i <= t <= j.
struct OccupancyState {
  int n = 4;
  bool has_r = true;
  int i = 1;
  int j = 1;
  bool operator==(const OccupancyState&) const = default;
};

struct Advance {
  OccupancyState state;
  int steps;
};

class SaturationSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Advance advance(const OccupancyState& s);

// Entry per exponent; empty while inside a wrap, where the occupancy is unknown.
struct TraceEntry {
  int exponent;
  std::optional<OccupancyState> state;
};

std::vector<TraceEntry> run_trace(int n);

int max_disjoint_exponent(int n);

struct DiskBounds {
  BoundCertificate even;  // Mod(D_{2n})
  BoundCertificate odd;   // Mod(D_{2n-1})
};

DiskBounds disk_bounds(int n);

}  // namespace curvedrift
