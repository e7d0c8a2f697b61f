#include "curvedrift/occupancy.hpp"

#include <string>

#include "curvedrift/zcover.hpp"

namespace curvedrift {

namespace {

void check_state(const OccupancyState& s) {
  if (s.n < 4) throw PreconditionError("occupancy needs n >= 4");
  if (s.i < 1 || s.i > s.j || s.j > s.n - 1) throw PreconditionError("window outside the pairs p_1 q_1 .. p_{n-1} q_{n-1}");
  if (s.has_r && s.i != 1) throw PreconditionError("r only occurs together with p_1 q_1");
}

}  // namespace

Advance advance(const OccupancyState& s) {
  check_state(s);
  const int last = s.n - 1;
  if (s.has_r) {
    if (s.j == last) throw SaturationSignal("window already covers every pair");
    return {{s.n, false, 1, s.j + 1}, 1};
  }
  if (s.j < last) return {{s.n, false, s.i + 1, s.j + 1}, 1};
  // wrap: the window leaves the last pair and reappears with r
  return {{s.n, true, 1, s.n - s.i}, s.n - s.i};
}

std::vector<TraceEntry> run_trace(int n) {
  if (n < 4) throw PreconditionError("occupancy needs n >= 4");
  std::vector<TraceEntry> trace;
  OccupancyState s{n, true, 1, 1};
  int e = 0;
  trace.push_back({e, s});
  while (true) {
    Advance a;
    try {
      a = advance(s);
    } catch (const SaturationSignal&) {
      break;
    }
    for (int k = 1; k < a.steps; ++k) trace.push_back({e + k, std::nullopt});
    e += a.steps;
    s = a.state;
    trace.push_back({e, s});
  }
  return trace;
}

int max_disjoint_exponent(int n) {
  int best = -1;
  for (const auto& t : run_trace(n))
    if (t.state && !t.state->has_r && t.state->i >= 2) best = t.exponent;
  return best;
}

DiskBounds disk_bounds(int n) {
  if (n < 4) throw PreconditionError("disk bounds need n >= 4");
  const int M = max_disjoint_exponent(n);
  auto base = [&](const std::string& group, int punctures) {
    BoundCertificate c;
    c.group = group;
    c.punctures = punctures;
    c.power = M;
    c.provenance.push_back({"occupancy_trace", {{"n", n}, {"exponent", M}},
                            "psi_n^M(c) avoids r, p_1, q_1"});
    c.provenance.push_back({"disjointness", {{"power", M}}, "d_AC(c, psi_n^M(c)) = 1"});
    c.provenance.push_back({"arc_to_curve", {}, "boundary of the neighborhood of c"});
    return c;
  };
  DiskBounds d{base("Mod(D_" + std::to_string(2 * n) + ")", 2 * n + 1),
               base("Mod(D_" + std::to_string(2 * n - 1) + ")", 2 * n)};
  d.odd.provenance.insert(d.odd.provenance.begin() + 1,
                          {"fill_puncture", {{"n", n}}, "fill the puncture; the graph is unchanged since n-1 >= 3"});
  return d;
}

}  // namespace curvedrift
