#include "curvedrift/zcover.hpp"

#include <algorithm>

namespace curvedrift {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int torus_n0(const TranscriptionData* data) {
  if (data) {
    auto it = data->family_parameters.find("torus_even");
    if (it != data->family_parameters.end() && it->second.n0) return *it->second.n0;
  }
  throw CatalogError("torus-even needs n0 from the transcription data (family_parameters.torus_even.n0)");
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> f{Family::Magic,      Family::MagicOdd,   Family::WhiteheadOdd,
                                     Family::TorusEven,  Family::WicketEven, Family::WicketOdd};
  return f;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Magic: return "magic";
    case Family::MagicOdd: return "magic-odd";
    case Family::WhiteheadOdd: return "whitehead-odd";
    case Family::TorusEven: return "torus-even";
    case Family::WicketEven: return "wicket-even";
    case Family::WicketOdd: return "wicket-odd";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

int validity_threshold(const SpreadInterval& s) { return std::max(1 - s.a, s.b - s.a + 1); }

Parameters paper_parameters(long long n, long long k) {
  if (k < 1) throw PreconditionError("symmetric parameters need k >= 1");
  if (n - k - 2 < 2 * k)
    throw PreconditionError("symmetric parameters need (n-k-2)/(2k) >= 1, i.e. n >= 3k+2 (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  const long long m = floor_div(n - k - 2, 2 * k);
  return {m, (n - k) * m - 1};
}

Parameters optimized_parameters(long long n, const SpreadInterval& s) {
  if (s.a > 0 || s.b < 0) throw PreconditionError("spread must satisfy a <= 0 <= b");
  if (s.a == s.b) throw PreconditionError("rigid spread has no block drift to exploit");
  if (n < s.b - 2LL * s.a + 2)
    throw PreconditionError("m >= 1 needs n >= b - 2a + 2 = " + std::to_string(s.b - 2 * s.a + 2));
  const long long m = floor_div(n + s.a - 2, s.b - s.a);
  return {m, m * (n + s.a) - 1};
}

FamilySpread family_spread(Family f, const TranscriptionData* data) {
  switch (f) {
    case Family::Magic:
      return {spread_interval(catalog("beta_magic", {}).word, 1), "spread_interval(beta_magic, c1)", true};
    case Family::MagicOdd:
      return {spread_interval(catalog("phi_magic", {}).word, 1), "spread_interval(phi_magic, c1)", true};
    case Family::WhiteheadOdd:
      return {SpreadInterval{-1, 0}, "lift with psi~(S_i) in S_{i-1} u S_i", false};
    case Family::TorusEven: {
      if (data) {
        auto it = data->family_parameters.find("torus_even");
        if (it != data->family_parameters.end() && it->second.spread)
          return {*it->second.spread, "transcribed spread", false};
      }
      throw CatalogError("torus-even needs its spread from the transcription data (family_parameters.torus_even.spread)");
    }
    case Family::WicketEven:
      return {spread_interval(catalog("psi5", {}, data).word, 5), "spread_interval(psi5, c5)", true};
    case Family::WicketOdd:
      return {spread_interval(power(catalog("psi5", {}, data).word, 2), 5), "spread_interval(psi5^2, c5)", true};
  }
  throw CatalogError("unknown family");
}

int family_threshold(Family f, const TranscriptionData* data) {
  switch (f) {
    case Family::Magic: return 2;
    case Family::WhiteheadOdd: return 2;
    case Family::WicketEven: return 1;
    case Family::WicketOdd: return 0;
    default: return validity_threshold(family_spread(f, data).spread);
  }
}

bool family_available(Family f, const TranscriptionData* data, std::string* why) {
  try {
    family_spread(f, data);
    if (f == Family::TorusEven) torus_n0(data);
    return true;
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
}

std::string family_group(Family f, int n, const TranscriptionData* data) {
  auto s = [](int v) { return std::to_string(v); };
  switch (f) {
    case Family::Magic: return "Mod(D_" + s(2 * n) + ")";
    case Family::MagicOdd: return "Mod(D_" + s(2 * n + 1) + ")";
    case Family::WhiteheadOdd: return "Mod(S_{1," + s(2 * n + 1) + "})";
    case Family::TorusEven: return "Mod(S_{1," + s(2 * n + torus_n0(data)) + "})";
    case Family::WicketEven: return "SH_" + s(4 * n + 8);
    case Family::WicketOdd: return "SH_" + s(4 * n + 10);
  }
  return "?";
}

FiberDescriptor fiber_invariants(Family f, int n, const TranscriptionData* data) {
  const int threshold = family_threshold(f, data);
  if (n < threshold)
    throw PreconditionError(family_name(f) + " fibers need n >= " + std::to_string(threshold));
  FiberDescriptor d{n, 0, 0, false, 0};
  switch (f) {
    case Family::Magic: d.punctures = 2 * n + 1; d.fixed_puncture = true; break;
    case Family::MagicOdd: d.punctures = 2 * n + 2; d.fixed_puncture = true; break;
    case Family::WhiteheadOdd: d.genus = 1; d.punctures = 2 * n + 1; break;
    case Family::TorusEven: d.genus = 1; d.punctures = 2 * n + torus_n0(data); break;
    case Family::WicketEven: d.punctures = 4 * n + 8; break;
    case Family::WicketOdd: d.punctures = 4 * n + 10; break;
  }
  d.euler = 2 - 2 * d.genus - d.punctures;
  return d;
}

BoundCertificate certified_bound(Family f, int n, const TranscriptionData* data) {
  const auto fs = family_spread(f, data);
  const int threshold = family_threshold(f, data);
  const long long m_threshold = fs.spread.b - 2LL * fs.spread.a + 2;
  if (n < threshold || n < m_threshold)
    throw PreconditionError(family_name(f) + " at n=" + std::to_string(n) + ": needs n >= " +
                            std::to_string(threshold) + " for R_n to be a surface and n >= " +
                            std::to_string(m_threshold) + " for m >= 1");
  const auto p = optimized_parameters(n, fs.spread);
  const auto fiber = fiber_invariants(f, n, data);

  BoundCertificate c;
  c.group = family_group(f, n, data);
  c.genus = fiber.genus;
  c.punctures = fiber.punctures;
  c.power = p.r;
  c.block_m = p.m;
  c.provenance.push_back({"spread", {{"a", fs.spread.a}, {"b", fs.spread.b}}, fs.source});
  c.provenance.push_back({"validity", {{"n", n}, {"threshold", threshold}}, "R_n = S~/<h^n psi~> is a surface"});
  c.provenance.push_back({"block_parameters", {{"n", n}, {"m", p.m}, {"r", p.r}}, "optimized block-interval search"});
  if (f == Family::WicketEven || f == Family::WicketOdd)
    c.provenance.push_back({"wicket", {{"strands", fiber.punctures}},
                            "monodromy given by w_" + std::to_string(fiber.punctures)});
  c.provenance.push_back({"disjointness", {{"power", p.r}}, "d(alpha, psi_n^r(alpha)) = 1 gives l_C <= 1/r"});
  if (fs.cut_is_arc)
    c.provenance.push_back({"arc_to_curve", {}, "witness taken as the boundary of a neighborhood of the arc"});
  return c;
}

}  // namespace curvedrift
