#include "curvedrift/lift.hpp"

#include <algorithm>
#include <sstream>

#include "curvedrift/occupancy.hpp"
#include "json.hpp"

namespace curvedrift {

LiftResult lift_curve(int g, const SphereCurve& curve) {
  if (g < 2) throw PreconditionError("lifting needs g >= 2");
  if (curve.kind == CurveKind::Arc) return {1, {false}};
  if (curve.n1 < 2 || curve.n2 < 2) throw PreconditionError("each side of the curve needs at least 2 punctures");
  if ((curve.n1 - curve.n2) % 2 != 0) throw PreconditionError("the two sides must have the same parity");
  if (curve.n1 + curve.n2 != 2 * g + 2) throw PreconditionError("the sides must add up to 2g+2");
  if (curve.n1 % 2 == 1) return {1, {true}};
  return {2, {false, false}};
}

BoundCertificate lift_certificate(const BoundCertificate& cert, LiftTarget target, int g) {
  if (cert.genus != 0 || cert.punctures != 2 * g + 2)
    throw PreconditionError("lifting to genus " + std::to_string(g) + " needs a certificate on S_{0," +
                            std::to_string(2 * g + 2) + "}, got " + cert.group);
  if (g < 2) throw PreconditionError("lifting needs g >= 2");
  BoundCertificate out = cert;
  out.genus = g;
  out.punctures = 0;
  if (target == LiftTarget::HyperellipticHandlebody) {
    if (!cert.has_step("wicket")) throw PreconditionError("handlebody lifts need a wicket-family monodromy");
    out.group = "H(H_" + std::to_string(g) + ")";
    out.provenance.push_back({"lift", {{"g", g}}, "Q: H(H_g) -> SH_{2g+2}, kernel generated by the involution"});
  } else {
    out.group = "H(S_" + std::to_string(g) + ")";
    out.provenance.push_back({"lift", {{"g", g}}, "Birman-Hilden q: H(S_g) -> Mod(S_{0,2g+2})"});
  }
  out.provenance.push_back({"pseudo_anosov_assumed", {}, "lifts of pseudo-Anosov classes are pseudo-Anosov"});
  return out;
}

Rational closed_form(const std::string& name, const std::vector<long long>& params) {
  if (name == "gadre_tsai_lower") {
    if (params.size() != 2) throw PreconditionError("gadre_tsai_lower takes {g, n}");
    const long long g = params[0], n = params[1];
    if (g < 0 || n < 0) throw PreconditionError("negative genus or puncture count");
    const long long chi = 2 - 2 * g - n;
    if (chi >= 0) throw PreconditionError("the lower bound needs chi(S) < 0");
    const long long d = 18 * chi * chi + 30 * (-chi) - 10 * n;
    if (d <= 0) throw PreconditionError("the lower bound formula degenerates for this surface");
    return Rational(1, d);
  }
  if (name == "penner_upper") {
    if (params.size() != 1) throw PreconditionError("penner_upper takes {g}");
    const long long g = params[0], d = g * g + g - 4;
    if (d <= 0) throw PreconditionError("penner_upper needs g^2+g-4 > 0");
    return Rational(4, d);
  }
  if (name == "hyperelliptic_upper") {
    if (params.size() != 1) throw PreconditionError("hyperelliptic_upper takes {g}");
    const long long g = params[0];
    if (g < 3) throw PreconditionError("hyperelliptic_upper needs g >= 3");
    return Rational(1, g * g - 2 * g - 1);
  }
  throw PreconditionError("unknown closed form " + name);
}

BoundCertificate rescale_certificate(const BoundCertificate& cert, long long k) {
  if (k < 1) throw PreconditionError("rescaling needs k >= 1");
  BoundCertificate out = cert;
  out.power *= k;
  out.provenance.push_back({"rescale", {{"k", k}}, "l_C(f^k) = k l_C(f)"});
  return out;
}

const std::vector<std::string>& report_families() {
  static const std::vector<std::string> f{"magic",     "magic-odd", "whitehead-odd", "torus-even",   "wicket-even",
                                          "wicket-odd", "disk-even", "disk-odd",      "hyperelliptic", "handlebody"};
  return f;
}

namespace {

Rational lower_for(int genus, int punctures) {
  return closed_form("gadre_tsai_lower", {genus, punctures});
}

ReportRow handlebody_row(long long g, const TranscriptionData* data) {
  ReportRow row{"handlebody", "H(H_" + std::to_string(g) + ")", g, std::nullopt, std::nullopt,
                "handlebody:g=" + std::to_string(g), "", std::nullopt};
  row.lower = lower_for(static_cast<int>(g), 0);
  // odd genus g = 2n+3 comes from the 4n+8 strand family, even g = 2n+4 from 4n+10
  const Family f = g % 2 == 1 ? Family::WicketEven : Family::WicketOdd;
  const long long n = g % 2 == 1 ? (g - 3) / 2 : (g - 4) / 2;
  try {
    const auto cert = lift_certificate(certified_bound(f, static_cast<int>(n), data),
                                       LiftTarget::HyperellipticHandlebody, static_cast<int>(g));
    row.upper = cert.bound();
    row.certificate = cert;
  } catch (const std::exception& e) {
    row.note = e.what();
  }
  return row;
}

}  // namespace

std::vector<ReportRow> build_report(const std::vector<std::string>& families, long long from, long long to,
                                    const TranscriptionData* data) {
  std::vector<ReportRow> rows;
  for (const auto& name : families) {
    if (std::find(report_families().begin(), report_families().end(), name) == report_families().end())
      throw PreconditionError("unknown report family " + name);
    for (long long p = from; p <= to; ++p) {
      const int ip = static_cast<int>(p);
      const std::string id = name + ":" + (name == "hyperelliptic" || name == "handlebody" ? "g=" : "n=") +
                             std::to_string(p);
      if (name == "handlebody") {
        rows.push_back(handlebody_row(p, data));
        continue;
      }
      ReportRow row{name, "", p, std::nullopt, std::nullopt, id, "", std::nullopt};
      try {
        if (name == "hyperelliptic") {
          row.group = "H(S_" + std::to_string(p) + ")";
          row.lower = lower_for(ip, 0);
          row.certificate = lift_certificate(disk_bounds(ip + 1).odd, LiftTarget::HyperellipticSurface, ip);
        } else if (name == "disk-even" || name == "disk-odd") {
          const bool even = name == "disk-even";
          row.group = "Mod(D_" + std::to_string(even ? 2 * p : 2 * p - 1) + ")";
          row.lower = lower_for(0, even ? ip * 2 + 1 : ip * 2);
          const auto d = disk_bounds(ip);
          row.certificate = even ? d.even : d.odd;
        } else {
          const Family f = *parse_family(name);
          row.group = family_group(f, ip, data);
          const auto fiber = fiber_invariants(f, ip, data);
          row.lower = lower_for(fiber.genus, fiber.punctures);
          row.certificate = certified_bound(f, ip, data);
        }
        row.upper = row.certificate->bound();
      } catch (const std::exception& e) {
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "group,param,lower,upper,consistent,provenance_id\n";
  for (const auto& r : rows) {
    os << (r.group.empty() ? r.family : r.group) << ',' << r.param << ','
       << (r.lower ? to_string(*r.lower) : "NA") << ',' << (r.upper ? to_string(*r.upper) : "NA") << ','
       << (r.consistent() ? "true" : "false") << ',' << r.provenance_id << '\n';
  }
  return os.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["group"] = r.group.empty() ? r.family : r.group;
    j["family"] = r.family;
    j["param"] = r.param;
    j["lower"] = r.lower ? to_string(*r.lower) : "NA";
    j["upper"] = r.upper ? to_string(*r.upper) : "NA";
    j["consistent"] = r.consistent();
    j["provenance_id"] = r.provenance_id;
    if (r.certificate) j["certificate"] = nlohmann::ordered_json::parse(to_json(*r.certificate, -1));
    if (!r.note.empty()) j["unavailable"] = r.note;
    arr.push_back(j);
  }
  return arr.dump(2);
}

double fitted_constant(const std::vector<ReportRow>& rows) {
  double c = 0;
  for (const auto& r : rows)
    if (r.upper)
      c = std::max(c, static_cast<double>(r.param * r.param) * boost::rational_cast<double>(*r.upper));
  return c;
}

}  // namespace curvedrift
