#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvedrift/certificate.hpp"
#include "curvedrift/rational.hpp"
#include "curvedrift/zcover.hpp"

namespace curvedrift {

enum class CurveKind { Arc, Scc };

struct SphereCurve {
  CurveKind kind;
  int n1 = 0;
  int n2 = 0;
};

struct LiftResult {
  int components;
  std::vector<bool> separating;
};

// Preimage in S_g of a curve on S_{0,2g+2} under the hyperelliptic cover.
LiftResult lift_curve(int g, const SphereCurve& curve);

enum class LiftTarget { HyperellipticSurface, HyperellipticHandlebody };

// The source must act on S_{0,2g+2}; the handlebody target also needs wicket provenance.
BoundCertificate lift_certificate(const BoundCertificate& cert, LiftTarget target, int g);

// gadre_tsai_lower {g, n}, penner_upper {g}, hyperelliptic_upper {g}
Rational closed_form(const std::string& name, const std::vector<long long>& params);

BoundCertificate rescale_certificate(const BoundCertificate& cert, long long k);

struct ReportRow {
  std::string family;
  std::string group;
  long long param;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::string provenance_id;
  std::string note;  // why a certificate is missing
  std::optional<BoundCertificate> certificate;
  bool consistent() const { return !lower || !upper || *lower <= *upper; }
};

// Families: the zcover families plus "disk-even", "disk-odd" (occupancy),
// "hyperelliptic" and "handlebody" (parameter g).
const std::vector<std::string>& report_families();

std::vector<ReportRow> build_report(const std::vector<std::string>& families, long long from, long long to,
                                    const TranscriptionData* data = nullptr);

std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

// Largest n^2 * bound over rows with an upper bound, a diagnostic for C/n^2 fits.
double fitted_constant(const std::vector<ReportRow>& rows);

}  // namespace curvedrift
