#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvedrift/catalog.hpp"
#include "curvedrift/certificate.hpp"
#include "curvedrift/curves.hpp"

namespace curvedrift {

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { Magic, MagicOdd, WhiteheadOdd, TorusEven, WicketEven, WicketOdd };

const std::vector<Family>& all_families();
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

struct FiberDescriptor {
  int n;
  int genus;
  int punctures;
  bool fixed_puncture;
  int euler;
};

struct Parameters {
  long long m;
  long long r;
  bool operator==(const Parameters&) const = default;
};

// Smallest n for which interval arithmetic keeps every nonzero power of
// h^n psi~ off block 0. Sufficient, not sharp.
int validity_threshold(const SpreadInterval& s);

Parameters paper_parameters(long long n, long long k);

// Asymmetric spreads: m = floor((n+a-2)/(b-a)), r = m(n+a) - 1.
Parameters optimized_parameters(long long n, const SpreadInterval& s);

struct FamilySpread {
  SpreadInterval spread;
  std::string source;
  bool cut_is_arc;
};

// Throws CatalogError when the family depends on missing transcription data.
FamilySpread family_spread(Family f, const TranscriptionData* data = nullptr);
int family_threshold(Family f, const TranscriptionData* data = nullptr);
bool family_available(Family f, const TranscriptionData* data, std::string* why = nullptr);
std::string family_group(Family f, int n, const TranscriptionData* data = nullptr);

BoundCertificate certified_bound(Family f, int n, const TranscriptionData* data = nullptr);
FiberDescriptor fiber_invariants(Family f, int n, const TranscriptionData* data = nullptr);

}  // namespace curvedrift
