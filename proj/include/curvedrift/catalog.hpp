#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvedrift/braid.hpp"
#include "curvedrift/curves.hpp"

namespace curvedrift {

enum class Source { PaperText, FigureTranscription, Derived };

std::string to_string(Source s);

struct CatalogEntry {
  std::string name;
  std::vector<int> parameters;
  BraidWord word;
  Source source;
};

// Per-family numbers that only appear in figures.
struct FamilyParameters {
  std::optional<SpreadInterval> spread;
  std::optional<int> n0;
};

// Contents of the transcription file. Braids are keyed by name ("w6",
// "x_12", "y_12", ...); homology classes by curve label.
struct TranscriptionData {
  std::map<std::string, BraidWord> braids;
  std::map<std::string, std::vector<long long>> homology_classes;
  std::map<std::string, FamilyParameters> family_parameters;
  std::string path;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TranscriptionData load_transcriptions(const std::string& path);
TranscriptionData parse_transcriptions(const std::string& json_text, const std::string& path = "<memory>");

// Flag value if given, else $CURVEDRIFT_DATA, else nothing.
std::optional<std::string> resolve_data_path(const std::optional<std::string>& flag);

const std::vector<std::string>& catalog_names();

// beta_magic, phi_magic: no parameters. x, y: {2k}. w6, psi5: no parameters.
// w_even_family: {n, branch} with branch 8 (4n+8 strands) or 10 (4n+10 strands).
CatalogEntry catalog(const std::string& name, const std::vector<int>& params,
                     const TranscriptionData* data = nullptr);

// Monodromy of the fiber R_n = D_{2n} of the beta_magic mapping torus, n >= 4.
BraidWord magic_monodromy(int n);

}  // namespace curvedrift
