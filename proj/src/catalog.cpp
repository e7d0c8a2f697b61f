#include "curvedrift/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace curvedrift {

using nlohmann::json;

std::string to_string(Source s) {
  switch (s) {
    case Source::PaperText: return "paper-text";
    case Source::FigureTranscription: return "figure-transcription";
    case Source::Derived: return "derived";
  }
  return "unknown";
}

namespace {

BraidWord parse_braid(const std::string& name, const json& j) {
  if (!j.is_object()) throw CatalogError("entry " + name + " must be an object");
  for (const char* key : {"strands", "flavor", "letters"})
    if (!j.contains(key)) throw CatalogError("entry " + name + " lacks '" + key + "'");
  if (!j["strands"].is_number_integer()) throw CatalogError("entry " + name + ": strands must be an integer");
  const auto flavor_name = j["flavor"].get<std::string>();
  Flavor flavor;
  if (flavor_name == "disk" || flavor_name == "DISK")
    flavor = Flavor::Disk;
  else if (flavor_name == "sphere" || flavor_name == "SPHERE")
    flavor = Flavor::Sphere;
  else
    throw CatalogError("entry " + name + ": unknown flavor " + flavor_name);
  std::vector<Letter> letters;
  if (!j["letters"].is_array()) throw CatalogError("entry " + name + ": letters must be an array");
  for (const auto& l : j["letters"]) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
      throw CatalogError("entry " + name + ": each letter is [index, sign]");
    letters.push_back({l[0].get<int>(), l[1].get<int>()});
  }
  try {
    return BraidWord(j["strands"].get<int>(), std::move(letters), flavor);
  } catch (const BraidError& e) {
    throw CatalogError("entry " + name + ": " + e.what());
  }
}

const BraidWord& lookup(const TranscriptionData* data, const std::string& key) {
  if (!data) throw CatalogError("braid " + key + " needs the transcription data file (--data or CURVEDRIFT_DATA)");
  auto it = data->braids.find(key);
  if (it == data->braids.end()) throw CatalogError("transcription data " + data->path + " has no braid " + key);
  return it->second;
}

void expect_params(const std::string& name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw CatalogError(name + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
}

BraidWord from_ints(int strands, std::initializer_list<int> ls) {
  std::vector<Letter> letters;
  for (int l : ls) letters.push_back({std::abs(l), l > 0 ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

}  // namespace

TranscriptionData parse_transcriptions(const std::string& json_text, const std::string& path) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CatalogError("cannot parse " + path + ": " + e.what());
  }
  if (!root.is_object()) throw CatalogError(path + ": top level must be an object");
  TranscriptionData data;
  data.path = path;
  for (const auto& [key, value] : root.items()) {
    if (key == "homology_classes") {
      if (!value.is_object()) throw CatalogError(path + ": homology_classes must be an object");
      for (const auto& [label, vec] : value.items()) {
        if (!vec.is_array()) throw CatalogError("homology class " + label + " must be an integer array");
        std::vector<long long> v;
        for (const auto& c : vec) {
          if (!c.is_number_integer()) throw CatalogError("homology class " + label + " must be an integer array");
          v.push_back(c.get<long long>());
        }
        data.homology_classes[label] = v;
      }
    } else if (key == "family_parameters") {
      if (!value.is_object()) throw CatalogError(path + ": family_parameters must be an object");
      for (const auto& [family, params] : value.items()) {
        FamilyParameters fp;
        if (params.contains("spread")) {
          const auto& s = params["spread"];
          if (!s.is_array() || s.size() != 2) throw CatalogError(family + ": spread must be [a, b]");
          fp.spread = SpreadInterval{s[0].get<int>(), s[1].get<int>()};
          if (fp.spread->a > 0 || fp.spread->b < 0) throw CatalogError(family + ": spread must satisfy a <= 0 <= b");
        }
        if (params.contains("n0")) fp.n0 = params["n0"].get<int>();
        data.family_parameters[family] = fp;
      }
    } else if (key.rfind('_', 0) != 0) {  // keys starting with '_' are comments
      data.braids.emplace(key, parse_braid(key, value));
    }
  }
  return data;
}

TranscriptionData load_transcriptions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open transcription data " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_transcriptions(ss.str(), path);
}

std::optional<std::string> resolve_data_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return flag;
  if (const char* env = std::getenv("CURVEDRIFT_DATA"); env && *env) return std::string(env);
  return std::nullopt;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"beta_magic", "phi_magic", "w6", "x", "y", "w_even_family", "psi5"};
  return names;
}

CatalogEntry catalog(const std::string& name, const std::vector<int>& params, const TranscriptionData* data) {
  if (name == "beta_magic") {
    expect_params(name, params, 0);
    return {name, params, from_ints(3, {-1, -1, 2}), Source::PaperText};
  }
  if (name == "phi_magic") {
    expect_params(name, params, 0);
    return {name, params, power(catalog("beta_magic", {}).word, 2), Source::PaperText};
  }
  if (name == "w6") {
    expect_params(name, params, 0);
    const auto& w = lookup(data, "w6");
    if (w.strands() != 6) throw CatalogError("transcribed w6 must have 6 strands");
    return {name, params, w, Source::FigureTranscription};
  }
  if (name == "x" || name == "y") {
    expect_params(name, params, 1);
    if (params[0] < 10 || params[0] % 2 != 0) throw CatalogError(name + " needs an even strand count 2k >= 10");
    const auto& w = lookup(data, name + "_" + std::to_string(params[0]));
    if (w.strands() != params[0]) throw CatalogError("transcribed " + name + " has the wrong strand count");
    return {name, params, w, Source::FigureTranscription};
  }
  if (name == "w_even_family") {
    expect_params(name, params, 2);
    const int n = params[0], branch = params[1];
    if (branch == 8) {
      if (n < 1) throw CatalogError("the 4n+8 branch needs n >= 1");
    } else if (branch == 10) {
      if (n < 0) throw CatalogError("the 4n+10 branch needs n >= 0");
    } else {
      throw CatalogError("w_even_family branch must be 8 or 10");
    }
    const int strands = 4 * n + branch;
    const auto x = catalog("x", {strands}, data).word;
    const auto y = catalog("y", {strands}, data).word;
    const auto head = branch == 8 ? x : power(x, 2);
    return {name, params, product(head, power(y, n)), Source::FigureTranscription};
  }
  if (name == "psi5") {
    expect_params(name, params, 0);
    const auto w = delete_strand(catalog("w6", {}, data).word, 6);
    return {name, params, BraidWord(w.strands(), w.letters(), Flavor::Disk), Source::FigureTranscription};
  }
  throw CatalogError("unknown catalog name " + name);
}

BraidWord magic_monodromy(int n) {
  if (n < 4) throw CatalogError("magic monodromy is tabulated for n >= 4");
  const int N = 2 * n;
  std::vector<int> w{1, 1};
  for (int k = 2; k <= 2 * n - 5; ++k) {
    w.push_back(k);
    w.push_back(k - 1);
  }
  for (int l : {-(2 * n - 3), 2 * n - 4, 2 * n - 5, -(2 * n - 1), -(2 * n - 2), 2 * n - 3, 2 * n - 4, 2 * n - 5,
                2 * n - 2, 2 * n - 3, 2 * n - 4, 2 * n - 1, 2 * n - 2, 2 * n - 3})
    w.push_back(l);
  std::vector<Letter> letters;
  for (int l : w) letters.push_back({std::abs(l), l > 0 ? 1 : -1});
  return BraidWord(N, std::move(letters));
}

}  // namespace curvedrift
