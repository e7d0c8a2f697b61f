// curvedrift: certificates for curve-complex translation lengths of fibered families.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "curvedrift/catalog.hpp"
#include "curvedrift/lift.hpp"
#include "curvedrift/occupancy.hpp"
#include "curvedrift/verify.hpp"
#include "curvedrift/zcover.hpp"

using namespace curvedrift;

namespace {

constexpr int kOk = 0;
constexpr int kPrecondition = 1;
constexpr int kVerifyFailed = 2;

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw PreconditionError("range must look like A..B, got " + text);
  try {
    const long long a = std::stoll(text.substr(0, dots)), b = std::stoll(text.substr(dots + 2));
    if (a > b) throw PreconditionError("empty range " + text);
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw PreconditionError("range must look like A..B, got " + text);
  }
}

std::optional<TranscriptionData> load_data(const std::optional<std::string>& flag) {
  const auto path = resolve_data_path(flag);
  if (!path) return std::nullopt;
  return load_transcriptions(*path);
}

void write_or_print(const std::optional<std::string>& out, const std::string& text) {
  if (!out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*out);
  if (!f) throw PreconditionError("cannot write " + *out);
  f << text;
}

int run_catalog(const TranscriptionData* data) {
  std::cout << "braids:\n";
  for (const auto& name : catalog_names()) {
    std::cout << "  " << name << ": ";
    try {
      std::vector<int> params;
      if (name == "x" || name == "y") params = {12};
      if (name == "w_even_family") params = {1, 8};
      const auto e = catalog(name, params, data);
      std::cout << to_string(e.source) << ", " << e.word.strands() << " strands, " << to_string(e.word) << '\n';
    } catch (const CatalogError& err) {
      std::cout << "unavailable (" << err.what() << ")\n";
    }
  }
  std::cout << "  magic_monodromy(n): derived, 2n strands, n >= 4\n";
  std::cout << "families:\n";
  for (Family f : all_families()) {
    std::string why;
    std::cout << "  " << family_name(f) << ": ";
    if (family_available(f, data, &why)) {
      const auto s = family_spread(f, data);
      std::cout << "available, spread [" << s.spread.a << "," << s.spread.b << "] from " << s.source << '\n';
    } else {
      std::cout << "unavailable (" << why << ")\n";
    }
  }
  std::cout << "  hyperelliptic: available (lift of the Mod(D_{2g+1}) occupancy bound)\n";
  std::string why;
  std::cout << "  handlebody: "
            << (family_available(Family::WicketEven, data, &why) ? "available" : "unavailable (" + why + ")") << '\n';
  return kOk;
}

int run_bound(const std::string& family, std::optional<int> n, std::optional<int> g, const TranscriptionData* data) {
  if (family == "hyperelliptic" || family == "handlebody") {
    if (!g) throw PreconditionError(family + " needs --g");
    const auto rows = build_report({family}, *g, *g, data);
    if (!rows[0].certificate) throw PreconditionError(rows[0].note);
    std::cout << to_json(*rows[0].certificate) << '\n';
    return kOk;
  }
  if (!n) throw PreconditionError("bound needs --n");
  if (family == "disk-even" || family == "disk-odd") {
    const auto d = disk_bounds(*n);
    std::cout << to_json(family == "disk-even" ? d.even : d.odd) << '\n';
    return kOk;
  }
  const auto f = parse_family(family);
  if (!f) throw PreconditionError("unknown family " + family);
  std::cout << to_json(certified_bound(*f, *n, data)) << '\n';
  return kOk;
}

int run_verify(const std::string& suite, std::optional<int> n, const TranscriptionData* data) {
  SuiteResult r;
  if (suite == "occupancy") {
    r = verify_occupancy(n.value_or(6));
  } else if (suite == "homology") {
    if (!data) throw PreconditionError("the homology suite needs curve classes from --data or CURVEDRIFT_DATA");
    r = verify_homology(*data);
  } else if (suite == "dynnikov") {
    r = verify_dynnikov(n.value_or(10), 200, 20240601u);
  } else if (suite == "crosscheck") {
    r = verify_crosscheck(n.value_or(200));
  } else {
    throw PreconditionError("unknown suite " + suite);
  }
  for (const auto& line : r.lines) std::cout << line << '\n';
  if (!r.ok) {
    std::cout << "FAILED: " << r.counterexample << '\n';
    return kVerifyFailed;
  }
  std::cout << "ok\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvedrift: exact upper-bound certificates for curve-complex translation lengths"};
  app.require_subcommand(1);
  std::optional<std::string> data_flag;
  app.add_option("--data", data_flag, "transcription data file (falls back to $CURVEDRIFT_DATA)");
  app.fallthrough();

  auto* cat = app.add_subcommand("catalog", "list braids and families with their sources");

  std::string family;
  std::optional<int> n, g;
  std::optional<std::string> out;
  auto* bound = app.add_subcommand("bound", "print the certificate for one family member");
  bound->add_option("--family", family, "family name")->required();
  bound->add_option("--n", n, "family parameter");
  bound->add_option("--g", g, "genus (hyperelliptic, handlebody)");

  std::string range;
  auto* sweep = app.add_subcommand("sweep", "write a CSV over a parameter range");
  sweep->add_option("--family", family, "family name")->required();
  sweep->add_option("--n-range", range, "A..B")->required();
  sweep->add_option("--out", out, "CSV path (stdout if absent)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite, "occupancy | homology | dynnikov | crosscheck")->required();
  verify->add_option("--n", n, "size parameter for the suite");

  std::string format = "csv";
  std::string report_range = "4..12";
  auto* report = app.add_subcommand("report", "emit the bounds table");
  report->add_option("--n-range", report_range, "parameter range A..B (n, or g for genus families)");
  report->add_option("--format", format, "csv | json");
  report->add_option("--out", out, "output path (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }

  try {
    const auto data = load_data(data_flag);
    const TranscriptionData* dp = data ? &*data : nullptr;
    if (*cat) return run_catalog(dp);
    if (*bound) return run_bound(family, n, g, dp);
    if (*sweep) {
      const auto [a, b] = parse_range(range);
      write_or_print(out, report_csv(build_report({family}, a, b, dp)));
      return kOk;
    }
    if (*verify) return run_verify(suite, n, dp);
    if (*report) {
      const auto [a, b] = parse_range(report_range);
      const auto rows = build_report(report_families(), a, b, dp);
      if (format == "csv") {
        write_or_print(out, report_csv(rows));
      } else if (format == "json") {
        write_or_print(out, report_json(rows) + "\n");
      } else {
        throw PreconditionError("unknown format " + format);
      }
      for (const auto& r : rows)
        if (!r.consistent()) return kVerifyFailed;
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kPrecondition;
}
