#include "curvedrift/verify.hpp"

#include <random>

#include "curvedrift/curves.hpp"
#include "curvedrift/occupancy.hpp"
#include "curvedrift/zcover.hpp"

namespace curvedrift {

std::vector<TwistLetter> genus2_word() { return {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b1", -1}, {"b2", -1}}; }

IntMatrix genus2_printed_matrix() { return IntMatrix{{2, -1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}; }

SuiteResult verify_occupancy(int n) {
  SuiteResult res;
  const auto trace = run_trace(n);
  const int M = max_disjoint_exponent(n);
  for (const auto& t : trace) {
    if (t.exponent > M) break;
    if (t.state)
      res.lines.push_back(std::to_string(t.exponent) + ": [" + std::to_string(t.state->i) + "," +
                          std::to_string(t.state->j) + "]" + (t.state->has_r ? " +r" : ""));
    else
      res.lines.push_back(std::to_string(t.exponent) + ": wrap");
  }
  for (int k = 2; k <= n - 2; ++k) {
    const int e = (k - 1) * n - k;
    const OccupancyState want{n, false, n - k, n - 1};
    if (e >= static_cast<int>(trace.size()) || !trace[e].state || !(*trace[e].state == want))
      res.fail("checkpoint k=" + std::to_string(k) + " at exponent " + std::to_string(e) + " missed");
  }
  if (M != n * n - 4 * n + 2) res.fail("max disjoint exponent " + std::to_string(M) + " != n^2-4n+2");
  res.lines.push_back("max_disjoint_exponent: " + std::to_string(M));
  return res;
}

SuiteResult verify_homology(const TranscriptionData& data) {
  SuiteResult res;
  const auto basis = SymplecticSurfaceBasis::standard(2);
  const auto m = twist_action_matrix(genus2_word(), data.homology_classes, basis);
  res.lines.push_back("twist matrix " + to_string(m));
  if (!(m == genus2_printed_matrix())) res.fail("twist matrix differs from " + to_string(genus2_printed_matrix()));
  if (!is_symplectic(m, basis)) res.fail("twist matrix is not symplectic");
  const auto fixed = fixed_primitive_cohomology(m);
  res.lines.push_back("fixed covector rank " + std::to_string(fixed.size()));
  if (fixed.size() != 1) res.fail("fixed covector rank " + std::to_string(fixed.size()) + " != 1");
  auto it = data.homology_classes.find("c");
  if (it != data.homology_classes.end() && fixed.size() == 1) {
    // the dual of c is x -> <c, x>
    std::vector<Int> c(it->second.begin(), it->second.end());
    std::vector<Int> dual(4);
    for (int j = 0; j < 4; ++j) {
      std::vector<Int> e(4);
      e[j] = 1;
      dual[j] = basis.pairing(c, e);
    }
    auto neg = dual;
    for (auto& v : neg) v = -v;
    if (fixed[0].coefficients != dual && fixed[0].coefficients != neg) res.fail("fixed covector is not dual to c");
    else res.lines.push_back("fixed covector is dual to c");
  }
  return res;
}

namespace {

LaminationCoord random_coord(int N, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  LaminationCoord x{N, std::vector<long long>(2 * N - 4)};
  do {
    for (auto& v : x.coords) v = d(rng);
  } while (x.empty());
  return x;
}

}  // namespace

SuiteResult verify_dynnikov(int max_punctures, int trials, unsigned seed) {
  SuiteResult res;
  std::mt19937 rng(seed);
  long long checks = 0;
  for (int N = 3; N <= max_punctures; ++N) {
    for (int t = 0; t < trials; ++t) {
      const auto x = random_coord(N, rng);
      if (!admissible(x)) {
        res.fail("random vector " + to_string(x) + " inadmissible");
        continue;
      }
      for (int i = 1; i < N; ++i) {
        for (int s : {1, -1}) {
          const BraidWord g(N, {{i, s}});
          if (!(apply_braid(apply_braid(x, g), inverse(g)) == x))
            res.fail("N=" + std::to_string(N) + " s" + std::to_string(i) + " inverse fails on " + to_string(x));
        }
        if (i + 1 < N) {
          const BraidWord l(N, {{i, 1}, {i + 1, 1}, {i, 1}}), r(N, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
          if (!(apply_braid(x, l) == apply_braid(x, r)))
            res.fail("N=" + std::to_string(N) + " braid relation at i=" + std::to_string(i) + " fails on " + to_string(x));
        }
        for (int j = i + 2; j < N; ++j) {
          const BraidWord l(N, {{i, 1}, {j, 1}}), r(N, {{j, 1}, {i, 1}});
          if (!(apply_braid(x, l) == apply_braid(x, r)))
            res.fail("N=" + std::to_string(N) + " far commutation " + std::to_string(i) + "," + std::to_string(j) +
                     " fails on " + to_string(x));
        }
        ++checks;
      }
    }
  }
  res.lines.push_back("dynnikov checks: " + std::to_string(checks) + " generator positions up to N=" +
                      std::to_string(max_punctures));
  return res;
}

SuiteResult verify_crosscheck(int n_max) {
  SuiteResult res;
  for (int n = 4; n <= n_max; ++n) {
    const long long want = 1LL * n * n - 4LL * n + 2;
    const auto p = optimized_parameters(n, {-1, 0});
    const int M = max_disjoint_exponent(n);
    if (p.r != want || M != want)
      res.fail("n=" + std::to_string(n) + ": optimized r " + std::to_string(p.r) + ", occupancy " +
               std::to_string(M) + ", expected " + std::to_string(want));
  }
  res.lines.push_back("optimized r = occupancy exponent = n^2-4n+2 for 4 <= n <= " + std::to_string(n_max));
  for (int n : {4, 5}) {
    const int N = 2 * n, M = n * n - 4 * n + 2;
    const auto alpha = standard_curve(N, 2 * n - 4, 2 * n - 3);
    const auto image = apply_braid(alpha, power(magic_monodromy(n), M));
    const long long i = intersection_number(alpha, image);
    res.lines.push_back("n=" + std::to_string(n) + ": i(alpha, psi^" + std::to_string(M) + " alpha) = " +
                        std::to_string(i));
    if (i != 0) res.fail("witness not disjoint at n=" + std::to_string(n));
  }
  return res;
}

}  // namespace curvedrift
