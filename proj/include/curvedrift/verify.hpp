#pragma once

#include <string>
#include <vector>

#include "curvedrift/catalog.hpp"
#include "curvedrift/homology.hpp"

namespace curvedrift {

struct SuiteResult {
  bool ok = true;
  std::vector<std::string> lines;
  std::string counterexample;  // first failure, empty when ok

  void fail(const std::string& what) {
    if (ok) counterexample = what;
    ok = false;
  }
};

// T_{a1} T_{a2} T_{a3} T_{b1}^-1 T_{b2}^-1 on the genus-2 surface.
std::vector<TwistLetter> genus2_word();
IntMatrix genus2_printed_matrix();

SuiteResult verify_occupancy(int n);
SuiteResult verify_homology(const TranscriptionData& data);
SuiteResult verify_dynnikov(int max_punctures, int trials, unsigned seed);
SuiteResult verify_crosscheck(int n_max);

}  // namespace curvedrift
