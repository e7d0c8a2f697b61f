#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "curvedrift/braid.hpp"
#include "curvedrift/freegroup.hpp"

namespace curvedrift {

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dynnikov coordinates (a_1..a_{N-2}, b_1..b_{N-2}) of an integral lamination
// on the disk with N punctures laid out on a horizontal line.
struct LaminationCoord {
  int punctures = 3;
  std::vector<long long> coords;

  long long a(int i) const { return coords.at(i - 1); }
  long long b(int i) const { return coords.at(punctures - 2 + i - 1); }
  bool empty() const;
  bool operator==(const LaminationCoord&) const = default;
};

std::string to_string(const LaminationCoord& x);

struct SpreadInterval {
  int a = 0;
  int b = 0;
  bool operator==(const SpreadInterval&) const = default;
};

// Round curve enclosing punctures i..j.
LaminationCoord standard_curve(int N, int i, int j);

// Left action: apply_braid(x, uv) = apply_braid(apply_braid(x, v), u).
LaminationCoord apply_braid(const LaminationCoord& x, const BraidWord& b);

bool admissible(const LaminationCoord& x);

// Crossing counts recovered from the coordinates.
// beta[j] counts intersections with the vertical line between punctures j and j+1,
// up[k] and down[k] with the rays above and below puncture k.
struct CrossingCounts {
  std::vector<long long> beta;  // index 1..N-1
  std::vector<long long> up;    // index 1..N
  std::vector<long long> down;  // index 1..N
};

CrossingCounts crossing_counts(const LaminationCoord& x);

// Components of the lamination as cyclically reduced free-group words.
std::vector<FreeWord> components(const LaminationCoord& x);

// Coordinates of the simple closed curve freely homotopic to w.
LaminationCoord coordinates_of_word(int N, const FreeWord& w);

long long intersection_number(const LaminationCoord& x, const LaminationCoord& y);

// Geometric intersection of two simple closed curves given as cyclic words.
long long word_intersection(int N, const FreeWord& x, const FreeWord& y);

// Signed crossings of the lifted arc images with the cut dual to x_cut, in
// order along each image; partial sums give the block offsets.
std::vector<std::vector<int>> crossing_sequences(const BraidWord& b, int cut);

SpreadInterval spread_interval(const BraidWord& b, int cut);

}  // namespace curvedrift
