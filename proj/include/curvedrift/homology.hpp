#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvedrift {

using Int = boost::multiprecision::cpp_int;

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;
  Int determinant() const;  // Bareiss, square only
  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::string to_string(const IntMatrix& m);

struct HermiteSmith {
  IntMatrix H;  // row Hermite form, H = U*M
  IntMatrix U;  // unimodular
  std::vector<Int> smith_diagonal;  // nonzero elementary divisors, each dividing the next
};

HermiteSmith hermite_smith(const IntMatrix& m);

struct Covector {
  std::vector<Int> coefficients;
  std::string basis_label;
  bool primitive() const;
};

// Basis of the saturated lattice {xi : xi*M = xi}, each vector primitive.
std::vector<Covector> fixed_primitive_cohomology(const IntMatrix& m, const std::string& basis_label = "");

struct SymplecticSurfaceBasis {
  int genus;
  std::vector<std::string> labels;  // alpha1, beta1, ..., alpha_g, beta_g
  IntMatrix J;                       // <alpha_i, beta_i> = 1
  static SymplecticSurfaceBasis standard(int genus);
  Int pairing(const std::vector<Int>& x, const std::vector<Int>& y) const;
};

struct TwistLetter {
  std::string curve;
  int sign;  // +1 for T_curve, -1 for its inverse
};

// Column convention: column j holds the image of basis vector j.
// T_gamma acts by x -> x - <x, gamma> gamma (left-handed twist).
IntMatrix twist_action_matrix(const std::vector<TwistLetter>& word,
                              const std::map<std::string, std::vector<long long>>& curve_classes,
                              const SymplecticSurfaceBasis& basis);

bool is_symplectic(const IntMatrix& m, const SymplecticSurfaceBasis& basis);

// Stored actions on (alpha, beta, gamma).
IntMatrix whitehead_action();
IntMatrix torus_even_action();

}  // namespace curvedrift
