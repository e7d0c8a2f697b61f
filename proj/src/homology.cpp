#include "curvedrift/homology.hpp"

#include <algorithm>
#include <sstream>

namespace curvedrift {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw HomologyError("negative matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw HomologyError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw HomologyError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw HomologyError("dimension mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw HomologyError("dimension mismatch in difference");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Floor division for cpp_int (which truncates toward zero).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void negate_row(IntMatrix& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void swap_rows(IntMatrix& m, int r, int s) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(s, c));
}

void swap_cols(IntMatrix& m, int r, int s) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, r), m(i, s));
}

// row s -= q * row r
void add_row(IntMatrix& m, int s, int r, const Int& q) {
  for (int c = 0; c < m.cols(); ++c) m(s, c) -= q * m(r, c);
}

void add_col(IntMatrix& m, int s, int r, const Int& q) {
  for (int i = 0; i < m.rows(); ++i) m(i, s) -= q * m(i, r);
}

// Smallest-pivot elimination keeps intermediate entries near the input size.
std::vector<Int> smith_diagonal(IntMatrix a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<Int> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr < 0 || abs(a(i, j)) < abs(a(pr, pc)))) { pr = i; pc = j; }
      if (pr < 0) return diag;
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      bool done = true;
      for (int i = t + 1; i < rows; ++i) {
        add_row(a, i, t, floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) done = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        add_col(a, j, t, floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) done = false;
      }
      if (!done) continue;
      // the pivot must divide the rest of the block
      for (int i = t + 1; i < rows && done; ++i)
        for (int j = t + 1; j < cols && done; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, Int(-1));
            done = false;
          }
      if (done) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

}  // namespace

HermiteSmith hermite_smith(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  int pivot_row = 0;
  for (int col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    for (;;) {
      int best = -1;
      for (int r = pivot_row; r < h.rows(); ++r)
        if (h(r, col) != 0 && (best < 0 || abs(h(r, col)) < abs(h(best, col)))) best = r;
      if (best < 0) break;
      swap_rows(h, pivot_row, best);
      swap_rows(u, pivot_row, best);
      bool done = true;
      for (int r = pivot_row + 1; r < h.rows(); ++r) {
        const Int q = floor_div(h(r, col), h(pivot_row, col));
        if (q != 0) {
          add_row(h, r, pivot_row, q);
          add_row(u, r, pivot_row, q);
        }
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    for (int r = 0; r < pivot_row; ++r) {
      const Int q = floor_div(h(r, col), h(pivot_row, col));
      if (q == 0) continue;
      add_row(h, r, pivot_row, q);
      add_row(u, r, pivot_row, q);
    }
    ++pivot_row;
  }
  return {h, u, smith_diagonal(m)};
}

bool Covector::primitive() const {
  Int g = 0;
  for (const auto& c : coefficients) g = gcd(g, c);
  return g == 1;
}

std::vector<Covector> fixed_primitive_cohomology(const IntMatrix& m, const std::string& basis_label) {
  if (m.rows() != m.cols()) throw HomologyError("fixed covectors need a square matrix");
  const int n = m.rows();
  const auto hs = hermite_smith(m - IntMatrix::identity(n));
  // zero rows of H mark left-kernel rows of U; the kernel of an integer map is saturated
  std::vector<std::vector<Int>> kernel;
  for (int r = 0; r < n; ++r) {
    bool zero = true;
    for (int c = 0; c < n && zero; ++c) zero = hs.H(r, c) == 0;
    if (!zero) continue;
    std::vector<Int> row(n);
    for (int c = 0; c < n; ++c) row[c] = hs.U(r, c);
    kernel.push_back(row);
  }
  if (kernel.empty()) return {};
  IntMatrix k(static_cast<int>(kernel.size()), n);
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < n; ++c) k(r, c) = kernel[r][c];
  const auto canon = hermite_smith(k).H;
  std::vector<Covector> out;
  for (int r = 0; r < canon.rows(); ++r) {
    Covector cv{std::vector<Int>(n), basis_label};
    for (int c = 0; c < n; ++c) cv.coefficients[c] = canon(r, c);
    out.push_back(std::move(cv));
  }
  return out;
}

SymplecticSurfaceBasis SymplecticSurfaceBasis::standard(int genus) {
  if (genus < 1) throw HomologyError("symplectic basis needs genus >= 1");
  SymplecticSurfaceBasis b{genus, {}, IntMatrix(2 * genus, 2 * genus)};
  for (int i = 0; i < genus; ++i) {
    b.labels.push_back("alpha" + std::to_string(i + 1));
    b.labels.push_back("beta" + std::to_string(i + 1));
    b.J(2 * i, 2 * i + 1) = 1;
    b.J(2 * i + 1, 2 * i) = -1;
  }
  return b;
}

Int SymplecticSurfaceBasis::pairing(const std::vector<Int>& x, const std::vector<Int>& y) const {
  Int s = 0;
  for (int i = 0; i < J.rows(); ++i)
    for (int j = 0; j < J.cols(); ++j)
      if (J(i, j) != 0) s += x[i] * J(i, j) * y[j];
  return s;
}

IntMatrix twist_action_matrix(const std::vector<TwistLetter>& word,
                              const std::map<std::string, std::vector<long long>>& curve_classes,
                              const SymplecticSurfaceBasis& basis) {
  const int dim = 2 * basis.genus;
  IntMatrix result = IntMatrix::identity(dim);
  for (const auto& letter : word) {
    auto it = curve_classes.find(letter.curve);
    if (it == curve_classes.end()) throw HomologyError("no homology class for curve " + letter.curve);
    if (static_cast<int>(it->second.size()) != dim)
      throw HomologyError("homology class of " + letter.curve + " has wrong length");
    std::vector<Int> gamma(it->second.begin(), it->second.end());
    IntMatrix t(dim, dim);
    for (int j = 0; j < dim; ++j) {
      std::vector<Int> e(dim);
      e[j] = 1;
      const Int coeff = -letter.sign * basis.pairing(e, gamma);
      for (int i = 0; i < dim; ++i) t(i, j) = e[i] + coeff * gamma[i];
    }
    result = result * t;
  }
  return result;
}

bool is_symplectic(const IntMatrix& m, const SymplecticSurfaceBasis& basis) {
  return m.transpose() * basis.J * m == basis.J;
}

IntMatrix whitehead_action() {
  // columns: alpha -> alpha - beta - gamma, beta -> beta + gamma, gamma -> gamma
  return IntMatrix{{1, 0, 0}, {-1, 1, 0}, {-1, 1, 1}};
}

IntMatrix torus_even_action() {
  return IntMatrix{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}};
}

}  // namespace curvedrift
