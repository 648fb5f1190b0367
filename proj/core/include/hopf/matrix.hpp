#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over Q(i).
//
// Tensor convention used project-wide: for V (dim m) and W (dim n) the
// basis vector e_a (x) e_b of V (x) W has index a * n + b, i.e. the leftmost
// factor is the most significant digit.  kron follows the same rule.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  // Row lists, e.g. Mat::from({{1, 0}, {0, 1}}).
  static Mat from(std::vector<std::vector<Scalar>> const& rows);
  static Mat identity(std::size_t n);
  static Mat diag(Vec const& d);
  static Mat column(Vec const& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Scalar const& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::vector<Scalar> const& data() const { return a_; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_col(std::size_t c, Vec const& v);
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;

  Mat transpose() const;
  Mat pow(unsigned k) const;

  Mat operator-() const;
  Mat& operator+=(Mat const& o);
  Mat& operator-=(Mat const& o);
  Mat& operator*=(Scalar const& s);
  friend Mat operator+(Mat a, Mat const& b) { return a += b; }
  friend Mat operator-(Mat a, Mat const& b) { return a -= b; }
  friend Mat operator*(Mat a, Scalar const& s) { return a *= s; }
  friend Mat operator*(Scalar const& s, Mat a) { return a *= s; }
  friend Mat operator*(Mat const& a, Mat const& b);
  friend Vec operator*(Mat const& a, Vec const& v);
  friend bool operator==(Mat const& a, Mat const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(Mat const& a, Mat const& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);
// Basis of {v : m v = 0}; free variables set to 1 in turn.
std::vector<Vec> kernel_basis(Mat m);
std::optional<Vec> solve_linear(Mat const& a, Vec const& b);
std::optional<Mat> inverse(Mat const& m);
Mat kron(Mat const& a, Mat const& b);

// Vector helpers.
bool is_zero(Vec const& v);
Vec add(Vec a, Vec const& b);
Vec sub(Vec a, Vec const& b);
Vec scale(Vec a, Scalar const& s);
Vec unit_vector(std::size_t n, std::size_t k);
Vec kron(Vec const& a, Vec const& b);
std::string vec_str(Vec const& v);

}  // namespace hopf
