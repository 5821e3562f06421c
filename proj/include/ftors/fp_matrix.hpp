#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ftors {

// Largest supported modulus is below 2^15, so products fit easily in 64 bits.
inline constexpr int kMaxPrime = 1 << 15;

bool is_prime(int n);
int inv_mod(int a, int p);
inline int reduce_mod(std::int64_t v, int p) {
  std::int64_t r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

/// Seeded deterministic generator. Always passed explicitly; there is no
/// global random state anywhere in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound) by rejection, independent of the
  /// standard library's distribution implementation.
  std::uint64_t below(std::uint64_t bound);
  int residue(int p) { return static_cast<int>(below(static_cast<std::uint64_t>(p))); }
  /// Independent child stream.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

/// Dense matrix over the prime field F_p, row-major, entries in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, int p);

  static FpMatrix identity(int n, int p);
  static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, int p);
  // Needed when a matrix has zero rows but its column count matters.
  static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, int cols, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int prime() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  int operator()(int r, int c) const { return data_[index(r, c)]; }
  void set(int r, int c, long long value) { data_[index(r, c)] = reduce_mod(value, p_); }

  FpMatrix operator*(const FpMatrix& other) const;
  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix operator-(const FpMatrix& other) const;
  FpMatrix scaled(int factor) const;
  FpMatrix transpose() const;

  bool is_zero() const;
  bool operator==(const FpMatrix& other) const = default;

  FpMatrix block(int row0, int col0, int nrows, int ncols) const;
  void set_block(int row0, int col0, const FpMatrix& b);
  FpMatrix column(int c) const { return block(0, c, rows_, 1); }
  FpMatrix row(int r) const { return block(r, 0, 1, cols_); }

  static FpMatrix hstack(const std::vector<FpMatrix>& parts, int rows, int p);
  static FpMatrix vstack(const std::vector<FpMatrix>& parts, int cols, int p);

  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<int> data_;
};

struct RowEchelon {
  FpMatrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

RowEchelon rref(FpMatrix m);
int rank(const FpMatrix& m);

// Canonical kernel basis as columns: one vector per free column of the rref,
// with a 1 in that free position.
FpMatrix kernel(const FpMatrix& m);

// Basis of the column space in reduced echelon form, as columns.
FpMatrix column_space(const FpMatrix& m);

// Matrix Q with full row rank and ker Q = im m. Rows: rows(m) - rank(m).
FpMatrix cokernel_projection(const FpMatrix& m);

// Indices of standard basis vectors completing the column space of m to
// the whole space (the non-pivot positions of rref(m^T)).
std::vector<int> complement_coordinates(const FpMatrix& m);

struct LinearSolution {
  std::optional<FpMatrix> particular;
  FpMatrix kernel_basis;
};

/// Solves A x = b for a single column b.
LinearSolution solve_linear(const FpMatrix& a, const FpMatrix& b);

/// Some X with A X = B, if one exists.
std::optional<FpMatrix> solve_right(const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& a);

FpMatrix matrix_power(const FpMatrix& a, int exponent);

FpMatrix random_matrix(int rows, int cols, int p, Rng& rng);
FpMatrix random_invertible(int n, int p, Rng& rng);

}  // namespace ftors
