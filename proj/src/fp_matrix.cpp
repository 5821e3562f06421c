#include "ftors/fp_matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ftors {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int inv_mod(int a, int p) {
  // extended Euclid
  long long t = 0, new_t = 1, r = p, new_r = reduce_mod(a, p);
  if (new_r == 0) throw std::domain_error("inv_mod: zero has no inverse");
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce_mod(t, p);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % bound;
}

FpMatrix::FpMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("FpMatrix: negative dimension");
  if (p < 2 || p >= kMaxPrime) throw std::invalid_argument("FpMatrix: modulus out of range");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FpMatrix FpMatrix::identity(int n, int p) {
  FpMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.data_[m.index(i, i)] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long long>>& rows, int p) {
  const int ncols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  return from_rows(rows, ncols, p);
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long long>>& rows, int cols, int p) {
  FpMatrix m(static_cast<int>(rows.size()), cols, p);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
    }
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FpMatrix: shape mismatch in product");
  FpMatrix out(rows_, o.cols_, p_);
  std::vector<std::int64_t> acc(o.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      const int a = data_[index(i, k)];
      if (a == 0) continue;
      const int* brow = &o.data_[o.index(k, 0)];
      for (int j = 0; j < o.cols_; ++j) acc[j] += static_cast<std::int64_t>(a) * brow[j];
    }
    for (int j = 0; j < o.cols_; ++j) out.data_[out.index(i, j)] = static_cast<int>(acc[j] % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMatrix: shape mismatch in sum");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    int v = data_[i] + o.data_[i];
    out.data_[i] = v >= p_ ? v - p_ : v;
  }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMatrix: shape mismatch in difference");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    int v = data_[i] - o.data_[i];
    out.data_[i] = v < 0 ? v + p_ : v;
  }
  return out;
}

FpMatrix FpMatrix::scaled(int factor) const {
  FpMatrix out(*this);
  const int f = reduce_mod(factor, p_);
  for (auto& v : out.data_) v = static_cast<int>((static_cast<std::int64_t>(v) * f) % p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.data_[out.index(c, r)] = data_[index(r, c)];
  return out;
}

bool FpMatrix::is_zero() const {
  for (int v : data_)
    if (v != 0) return false;
  return true;
}

FpMatrix FpMatrix::block(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw std::out_of_range("FpMatrix::block out of range");
  }
  FpMatrix out(nrows, ncols, p_);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) out.data_[out.index(r, c)] = data_[index(row0 + r, col0 + c)];
  return out;
}

void FpMatrix::set_block(int row0, int col0, const FpMatrix& b) {
  if (row0 < 0 || col0 < 0 || row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) {
    throw std::out_of_range("FpMatrix::set_block out of range");
  }
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) data_[index(row0 + r, col0 + c)] = b.data_[b.index(r, c)];
}

FpMatrix FpMatrix::hstack(const std::vector<FpMatrix>& parts, int rows, int p) {
  int total = 0;
  for (const auto& m : parts) {
    if (m.rows_ != rows) throw std::invalid_argument("hstack: row mismatch");
    total += m.cols_;
  }
  FpMatrix out(rows, total, p);
  int c = 0;
  for (const auto& m : parts) {
    out.set_block(0, c, m);
    c += m.cols_;
  }
  return out;
}

FpMatrix FpMatrix::vstack(const std::vector<FpMatrix>& parts, int cols, int p) {
  int total = 0;
  for (const auto& m : parts) {
    if (m.cols_ != cols) throw std::invalid_argument("vstack: column mismatch");
    total += m.rows_;
  }
  FpMatrix out(total, cols, p);
  int r = 0;
  for (const auto& m : parts) {
    out.set_block(r, 0, m);
    r += m.rows_;
  }
  return out;
}

std::vector<std::vector<int>> FpMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = data_[index(r, c)];
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << data_[index(r, c)];
  }
  os << "]";
  return os.str();
}

RowEchelon rref(FpMatrix m) {
  const int p = m.prime();
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) {
        const int tmp = m(row, c);
        m.set(row, c, m(pivot, c));
        m.set(pivot, c, tmp);
      }
    }
    const int scale = inv_mod(m(row, col), p);
    for (int c = col; c < m.cols(); ++c) m.set(row, c, static_cast<long long>(m(row, c)) * scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const int f = m(r, col);
      if (f == 0) continue;
      for (int c = col; c < m.cols(); ++c) {
        m.set(r, c, m(r, c) - static_cast<long long>(f) * m(row, c));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

int rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix kernel(const FpMatrix& m) {
  const auto e = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix k(n, static_cast<int>(free_cols.size()), m.prime());
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    const int f = free_cols[j];
    k.set(f, j, 1);
    for (int i = 0; i < e.rank; ++i) k.set(e.pivots[i], j, -static_cast<long long>(e.reduced(i, f)));
  }
  return k;
}

FpMatrix column_space(const FpMatrix& m) {
  const auto e = rref(m.transpose());
  return e.reduced.block(0, 0, e.rank, m.rows()).transpose();
}

FpMatrix cokernel_projection(const FpMatrix& m) { return kernel(m.transpose()).transpose(); }

std::vector<int> complement_coordinates(const FpMatrix& m) {
  const auto e = rref(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> out;
  for (int i = 0; i < m.rows(); ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

LinearSolution solve_linear(const FpMatrix& a, const FpMatrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) throw std::invalid_argument("solve_linear: b must be a column");
  LinearSolution out;
  out.kernel_basis = kernel(a);
  auto sol = solve_right(a, b);
  out.particular = std::move(sol);
  return out;
}

std::optional<FpMatrix> solve_right(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row mismatch");
  const int p = a.prime();
  const int n = a.cols();
  const auto e = rref(FpMatrix::hstack({a, b}, a.rows(), p));
  FpMatrix x(n, b.cols(), p);
  for (int i = 0; i < e.rank; ++i) {
    const int pc = e.pivots[i];
    if (pc >= n) return std::nullopt;  // pivot in the augmented part: inconsistent
    for (int j = 0; j < b.cols(); ++j) x.set(pc, j, e.reduced(i, n + j));
  }
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_right(a, FpMatrix::identity(a.rows(), a.prime()));
}

FpMatrix matrix_power(const FpMatrix& a, int exponent) {
  FpMatrix result = FpMatrix::identity(a.rows(), a.prime());
  FpMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

FpMatrix random_matrix(int rows, int cols, int p, Rng& rng) {
  FpMatrix m(rows, cols, p);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, rng.residue(p));
  return m;
}

FpMatrix random_invertible(int n, int p, Rng& rng) {
  for (;;) {
    FpMatrix m = random_matrix(n, n, p, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace ftors
