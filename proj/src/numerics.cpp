#include "ftors/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "ftors/errors.hpp"

namespace ftors {

IntMatrix euler_matrix(const Quiver& q) {
  const int n = q.size();
  IntMatrix e(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  for (const auto& a : q.arrows()) e[a.source][a.target] -= a.a;
  return e;
}

IntMatrix cartan_matrix(const Quiver& q) {
  const int n = q.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& a : q.arrows()) {
    c[a.source][a.target] -= a.a;
    c[a.target][a.source] -= a.b;
  }
  return c;
}

long long determinant(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<long long>(v / prev);  // exact by Sylvester's identity
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

void check_length(const Quiver& q, std::size_t len) {
  if (static_cast<int>(len) != q.size()) throw PreconditionError("dimension vector length mismatch");
}

IntMatrix euler_inverse(const Quiver& q) {
  // E = I - A with A nilpotent, so E^{-1} = sum_k A^k.
  const int n = q.size();
  IntMatrix a(n, std::vector<long long>(n, 0));
  for (const auto& arr : q.arrows()) a[arr.source][arr.target] += arr.a;
  IntMatrix result(n, std::vector<long long>(n, 0));
  IntMatrix power(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) power[i][i] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) result[i][j] += power[i][j];
    IntMatrix next(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (power[i][l] != 0)
          for (int j = 0; j < n; ++j) next[i][j] += power[i][l] * a[l][j];
    power = std::move(next);
  }
  return result;
}

std::vector<long long> mat_vec(const IntMatrix& m, const std::vector<long long>& x) {
  std::vector<long long> y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

IntMatrix transpose(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix t(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

long long euler_form(const Quiver& q, const DimVector& x, const DimVector& y) {
  check_length(q, x.size());
  check_length(q, y.size());
  long long sum = 0;
  for (int i = 0; i < q.size(); ++i) sum += static_cast<long long>(x[i]) * y[i];
  for (const auto& a : q.arrows()) sum -= static_cast<long long>(a.a) * x[a.source] * y[a.target];
  return sum;
}

long long tits_form(const Quiver& q, const DimVector& x) { return euler_form(q, x, x); }

IntMatrix coxeter_matrix(const Quiver& q) {
  const IntMatrix einv = euler_inverse(q);
  const IntMatrix et = transpose(euler_matrix(q));
  const int n = q.size();
  IntMatrix phi(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += einv[i][k] * et[k][j];
      phi[i][j] = -s;
    }
  return phi;
}

std::vector<long long> coxeter_transform(const Quiver& q, const std::vector<long long>& x) {
  check_length(q, x.size());
  return mat_vec(coxeter_matrix(q), x);
}

std::vector<long long> inverse_coxeter_transform(const Quiver& q, const std::vector<long long>& x) {
  check_length(q, x.size());
  // Phi^{-1} = -E^{-T} E
  const IntMatrix einv_t = transpose(euler_inverse(q));
  auto ex = mat_vec(euler_matrix(q), x);
  auto y = mat_vec(einv_t, ex);
  for (auto& v : y) v = -v;
  return y;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
  if (!q.is_path_algebra()) throw PreconditionError("positive_roots: valued arrows are not supported");
  if (classify_type(q).family != TypeFamily::Dynkin) throw PreconditionError("positive_roots: quiver is not Dynkin");
  const int n = q.size();
  // Every positive root of height > 1 is a root plus a simple root.
  std::set<DimVector> found;
  std::queue<DimVector> frontier;
  for (int i = 0; i < n; ++i) {
    DimVector e(n, 0);
    e[i] = 1;
    found.insert(e);
    frontier.push(e);
  }
  while (!frontier.empty()) {
    DimVector x = frontier.front();
    frontier.pop();
    for (int i = 0; i < n; ++i) {
      DimVector y = x;
      ++y[i];
      if (tits_form(q, y) == 1 && found.insert(y).second) frontier.push(y);
    }
  }
  std::vector<DimVector> roots(found.begin(), found.end());
  std::stable_sort(roots.begin(), roots.end(), [](const DimVector& a, const DimVector& b) {
    const int ta = total_dimension(a), tb = total_dimension(b);
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return roots;
}

namespace {

struct Fraction {
  __int128 num = 0;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator-(const Fraction& o) const {
    Fraction r{num * o.den - o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  Fraction operator*(const Fraction& o) const {
    Fraction r{num * o.num, den * o.den};
    r.normalize();
    return r;
  }
  Fraction operator/(const Fraction& o) const {
    Fraction r{num * o.den, den * o.num};
    r.normalize();
    return r;
  }
};

}  // namespace

DimVector null_root(const Quiver& q) {
  if (classify_type(q).family != TypeFamily::Euclidean) throw PreconditionError("null_root: quiver is not Euclidean");
  const IntMatrix c = cartan_matrix(q);
  const int n = q.size();
  std::vector<std::vector<Fraction>> m(n, std::vector<Fraction>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Fraction{c[i][j], 1};
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col].num != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    Fraction lead = m[row][col];
    for (int j = 0; j < n; ++j) m[row][j] = m[row][j] / lead;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col].num == 0) continue;
      Fraction f = m[r][col];
      for (int j = 0; j < n; ++j) m[r][j] = m[r][j] - f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivots.size()) != n - 1) throw PreconditionError("null_root: radical is not one-dimensional");
  int free_col = 0;
  for (int k = 0; k < n; ++k) {
    if (std::find(pivots.begin(), pivots.end(), k) == pivots.end()) {
      free_col = k;
      break;
    }
  }
  std::vector<Fraction> v(n, Fraction{0, 1});
  v[free_col] = Fraction{1, 1};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    v[pivots[i]] = Fraction{0, 1} - m[i][free_col];
  }
  __int128 lcm = 1;
  for (const auto& f : v) lcm = lcm / Fraction::gcd(lcm, f.den) * f.den;
  std::vector<__int128> ints(n);
  __int128 g = 0;
  for (int i = 0; i < n; ++i) {
    ints[i] = v[i].num * (lcm / v[i].den);
    g = Fraction::gcd(g, ints[i]);
  }
  const bool negative = std::any_of(ints.begin(), ints.end(), [](__int128 x) { return x < 0; });
  DimVector delta(n);
  for (int i = 0; i < n; ++i) delta[i] = static_cast<int>((negative ? -ints[i] : ints[i]) / g);
  return delta;
}

long long defect(const Quiver& q, const DimVector& x) {
  const DimVector delta = null_root(q);
  return euler_form(q, delta, x);
}

std::vector<long long> simple_reflection(const Quiver& q, int v, const std::vector<long long>& x) {
  check_length(q, x.size());
  const IntMatrix c = cartan_matrix(q);
  long long cx = 0;
  for (int j = 0; j < q.size(); ++j) cx += c[v][j] * x[j];
  auto y = x;
  y[v] -= cx;
  return y;
}

int total_dimension(const DimVector& x) { return std::accumulate(x.begin(), x.end(), 0); }

}  // namespace ftors
