#include "conlap/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace conlap {
namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(op) + " needs a square matrix, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// In-place Bareiss elimination on the leading n columns of an n x w matrix
// stored row-major in `a`. Returns the row-swap sign, or 0 if a zero pivot
// column was found (singular leading block).
int bareiss_forward(std::vector<mpz_class>& a, std::size_t n, std::size_t w) {
  int sign = 1;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * w + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * w + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < w; ++j) std::swap(a[k * w + j], a[r * w + j]);
      sign = -sign;
    }
    const mpz_class& pivot = a[k * w + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class factor = a[i * w + k];
      for (std::size_t j = k + 1; j < w; ++j) {
        mpz_class& target = a[i * w + j];
        target *= pivot;
        tmp = factor * a[k * w + j];
        target -= tmp;
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * w + k] = 0;
    }
    prev = pivot;
  }
  return sign;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

mpz_class IntMatrix::sum() const {
  mpz_class s = 0;
  for (const auto& e : entries_) s += e;
  return s;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  require_square(*this, "permuted");
  if (perm.size() != rows_) throw std::invalid_argument("permutation size mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

std::string IntMatrix::to_text() const {
  std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += (*this)(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix IntMatrix::from_text(const std::string& text) {
  std::istringstream in(text);
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix text must start with 'rows cols'");
  }
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string token;
  for (auto& e : m.entries_) {
    if (!(in >> token)) throw std::invalid_argument("matrix text has too few entries");
    if (e.set_str(token, 10) != 0) throw std::invalid_argument("bad matrix entry '" + token + "'");
  }
  if (in >> token) throw std::invalid_argument("matrix text has trailing data '" + token + "'");
  return m;
}

// ---------------------------------------------------------------------------
// Exact operations

mpz_class determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a = m.entries();
  const int sign = bareiss_forward(a, n, n);
  if (sign == 0) return 0;
  return sign * a[n * n - 1];
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  require_square(m, "inverse_unimodular");
  const std::size_t n = m.rows();
  const std::size_t w = 2 * n;
  std::vector<mpz_class> a(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = m(i, j);
    a[i * w + n + i] = 1;
  }
  const int sign = bareiss_forward(a, n, w);
  if (sign == 0) throw std::domain_error("matrix is singular, not unimodular");
  if (n > 0) {
    const mpz_class det = sign * a[n * w - w + n - 1];
    if (abs(det) != 1) {
      throw std::domain_error("matrix is not unimodular: determinant " + det.get_str());
    }
  }

  IntMatrix inv(n, n);
  mpz_class acc;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      acc = a[ii * w + n + c];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii * w + j] * inv(j, c);
      const mpz_class& pivot = a[ii * w + ii];
      if (!mpz_divisible_p(acc.get_mpz_t(), pivot.get_mpz_t())) {
        throw std::logic_error("non-integral entry while inverting a unimodular matrix");
      }
      mpz_divexact(inv(ii, c).get_mpz_t(), acc.get_mpz_t(), pivot.get_mpz_t());
    }
  }
  if (!(m * inv == IntMatrix::identity(n))) {
    throw std::logic_error("inverse check m * g = 1 failed");
  }
  return inv;
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  require_square(m, "characteristic_polynomial");
  const std::size_t n = m.rows();
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) trace += m(i, j) * mk(j, i);
    }
    mpz_class q = -trace;
    const mpz_class kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(q.get_mpz_t(), kk.get_mpz_t())) {
      throw std::logic_error("Faddeev-LeVerrier division was not exact");
    }
    mpz_divexact(c[n - k].get_mpz_t(), q.get_mpz_t(), kk.get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

Inertia inertia_from_characteristic_polynomial(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) throw std::invalid_argument("zero polynomial has no inertia");
  Inertia out;
  while (out.zero < c.size() && c[out.zero] == 0) ++out.zero;
  auto sign_changes = [&](bool flip_odd) {
    std::size_t changes = 0;
    int last = 0;
    for (std::size_t k = out.zero; k < c.size(); ++k) {
      int s = sgn(c[k]);
      if (s == 0) continue;
      if (flip_odd && k % 2 == 1) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  out.positive = sign_changes(false);
  out.negative = sign_changes(true);
  const std::size_t degree = c.size() - 1;
  if (out.positive + out.negative + out.zero != degree) {
    throw std::domain_error("characteristic polynomial does not have only real roots");
  }
  return out;
}

bool inertia_by_pivoted_minors(const IntMatrix& m, Inertia& out) {
  require_square(m, "inertia");
  const std::size_t n = m.rows();
  std::vector<mpz_class> a = m.entries();
  mpz_class prev = 1;
  mpz_class tmp;
  Inertia res;
  int last_sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r * n + r] == 0) ++r;
    if (r == n) return false;
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + k], a[i * n + r]);
    }
    const mpz_class pivot = a[k * n + k];  // leading (k+1)-minor of the permuted matrix
    const int s = sgn(pivot);
    if (s != last_sign) {
      ++res.negative;
    } else {
      ++res.positive;
    }
    last_sign = s;
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_class factor = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class& target = a[i * n + j];
        target *= pivot;
        tmp = factor * a[k * n + j];
        target -= tmp;
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  out = res;
  return true;
}

Inertia inertia(const IntMatrix& m) {
  require_square(m, "inertia");
  if (!m.is_symmetric()) throw std::invalid_argument("inertia needs a symmetric matrix");
  Inertia out;
  if (inertia_by_pivoted_minors(m, out)) return out;
  out = inertia_from_characteristic_polynomial(characteristic_polynomial(m));
  if (out.zero != 0) throw std::domain_error("inertia of a singular matrix was requested");
  return out;
}

IntMatrix tensor_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const mpz_class& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

mpz_class permanent(const IntMatrix& m) {
  require_square(m, "permanent");
  const std::size_t n = m.rows();
  if (n > kPermanentGuard) {
    throw GuardExceeded("permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                        " matrix exceeds the guard of " + std::to_string(kPermanentGuard) +
                        "; use a brute-force scale input");
  }
  if (n == 0) return 1;
  // Ryser with Gray-code ordering of column subsets.
  std::vector<mpz_class> row_sums(n, 0);
  mpz_class total = 0;
  std::uint32_t gray = 0;
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t step = 1; step < subsets; ++step) {
    const std::uint32_t next = step ^ (step >> 1);
    const std::uint32_t changed = next ^ gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(changed));
    const bool added = (next & changed) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += m(i, col);
      } else {
        row_sums[i] -= m(i, col);
      }
    }
    gray = next;
    mpz_class prod = 1;
    for (const auto& s : row_sums) {
      prod *= s;
      if (prod == 0) break;
    }
    const bool odd = (std::popcount(gray) % 2) == 1;
    if (odd) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (n % 2 == 1) total = -total;
  return total;
}

mpz_class permutation_expansion_determinant(const IntMatrix& m) {
  require_square(m, "permutation expansion");
  const std::size_t n = m.rows();
  if (n > kPermutationGuard) {
    throw GuardExceeded("permutation expansion of dimension " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(kPermutationGuard));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  mpz_class total = 0;
  auto add_term = [&](int sign) {
    mpz_class prod = sign;
    for (std::size_t i = 0; i < n; ++i) {
      const mpz_class& e = m(i, perm[i]);
      if (e == 0) return;
      prod *= e;
    }
    total += prod;
  };
  // Heap's algorithm: every step is a single transposition, so the sign flips.
  int sign = 1;
  add_term(sign);
  std::vector<std::size_t> counter(n, 0);
  std::size_t i = 1;
  while (i < n) {
    if (counter[i] < i) {
      if (i % 2 == 0) {
        std::swap(perm[0], perm[i]);
      } else {
        std::swap(perm[counter[i]], perm[i]);
      }
      sign = -sign;
      add_term(sign);
      ++counter[i];
      i = 1;
    } else {
      counter[i] = 0;
      ++i;
    }
  }
  return total;
}

mpz_class fredholm_path_oracle(const IntMatrix& adjacency) {
  require_square(adjacency, "fredholm_path_oracle");
  return permutation_expansion_determinant(adjacency + IntMatrix::identity(adjacency.rows()));
}

std::vector<double> numeric_spectrum(const IntMatrix& m) {
  require_square(m, "numeric_spectrum");
  if (!m.is_symmetric()) throw std::invalid_argument("numeric_spectrum needs a symmetric matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 0) return {};
  Eigen::MatrixXd dense(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      dense(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conlap
