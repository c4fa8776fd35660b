#include "nodim/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nodim {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-12;  // scaled by 1 + ||A||_F
constexpr int kMaxDim = 512;

void require_square_sized(const DenseMatrix& a, const char* op) {
  if (!a.is_square() || a.rows < 1 || a.rows > kMaxDim) {
    throw std::invalid_argument(std::string(op) +
                                ": requires a square matrix with 1 <= d <= 512");
  }
}

double off_diagonal_frobenius(const DenseMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation on the (p, q) plane of a real symmetric working
// matrix, with eigenvector accumulation. Plain Golub–Van Loan formulas.
void rotate_real(std::vector<double>& w, std::vector<double>& v, int d, int p,
                 int q) {
  const double apq = w[static_cast<std::size_t>(p) * d + q];
  if (apq == 0.0) return;
  const double app = w[static_cast<std::size_t>(p) * d + p];
  const double aqq = w[static_cast<std::size_t>(q) * d + q];
  const double tau = (aqq - app) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  auto W = [&](int i, int j) -> double& {
    return w[static_cast<std::size_t>(i) * d + j];
  };
  for (int r = 0; r < d; ++r) {
    const double arp = W(r, p), arq = W(r, q);
    W(r, p) = c * arp - s * arq;
    W(r, q) = s * arp + c * arq;
  }
  for (int r = 0; r < d; ++r) {
    const double apr = W(p, r), aqr = W(q, r);
    W(p, r) = c * apr - s * aqr;
    W(q, r) = s * apr + c * aqr;
  }
  for (int r = 0; r < d; ++r) {
    double& vrp = v[static_cast<std::size_t>(r) * d + p];
    double& vrq = v[static_cast<std::size_t>(r) * d + q];
    const double a = vrp, b = vrq;
    vrp = c * a - s * b;
    vrq = s * a + c * b;
  }
}

// Complex Hermitian rotation: dephase A_pq to |A_pq|, then rotate as in the
// real case. The combined update is A <- U* A U with
//   U_pp = c, U_pq = s, U_qp = -s conj(u), U_qq = c conj(u),  u = A_pq/|A_pq|.
void rotate_hermitian(DenseMatrix& w, DenseMatrix& v, int p, int q) {
  const cplx apq = w.at(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const cplx u = apq / g;
  const double app = w.at(p, p).real();
  const double aqq = w.at(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx cu = std::conj(u);
  const int d = w.rows;
  for (int r = 0; r < d; ++r) {
    const cplx arp = w.at(r, p), arq = w.at(r, q);
    w.at(r, p) = c * arp - s * cu * arq;
    w.at(r, q) = s * arp + c * cu * arq;
  }
  for (int r = 0; r < d; ++r) {
    const cplx apr = w.at(p, r), aqr = w.at(q, r);
    w.at(p, r) = c * apr - s * u * aqr;
    w.at(q, r) = s * apr + c * u * aqr;
  }
  for (int r = 0; r < d; ++r) {
    const cplx vrp = v.at(r, p), vrq = v.at(r, q);
    v.at(r, p) = c * vrp - s * cu * vrq;
    v.at(r, q) = s * vrp + c * cu * vrq;
  }
}

SpectralDecomposition sort_descending(std::vector<double> diag, DenseMatrix v) {
  const int d = static_cast<int>(diag.size());
  std::vector<int> order(diag.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return diag[i] > diag[j]; });
  SpectralDecomposition out;
  out.eigenvalues.resize(diag.size());
  out.eigenvectors = DenseMatrix(d, d);
  for (int j = 0; j < d; ++j) {
    out.eigenvalues[j] = diag[order[j]];
    for (int i = 0; i < d; ++i) out.eigenvectors.at(i, j) = v.at(i, order[j]);
  }
  return out;
}

}  // namespace

DenseMatrix DenseMatrix::identity(int d) {
  DenseMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diag(const std::vector<double>& values) {
  const int d = static_cast<int>(values.size());
  DenseMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::from_real(int r, int c, const std::vector<double>& v) {
  if (v.size() != static_cast<std::size_t>(r) * c)
    throw std::invalid_argument("from_real: size mismatch");
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < v.size(); ++i) m.data[i] = v[i];
  return m;
}

bool DenseMatrix::is_real() const {
  for (const cplx& z : data)
    if (z.imag() != 0.0) return false;
  return true;
}

bool DenseMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i; j < cols; ++j)
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
  return true;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data) s += std::norm(z);
  return std::sqrt(s);
}

double DenseMatrix::trace_real() const {
  double s = 0.0;
  for (int i = 0; i < std::min(rows, cols); ++i) s += at(i, i).real();
  return s;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] = a.data[i] + b.data[i];
  return m;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] = a.data[i] - b.data[i];
  return m;
}

DenseMatrix operator*(double alpha, const DenseMatrix& a) {
  DenseMatrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] = alpha * a.data[i];
  return m;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  DenseMatrix m(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  }
  return m;
}

double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    s += (std::conj(a.data[i]) * b.data[i]).real();
  return s;
}

SpectralDecomposition eigh(const DenseMatrix& a) {
  require_square_sized(a, "eigh");
  if (!a.is_hermitian())
    throw std::invalid_argument("eigh: input is not hermitian within 1e-12");
  const int d = a.rows;
  const double tol = kOffDiagTol * (1.0 + a.frobenius_norm());

  if (a.is_real()) {
    std::vector<double> w(static_cast<std::size_t>(d) * d);
    std::vector<double> v(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) {
      v[static_cast<std::size_t>(i) * d + i] = 1.0;
      for (int j = 0; j < d; ++j)
        w[static_cast<std::size_t>(i) * d + j] =
            0.5 * (a.at(i, j).real() + a.at(j, i).real());
    }
    double off = 0.0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      off = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) off += w[static_cast<std::size_t>(i) * d + j] *
                             w[static_cast<std::size_t>(i) * d + j];
      off = std::sqrt(off);
      if (off <= tol) {
        std::vector<double> diag(d);
        for (int i = 0; i < d; ++i) diag[i] = w[static_cast<std::size_t>(i) * d + i];
        DenseMatrix vc(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            vc.at(i, j) = v[static_cast<std::size_t>(i) * d + j];
        return sort_descending(std::move(diag), std::move(vc));
      }
      for (int p = 0; p < d - 1; ++p)
        for (int q = p + 1; q < d; ++q) rotate_real(w, v, d, p, q);
    }
    throw ConvergenceError("eigh: jacobi sweeps exhausted", off);
  }

  DenseMatrix w(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      w.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
  DenseMatrix v = DenseMatrix::identity(d);
  double off = 0.0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    off = off_diagonal_frobenius(w);
    if (off <= tol) {
      std::vector<double> diag(d);
      for (int i = 0; i < d; ++i) diag[i] = w.at(i, i).real();
      return sort_descending(std::move(diag), std::move(v));
    }
    for (int p = 0; p < d - 1; ++p)
      for (int q = p + 1; q < d; ++q) rotate_hermitian(w, v, p, q);
  }
  throw ConvergenceError("eigh: jacobi sweeps exhausted", off);
}

SvdResult svd(const DenseMatrix& a) {
  require_square_sized(a, "svd");
  const int d = a.rows;
  const DenseMatrix h = matmul(a.adjoint(), a);
  // h is hermitian up to rounding; symmetrization inside eigh absorbs it,
  // but make sure the precondition check cannot trip on accumulated error.
  DenseMatrix hsym(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      hsym.at(i, j) = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
  SpectralDecomposition es = eigh(hsym);

  SvdResult out;
  out.right = es.eigenvectors;
  out.singular_values.resize(d);
  for (int i = 0; i < d; ++i)
    out.singular_values[i] = std::sqrt(std::max(es.eigenvalues[i], 0.0));
  const double smax = out.singular_values.empty() ? 0.0 : out.singular_values[0];

  out.left = DenseMatrix(d, d);
  std::vector<bool> defined(d, false);
  for (int j = 0; j < d; ++j) {
    cplx colnorm2 = 0.0;
    std::vector<cplx> col(d, cplx(0.0, 0.0));
    for (int i = 0; i < d; ++i) {
      cplx s = 0.0;
      for (int k = 0; k < d; ++k) s += a.at(i, k) * out.right.at(k, j);
      col[i] = s;
      colnorm2 += std::conj(s) * s;
    }
    const double nw = std::sqrt(colnorm2.real());
    if (nw > smax * 1e-10 && nw > 0.0) {
      for (int i = 0; i < d; ++i) out.left.at(i, j) = col[i] / nw;
      defined[j] = true;
    }
  }
  // Re-orthonormalize in descending-sigma order; fill empty columns from
  // the standard basis. Two MGS passes keep U* U - I near machine level
  // even when A*A squared a poor condition number.
  for (int j = 0; j < d; ++j) {
    std::vector<cplx> col(d, cplx(0.0, 0.0));
    if (defined[j]) {
      for (int i = 0; i < d; ++i) col[i] = out.left.at(i, j);
    }
    bool placed = false;
    for (int attempt = 0; attempt <= d && !placed; ++attempt) {
      if (attempt > 0) {
        std::fill(col.begin(), col.end(), cplx(0.0, 0.0));
        col[attempt - 1] = 1.0;
      }
      for (int pass = 0; pass < 2; ++pass) {
        for (int jj = 0; jj < j; ++jj) {
          cplx dot = 0.0;
          for (int i = 0; i < d; ++i) dot += std::conj(out.left.at(i, jj)) * col[i];
          for (int i = 0; i < d; ++i) col[i] -= dot * out.left.at(i, jj);
        }
      }
      double n2 = 0.0;
      for (int i = 0; i < d; ++i) n2 += std::norm(col[i]);
      const double n = std::sqrt(n2);
      if (n > (attempt == 0 && defined[j] ? 0.5 : 1e-3)) {
        for (int i = 0; i < d; ++i) out.left.at(i, j) = col[i] / n;
        placed = true;
      }
    }
    if (!placed)
      throw ConvergenceError("svd: failed to complete the left factor", 1.0);
  }
  return out;
}

std::vector<double> project_simplex(const std::vector<double>& v, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("project_simplex: mass must be > 0");
  if (v.empty()) throw std::invalid_argument("project_simplex: empty input");
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0;
  double theta = 0.0;
  int rho = 0;
  double css = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    css += u[j];
    const double candidate = (css - mass) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) {
      rho = static_cast<int>(j + 1);
      cumulative = css;
    }
  }
  theta = (cumulative - mass) / static_cast<double>(rho);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

std::vector<double> project_l1_ball(const std::vector<double>& v, double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("project_l1_ball: radius must be > 0");
  double l1 = 0.0;
  for (double x : v) l1 += std::abs(x);
  if (l1 <= radius) return v;
  std::vector<double> absv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) absv[i] = std::abs(v[i]);
  std::vector<double> w = project_simplex(absv, radius);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = (v[i] < 0.0 ? -w[i] : w[i]);
  return out;
}

}  // namespace nodim
