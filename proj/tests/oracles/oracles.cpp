#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

namespace {

Mat ladder_plus(int twice_s) {
  const int d = twice_s + 1;
  const double s = 0.5 * twice_s;
  Mat p = Mat::Zero(d, d);
  for (int i = 1; i < d; ++i) {
    const double m = s - i;
    p(i - 1, i) = std::sqrt((s - m) * (s + m + 1));
  }
  return p;
}

}  // namespace

Mat sx(int twice_s) {
  const Mat p = ladder_plus(twice_s);
  return 0.5 * (p + p.adjoint());
}

Mat sy(int twice_s) {
  const Mat p = ladder_plus(twice_s);
  return Complex(0, -0.5) * (p - p.adjoint());
}

Mat sz(int twice_s) {
  const int d = twice_s + 1;
  Mat z = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) z(i, i) = 0.5 * twice_s - i;
  return z;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Mat embed(const Mat& op, int k, int n) {
  const auto d = op.rows();
  Mat out = Mat::Identity(1, 1);
  for (int site = 1; site <= n; ++site) out = kron(out, site == k ? op : Mat(Mat::Identity(d, d)));
  return out;
}

Mat expm_i(const Mat& op, double angle) {
  const Mat arg = Complex(0, -angle) * op;
  return arg.exp();
}

namespace {

Mat ring_from_angles(int n, int twice_s, double jxx, double jyy, bool bond_frames) {
  const Mat x = sx(twice_s);
  const Mat y = sy(twice_s);
  const auto dim = static_cast<Eigen::Index>(std::pow(twice_s + 1, n));
  Mat h = Mat::Zero(dim, dim);
  for (int k = 1; k <= n; ++k) {
    const int l = k % n + 1;
    double ak = 0.0;
    double al = 0.0;
    if (bond_frames) {
      ak = al = kPi / 2 + (2 * k - 1) * kPi / n;
    } else {
      ak = 2 * (k - 1) * kPi / n;
      al = 2 * (l - 1) * kPi / n;
    }
    const Mat xk = std::cos(ak) * embed(x, k, n) + std::sin(ak) * embed(y, k, n);
    const Mat yk = std::cos(ak) * embed(y, k, n) - std::sin(ak) * embed(x, k, n);
    const Mat xl = std::cos(al) * embed(x, l, n) + std::sin(al) * embed(y, l, n);
    const Mat yl = std::cos(al) * embed(y, l, n) - std::sin(al) * embed(x, l, n);
    h += jxx * xk * xl + jyy * yk * yl;
  }
  return h;
}

}  // namespace

Mat model_a(int n, int twice_s, double jxx, double jyy) { return ring_from_angles(n, twice_s, jxx, jyy, false); }

Mat model_b(int n, int twice_s, double jxx, double jyy) { return ring_from_angles(n, twice_s, jxx, jyy, true); }

Mat collinear(int n, int twice_s, double jxx, double jyy) {
  const auto dim = static_cast<Eigen::Index>(std::pow(twice_s + 1, n));
  Mat h = Mat::Zero(dim, dim);
  for (int k = 1; k <= n; ++k) {
    const int l = k % n + 1;
    h += jxx * embed(sx(twice_s), k, n) * embed(sx(twice_s), l, n) +
         jyy * embed(sy(twice_s), k, n) * embed(sy(twice_s), l, n);
  }
  return h;
}

Eigen::VectorXd eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::pair<double, int> classical_ising_ground(int n, double j) {
  double best = 1e300;
  int count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    double e = 0.0;
    for (int k = 0; k < n; ++k) {
      const int a = (mask >> k) & 1 ? 1 : -1;
      const int b = (mask >> ((k + 1) % n)) & 1 ? 1 : -1;
      e += 0.25 * j * a * b;
    }
    if (e < best - 1e-12) {
      best = e;
      count = 1;
    } else if (std::abs(e - best) <= 1e-12) {
      ++count;
    }
  }
  return {best, count};
}

Mat naive_partial_trace(const Vec& psi, int n, int d, const std::vector<int>& keep) {
  const Mat rho = psi * psi.adjoint();
  const auto dim = psi.size();
  auto digits = [&](Eigen::Index idx) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int site = n - 1; site >= 0; --site) {
      out[static_cast<std::size_t>(site)] = static_cast<int>(idx % d);
      idx /= d;
    }
    return out;
  };
  int dk = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) dk *= d;
  Mat red = Mat::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto da = digits(a);
      const auto db = digits(b);
      bool same_env = true;
      for (int site = 1; site <= n && same_env; ++site) {
        if (std::find(keep.begin(), keep.end(), site) == keep.end() &&
            da[static_cast<std::size_t>(site - 1)] != db[static_cast<std::size_t>(site - 1)]) {
          same_env = false;
        }
      }
      if (!same_env) continue;
      int ra = 0;
      int rb = 0;
      for (int site : keep) {
        ra = ra * d + da[static_cast<std::size_t>(site - 1)];
        rb = rb * d + db[static_cast<std::size_t>(site - 1)];
      }
      red(ra, rb) += rho(a, b);
    }
  }
  return red;
}

double wootters_nonhermitian(const Mat& rho) {
  Mat pauli_y(2, 2);
  pauli_y << 0, Complex(0, -1), Complex(0, 1), 0;
  const Mat yy = kron(pauli_y, pauli_y);
  const Mat r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Mat> solver(r);
  std::vector<double> lam;
  for (Eigen::Index i = 0; i < 4; ++i) lam.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
  std::sort(lam.rbegin(), lam.rend());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

std::vector<std::set<std::vector<int>>> orbit_partition(int n, int k) {
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 2 * k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1) s.push_back(i);
    }
    subsets.push_back(s);
  }
  std::vector<std::set<std::vector<int>>> orbits;
  std::set<std::vector<int>> assigned;
  for (const auto& s : subsets) {
    if (assigned.count(s)) continue;
    std::set<std::vector<int>> orbit;
    std::vector<int> cur = s;
    for (int t = 0; t < n; ++t) {
      orbit.insert(cur);
      for (auto& x : cur) x = (x + 1) % n;
      std::sort(cur.begin(), cur.end());
    }
    assigned.insert(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  return orbits;
}

long long choose(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
