#include "toralf/curvature.hpp"

#include <cmath>

#include "toralf/errors.hpp"

namespace toralf {

namespace {

double max_abs(const Mat4& m) {
  double v = 0.0;
  for (const auto& row : m)
    for (double x : row) v = std::max(v, std::abs(x));
  return v;
}

}  // namespace

Mat4 invert4(const Mat4& m) {
  // Gauss-Jordan with partial pivoting.
  double a[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m[i][j];
      a[i][j + 4] = (i == j) ? 1.0 : 0.0;
    }
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) fail(errc::ill_conditioned, "singular metric");
    if (piv != col)
      for (int j = 0; j < 8; ++j) std::swap(a[piv][j], a[col][j]);
    const double inv = 1.0 / a[col][col];
    for (int j = 0; j < 8; ++j) a[col][j] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) a[r][j] -= f * a[col][j];
    }
  }
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j + 4];
  return out;
}

CurvatureSample curvature_fd(const MetricFn& g, double rho, double z, double h) {
  if (!(h > 0.0) || !(rho > 2.0 * h)) fail(errc::step_too_large, "requires rho > 2h > 0");

  // Stencil values. Derivative slots: 0 -> rho (coordinate 2), 1 -> z (3).
  const Mat4 g0 = g(rho, z);
  const Mat4 gpr = g(rho + h, z), gmr = g(rho - h, z);
  const Mat4 gpz = g(rho, z + h), gmz = g(rho, z - h);
  const Mat4 gpp = g(rho + h, z + h), gpm = g(rho + h, z - h);
  const Mat4 gmp = g(rho - h, z + h), gmm = g(rho - h, z - h);

  double dg[2][4][4];     // first derivatives
  double d2g[2][2][4][4]; // second derivatives
  const double h2 = h * h;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      dg[0][i][j] = (gpr[i][j] - gmr[i][j]) / (2.0 * h);
      dg[1][i][j] = (gpz[i][j] - gmz[i][j]) / (2.0 * h);
      d2g[0][0][i][j] = (gpr[i][j] - 2.0 * g0[i][j] + gmr[i][j]) / h2;
      d2g[1][1][i][j] = (gpz[i][j] - 2.0 * g0[i][j] + gmz[i][j]) / h2;
      d2g[0][1][i][j] =
          (gpp[i][j] - gpm[i][j] - gmp[i][j] + gmm[i][j]) / (4.0 * h2);
      d2g[1][0][i][j] = d2g[0][1][i][j];
    }
  }

  const Mat4 ginv = invert4(g0);

  // Derivative of g along coordinate c (0 for t, 1 for x3: zero).
  auto d1 = [&](int c, int i, int j) -> double {
    return (c >= 2) ? dg[c - 2][i][j] : 0.0;
  };
  auto d2 = [&](int c, int e, int i, int j) -> double {
    return (c >= 2 && e >= 2) ? d2g[c - 2][e - 2][i][j] : 0.0;
  };

  // Christoffel symbols Gamma[c][a][b] and their rho/z derivatives.
  double gamma[4][4][4];
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int d = 0; d < 4; ++d)
          s += ginv[c][d] * (d1(a, d, b) + d1(b, d, a) - d1(d, a, b));
        gamma[c][a][b] = 0.5 * s;
      }

  // d(g^{cd})/dx^e = -g^{ci} dg_{ij} g^{jd}
  double dginv[2][4][4];
  for (int e = 0; e < 2; ++e)
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) s += ginv[c][i] * dg[e][i][j] * ginv[j][d];
        dginv[e][c][d] = -s;
      }

  double dgamma[2][4][4][4];
  for (int e = 0; e < 2; ++e) {
    const int ec = e + 2;
    for (int c = 0; c < 4; ++c)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double s = 0.0;
          for (int d = 0; d < 4; ++d) {
            s += dginv[e][c][d] * (d1(a, d, b) + d1(b, d, a) - d1(d, a, b));
            s += ginv[c][d] * (d2(a, ec, d, b) + d2(b, ec, d, a) - d2(d, ec, a, b));
          }
          dgamma[e][c][a][b] = 0.5 * s;
        }
  }

  auto dGamma = [&](int e, int c, int a, int b) -> double {
    return (e >= 2) ? dgamma[e - 2][c][a][b] : 0.0;
  };

  CurvatureSample out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double r = 0.0;
      for (int c = 0; c < 4; ++c) {
        r += dGamma(c, c, a, b) - dGamma(a, c, c, b);
        for (int d = 0; d < 4; ++d)
          r += gamma[c][c][d] * gamma[d][a][b] - gamma[c][a][d] * gamma[d][c][b];
      }
      out.ricci[a][b] = r;
    }

  double scal = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) scal += ginv[a][b] * out.ricci[a][b];
  out.scalar = scal;

  double m2 = 0.0;
  for (int e = 0; e < 2; ++e)
    for (int f = 0; f < 2; ++f)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m2 = std::max(m2, std::abs(d2g[e][f][i][j]));
  out.max_d2g = m2;
  out.cond_est = max_abs(g0) * max_abs(ginv);
  return out;
}

CurvatureSample curvature_fd_richardson(const MetricFn& g, double rho, double z, double h) {
  const CurvatureSample coarse = curvature_fd(g, rho, z, h);
  CurvatureSample fine = curvature_fd(g, rho, z, 0.5 * h);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      fine.ricci[i][j] = (4.0 * fine.ricci[i][j] - coarse.ricci[i][j]) / 3.0;
  fine.scalar = (4.0 * fine.scalar - coarse.scalar) / 3.0;
  return fine;
}

}  // namespace toralf
