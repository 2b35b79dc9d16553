#include "fwm/bloch.hpp"

#include <cmath>
#include <vector>

namespace fwm {

std::pair<Complex, Complex> coherences_printed(Complex op, Complex os,
                                               Complex oc, Complex od,
                                               double delta) {
  const Complex D =
      Complex(1.0, -2.0 * delta) * std::norm(oc) + std::norm(od);
  if (std::abs(D) < 1e-30)
    throw Error(ErrorCode::DegenerateCoupling,
                "coherence denominator vanishes (both couplings zero)");
  const Complex i(0.0, 1.0);
  const Complex rho31 = i * (-std::norm(od) * op - std::conj(od) * oc * os) / D;
  const Complex rho41 = i * (-std::conj(oc) * od * op + std::norm(oc) * os) / D;
  return {rho31, rho41};
}

Coherences coherences_steady_reduced(Complex op, Complex os, Complex oc,
                                     Complex od, double delta, double gamma) {
  // 0 = i(os + od r21) + (i delta - (1+gamma)/2) r41
  // 0 = i(op + oc r21) - (1+gamma)/2 r31
  // 0 = i(conj(oc) r31 + conj(od) r41) - gamma r21
  const Complex i(0.0, 1.0);
  const double hw = (1.0 + gamma) / 2.0;
  Eigen::Matrix3cd A;
  A << Complex(-hw, delta), Complex(0.0, 0.0), i * od,
      Complex(0.0, 0.0), Complex(-hw, 0.0), i * oc,
      i * std::conj(od), i * std::conj(oc), Complex(-gamma, 0.0);
  Eigen::Vector3cd rhs;
  rhs << -i * os, -i * op, Complex(0.0, 0.0);

  Eigen::FullPivLU<Eigen::Matrix3cd> lu(A);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularSystem,
                "reduced Bloch steady-state system is singular");
  const Eigen::Vector3cd x = lu.solve(rhs);
  Coherences c;
  c.rho41 = x(0);
  c.rho31 = x(1);
  c.rho21 = x(2);
  return c;
}

Eigen::Matrix4cd steady_state_lindblad(Complex op, Complex os, Complex oc,
                                       Complex od, double delta,
                                       double gamma) {
  using M4 = Eigen::Matrix4cd;
  M4 H = M4::Zero();
  H(2, 0) = op;   // |3><1|
  H(2, 1) = oc;   // |3><2|
  H(3, 1) = od;   // |4><2|
  H(3, 0) = os;   // |4><1|
  H += H.adjoint().eval();
  H(3, 3) = delta;
  // Sign convention matching the reduced equations: d rho31/dt = +i Omega_p
  // for the ground-state population, and d rho41/dt gains +i delta.
  H = (-H).eval();

  std::vector<M4> jumps;
  for (int n : {2, 3})
    for (int m : {0, 1}) {
      M4 L = M4::Zero();
      L(m, n) = std::sqrt(0.5);
      jumps.push_back(L);
    }
  {
    M4 Lz = M4::Zero();
    Lz(0, 0) = std::sqrt(gamma);
    Lz(1, 1) = -std::sqrt(gamma);
    jumps.push_back(Lz);
  }

  // Column-stacked superoperator: vec(A X B) = (B^T kron A) vec(X).
  const M4 I = M4::Identity();
  auto kron = [](const M4& a, const M4& b) {
    Eigen::Matrix<Complex, 16, 16> out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    return out;
  };

  Eigen::Matrix<Complex, 16, 16> Lsup =
      Complex(0.0, -1.0) * (kron(I, H) - kron(H.transpose(), I));
  for (const M4& L : jumps) {
    const M4 LdL = (L.adjoint() * L).eval();
    Lsup += kron(L.conjugate(), L) -
            0.5 * (kron(I, LdL) + kron(LdL.transpose(), I));
  }

  Eigen::JacobiSVD<Eigen::Matrix<Complex, 16, 16>> svd(
      Lsup, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(14) - sv(15) < 1e-6)
    throw Error(ErrorCode::NonUniqueSteadyState,
                "Liouvillian null space is (near-)degenerate");

  Eigen::Matrix<Complex, 16, 1> v = svd.matrixV().col(15);
  M4 rho = Eigen::Map<M4>(v.data());
  rho = 0.5 * (rho + rho.adjoint().eval());
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-12)
    throw Error(ErrorCode::NonUniqueSteadyState,
                "traceless null-space solution");
  rho /= tr;
  return rho;
}

Coherences coherences_of(const Eigen::Matrix4cd& rho) {
  Coherences c;
  c.rho21 = rho(1, 0);
  c.rho31 = rho(2, 0);
  c.rho41 = rho(3, 0);
  return c;
}

}  // namespace fwm
