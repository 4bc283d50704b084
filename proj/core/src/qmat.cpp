#include "spe/qmat.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace spe {

Unitary2Q::Unitary2Q(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != 4 || m_.cols() != 4) {
    throw DimensionMismatch("two-qubit unitary must be 4x4");
  }
  const double defect = unitarity_defect(m_);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "matrix is not unitary: Frobenius defect ||U U^dagger - I|| = "
       << defect;
    throw NotUnitary(os.str(), defect);
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix identity(Eigen::Index dim) {
  return ComplexMatrix::Identity(dim, dim);
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

double spectral_norm(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

double unitarity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a * a.adjoint() - identity(a.rows())).norm();
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return unitarity_defect(a) <= tol;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

EigenDecomposition eig_normal(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("eig_normal: matrix not square");
  const double commutator = (a * a.adjoint() - a.adjoint() * a).norm();
  if (commutator > 1e-8) {
    std::ostringstream os;
    os << "eig_normal: matrix is not normal (||AA^dagger - A^dagger A|| = "
       << commutator << ")";
    throw NotNormal(os.str());
  }
  Eigen::ComplexSchur<ComplexMatrix> schur(a.rows());
  schur.setMaxIterations(64 * std::max<Eigen::Index>(a.rows(), 1));
  schur.compute(a);
  if (schur.info() != Eigen::Success) {
    throw NoConvergence("eig_normal: Schur iteration did not converge");
  }
  EigenDecomposition out;
  out.values = schur.matrixT().diagonal();
  out.vectors = schur.matrixU();
  return out;
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& a) {
  if (!is_hermitian(a, kPsdTol)) throw NotPSD("sqrtm_psd: matrix is not Hermitian");
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw NoConvergence("sqrtm_psd: eigensolver failed");
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.size() && ev.minCoeff() < -kPsdTol) {
    std::ostringstream os;
    os << "sqrtm_psd: negative eigenvalue " << ev.minCoeff();
    throw NotPSD(os.str());
  }
  ev = ev.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& v = es.eigenvectors();
  return v * ev.cast<cplx>().asDiagonal() * v.adjoint();
}

namespace pauli {

ComplexMatrix I() { return identity(2); }

ComplexMatrix X() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix Y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

ComplexMatrix Z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix from_char(char c) {
  switch (c) {
    case 'I': return I();
    case 'X': return X();
    case 'Y': return Y();
    case 'Z': return Z();
    default: throw InvalidArgument(std::string("unknown Pauli letter '") + c + "'");
  }
}

ComplexMatrix from_string(const std::string& s) {
  ComplexMatrix out = identity(1);
  for (char c : s) out = kron(out, from_char(c));
  return out;
}

}  // namespace pauli

ComplexMatrix exp_i_involutory(double phi, const ComplexMatrix& p) {
  return std::cos(phi) * identity(p.rows()) + kI * std::sin(phi) * p;
}

const ComplexMatrix& magic_basis() {
  static const ComplexMatrix q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(4, 4);
    m << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    return ComplexMatrix(s * m);
  }();
  return q;
}

namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix z(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) z(i, j) = cplx(n(rng), n(rng));
  return z;
}

}  // namespace

ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : cplx(1.0);
  }
  return q;
}

ComplexVector random_state(Eigen::Index dim, Rng& rng) {
  ComplexVector v = ginibre(dim, 1, rng).col(0);
  v.normalize();
  return v;
}

ComplexMatrix random_density(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace spe
