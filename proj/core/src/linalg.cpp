#include "boostkit/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace boostkit {

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

const std::array<Mat2c, 3>& pauli_matrices() {
  static const std::array<Mat2c, 3> sigma = [] {
    std::array<Mat2c, 3> s;
    const cplx i(0.0, 1.0);
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -i, i, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

}  // namespace boostkit
