// Lifts four weighted projective points with pairwise coprime moduli to a
// single SL_4(Z) matrix whose rows lie in the given classes.
#include <iostream>

#include "ulift/ulift.hpp"

int main() {
  using namespace ulift;
  BigInt const mods[] = {241, 601, 1201, 1321};
  std::vector<Weights> const weights = {
      {2, 5, 3, 10}, {8, 20, 30, 24}, {1, 50, 48, 40}, {11, 55, 44, 22}};
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    pts.emplace_back(std::vector<BigInt>(4, BigInt(1)), Ideal(mods[i]),
                     weights[i]);
  }
  LiftCertificate cert = sl_surject_projective(pts);
  IntMatrix const& m = cert.output;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "row " << i << ":";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::cout << " " << m(i, j);
    }
    std::cout << "\n  lambda = " << cert.lambdas[i] << "\n";
  }
  std::cout << "det = " << det(m) << "\n";
  std::cout << "verified: " << std::boolalpha << verify_ok(cert) << "\n";
  return verify_ok(cert) ? 0 : 1;
}
