#ifndef SINGPOLY_ORACLE_HPP
#define SINGPOLY_ORACLE_HPP

#include "singpoly/linalg.hpp"
#include "singpoly/singular.hpp"

namespace singpoly {

struct ModuleComparison {
  bool compared = false;
  bool contains_module = false;
  bool equal_to_module = false;
  int module_dim = 0;
};

struct KernelReport {
  int N = 0;
  int degree = 0;
  Rational kappa0;
  std::vector<Mono> monomials; // column order, grlex descending
  int monomial_basis_size = 0;
  int kernel_dimension = 0;
  Echelon<Rational> kernel_basis;
  ModuleComparison comparison;
};

// Matrix of D_i from degree d to degree d-1 in the monomial bases.
Matrix<Rational> dunkl_matrix(int N, int degree, int i, const Rational& kappa0);
KernelReport joint_kernel(int N, int degree, const Rational& kappa0);
KernelReport compare_with_module(KernelReport report, const SingularModule& module);
QPoly kernel_vector_poly(const KernelReport& report, std::size_t row);

} // namespace singpoly

#endif
