#include "singpoly/oracle.hpp"

#include "singpoly/operators.hpp"

namespace singpoly {

Matrix<Rational> dunkl_matrix(int N, int degree, int i, const Rational& kappa0) {
  if (degree < 1) throw ParameterViolation("dunkl_matrix needs degree >= 1");
  const OperatorContext ctx = OperatorContext::at(N, kappa0);
  const std::vector<Mono> cols = monomials_of_degree(N, degree);
  const std::vector<Mono> rows = monomials_of_degree(N, degree - 1);
  std::map<Mono, std::size_t, GrlexDesc> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
  Matrix<Rational> A(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    QPoly img = dunkl(ctx, i, QPoly::monomial(N, cols[c], Rational(1), kappa0));
    for (const auto& [mono, v] : img.terms()) A[row_index.at(mono)][c] = v;
  }
  return A;
}

KernelReport joint_kernel(int N, int degree, const Rational& kappa0) {
  KernelReport rep;
  rep.N = N;
  rep.degree = degree;
  rep.kappa0 = kappa0;
  rep.monomials = monomials_of_degree(N, degree);
  rep.monomial_basis_size = static_cast<int>(rep.monomials.size());
  Matrix<Rational> stacked;
  for (int i = 1; i <= N; ++i)
    for (auto& row : dunkl_matrix(N, degree, i, kappa0)) stacked.push_back(std::move(row));
  rep.kernel_basis = rational_kernel(stacked, rep.monomial_basis_size);
  rep.kernel_dimension = static_cast<int>(rep.kernel_basis.rows.size());
  return rep;
}

QPoly kernel_vector_poly(const KernelReport& report, std::size_t row) {
  QPoly f(report.N, report.kappa0);
  const auto& v = report.kernel_basis.rows.at(row);
  for (std::size_t c = 0; c < v.size(); ++c) f.add_term(report.monomials[c], v[c]);
  return f;
}

KernelReport compare_with_module(KernelReport report, const SingularModule& module) {
  const SingularLabel& L = module.label;
  if (report.N != L.N || report.degree != L.lambda.degree() || report.kappa0 != L.kappa0)
    throw ParameterViolation("kernel report and module differ in (N, degree, kappa0)");
  ModuleComparison& cmp = report.comparison;
  cmp.compared = true;
  cmp.module_dim = static_cast<int>(module.basis.size());
  cmp.contains_module = true;
  for (const auto& b : module.basis)
    if (!reduces_to_zero(report.kernel_basis, coefficient_vector(b.zeta, report.monomials))) cmp.contains_module = false;
  cmp.equal_to_module = cmp.contains_module && basis_rank(module) == report.kernel_dimension;
  return report;
}

} // namespace singpoly
