#include "skw/chain_complex.hpp"

namespace skw {

namespace {

template <typename M>
void check_covers(const FormSparse& m, const M& phi) {
  for (const auto& e : m.entries())
    for (const auto& t : e.value.terms())
      if (t.i > phi.rows() || t.j > phi.cols())
        throw DimensionError("assignment is " + std::to_string(phi.rows()) + " x " + std::to_string(phi.cols()) +
                             " but the complex uses u_" + std::to_string(t.i) + "," + std::to_string(t.j));
}

}  // namespace

IntSparse specialize(const FormSparse& m, const IntMatrix& phi) {
  check_covers(m, phi);
  std::vector<IntSparse::Entry> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back({e.row, e.col, e.value.evaluate(phi)});
  return IntSparse::from_entries(m.rows(), m.cols(), std::move(out));
}

ModSparse specialize(const FormSparse& m, const DenseMatrix<std::uint64_t>& phi, std::uint64_t prime) {
  check_covers(m, phi);
  const PrimeField field(prime);
  std::vector<ModSparse::Entry> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.push_back({e.row, e.col, e.value.evaluate(phi, field)});
  return ModSparse::from_entries(m.rows(), m.cols(), std::move(out), prime);
}

IntComplex specialize(const FormComplex& c, const IntMatrix& phi) {
  IntComplex out(c.ranks());
  for (int n = 1; n <= c.top(); ++n) out.set_d(n, specialize(c.d(n), phi));
  for (int n = 0; n <= c.top(); ++n) out.set_labels(n, c.labels(n));
  return out;
}

ModComplex specialize(const FormComplex& c, const DenseMatrix<std::uint64_t>& phi, std::uint64_t prime) {
  ModComplex out(c.ranks(), prime);
  for (int n = 1; n <= c.top(); ++n) out.set_d(n, specialize(c.d(n), phi, prime));
  for (int n = 0; n <= c.top(); ++n) out.set_labels(n, c.labels(n));
  return out;
}

ModComplex reduce_mod(const IntComplex& c, std::uint64_t prime) {
  ModComplex out(c.ranks(), prime);
  for (int n = 1; n <= c.top(); ++n) out.set_d(n, reduce_mod(c.d(n), prime));
  for (int n = 0; n <= c.top(); ++n) out.set_labels(n, c.labels(n));
  return out;
}

std::vector<int> square_defects(const ModComplex& c) {
  std::vector<int> bad;
  for (int n = 2; n <= c.top(); ++n)
    if (!multiply(c.d(n - 1), c.d(n)).is_zero()) bad.push_back(n);
  return bad;
}

std::vector<int> square_defects(const IntComplex& c) {
  std::vector<int> bad;
  for (int n = 2; n <= c.top(); ++n)
    if (!multiply(c.d(n - 1), c.d(n)).is_zero()) bad.push_back(n);
  return bad;
}

}  // namespace skw
