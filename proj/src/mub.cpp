#include "cpoly/mub.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "cpoly/error.hpp"
#include "cpoly/finite_field.hpp"

namespace cpoly {

namespace {

Complex inner_product(const StateVector& a, const StateVector& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Basis standard_basis(std::size_t n) {
  Basis b;
  for (std::size_t j = 0; j < n; ++j) {
    StateVector v(n);
    v[j] = 1.0;
    b.vectors.push_back(std::move(v));
  }
  return b;
}

// Odd characteristic: component m of vector b in basis a is
// q^{-1/2} omega^{tr(a m^2 + b m)}, omega = exp(2 pi i / p).
std::vector<Basis> odd_characteristic_bases(const FieldTables& f) {
  const std::uint32_t q = f.order();
  const std::uint32_t p = f.spec().p;
  const double amp = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Complex> roots(p);
  for (std::uint32_t t = 0; t < p; ++t) roots[t] = std::polar(amp, 2.0 * std::numbers::pi * t / p);

  std::vector<Basis> out;
  for (std::uint32_t a = 0; a < q; ++a) {
    Basis basis;
    for (std::uint32_t b = 0; b < q; ++b) {
      StateVector v(q);
      for (std::uint32_t m = 0; m < q; ++m) {
        const std::uint32_t mm = f.mul(m, m);
        const std::uint32_t arg = f.add(f.mul(a, mm), f.mul(b, m));
        v[m] = roots[f.trace(arg)];
      }
      basis.vectors.push_back(std::move(v));
    }
    out.push_back(std::move(basis));
  }
  return out;
}

// Characteristic two: the phase is i^{Q_a(m)} (-1)^{tr(b m)} with Q_a the
// Z/4-valued quadratic form
//   Q_a(m) = sum_i B_ii m_i + 2 sum_{i<j} B_ij m_i m_j  (mod 4),
// B_ij = tr(a x^i x^j), m = sum_i m_i x^i. It satisfies
// Q_a(m + m') = Q_a(m) + Q_a(m') + 2 tr(a m m') (mod 4), which makes the
// bases for distinct a mutually unbiased.
std::vector<Basis> even_characteristic_bases(const FieldTables& f) {
  const std::uint32_t q = f.order();
  const std::uint32_t k = f.spec().k;
  const double amp = 1.0 / std::sqrt(static_cast<double>(q));
  const Complex fourth[4] = {Complex(amp, 0.0), Complex(0.0, amp), Complex(-amp, 0.0), Complex(0.0, -amp)};

  std::vector<Basis> out;
  for (std::uint32_t a = 0; a < q; ++a) {
    // x^i has index 2^i in the canonical enumeration.
    std::vector<std::uint32_t> form(k * k);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) form[i * k + j] = f.trace(f.mul(a, f.mul(1u << i, 1u << j)));

    std::vector<std::uint32_t> quad(q);
    for (std::uint32_t m = 0; m < q; ++m) {
      std::uint32_t value = 0;
      for (std::uint32_t i = 0; i < k; ++i) {
        if (!((m >> i) & 1u)) continue;
        value += form[i * k + i];
        for (std::uint32_t j = i + 1; j < k; ++j)
          if ((m >> j) & 1u) value += 2 * form[i * k + j];
      }
      quad[m] = value % 4;
    }

    Basis basis;
    for (std::uint32_t b = 0; b < q; ++b) {
      StateVector v(q);
      for (std::uint32_t m = 0; m < q; ++m) {
        const std::uint32_t sign = f.trace(f.mul(b, m));
        v[m] = fourth[(quad[m] + 2 * sign) % 4];
      }
      basis.vectors.push_back(std::move(v));
    }
    out.push_back(std::move(basis));
  }
  return out;
}

}  // namespace

std::string factorization_string(std::size_t n) {
  std::string s = std::to_string(n) + " = ";
  bool first = true;
  for (const auto& [p, e] : factorize(n)) {
    if (!first) s += "·";
    first = false;
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

MubSet build_complete(std::size_t n) {
  if (n < 2) throw InvalidDimension("build_complete: n must be >= 2, got " + std::to_string(n));
  const auto pk = as_prime_power(n);
  if (!pk) throw UnsupportedDimension(factorization_string(n) + " is not a prime power");
  const auto spec = std::make_shared<const FieldSpec>(make_field(pk->p, pk->k));
  const FieldTables tables(spec);

  MubSet set;
  set.n = n;
  set.bases.push_back(standard_basis(n));
  auto rest = pk->p == 2 ? even_characteristic_bases(tables) : odd_characteristic_bases(tables);
  for (auto& b : rest) set.bases.push_back(std::move(b));
  return set;
}

MubReport verify_mub(const MubSet& set, double tol) {
  for (const auto& basis : set.bases) {
    if (basis.vectors.size() != set.n) throw InvalidInput("verify_mub: basis with wrong vector count");
    for (const auto& v : basis.vectors)
      if (v.size() != set.n) throw InvalidInput("verify_mub: vector with wrong length");
  }
  MubReport report;
  report.tol = tol;
  const double target = 1.0 / static_cast<double>(set.n);
  for (const auto& basis : set.bases)
    for (std::size_t i = 0; i < set.n; ++i)
      for (std::size_t j = i; j < set.n; ++j) {
        const Complex ip = inner_product(basis.vectors[i], basis.vectors[j]);
        const double dev = std::abs(ip - Complex(i == j ? 1.0 : 0.0));
        report.max_orthonormality_violation = std::max(report.max_orthonormality_violation, dev);
      }
  for (std::size_t a = 0; a < set.bases.size(); ++a)
    for (std::size_t b = a + 1; b < set.bases.size(); ++b)
      for (std::size_t i = 0; i < set.n; ++i)
        for (std::size_t j = 0; j < set.n; ++j) {
          const double overlap = std::norm(inner_product(set.bases[a].vectors[i], set.bases[b].vectors[j]));
          const double dev = std::abs(overlap - target);
          ++report.cross_pairs_checked;
          if (dev > report.max_unbiasedness_violation) {
            report.max_unbiasedness_violation = dev;
            report.witness[0] = a;
            report.witness[1] = i;
            report.witness[2] = b;
            report.witness[3] = j;
          }
        }
  report.pass = set.bases.size() <= set.n + 1 && report.max_orthonormality_violation <= tol &&
                report.max_unbiasedness_violation <= tol;
  return report;
}

std::size_t mub_lower_bound(std::size_t n) {
  if (n < 2) throw InvalidDimension("mub_lower_bound: n must be >= 2");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [p, e] : factorize(n)) {
    std::size_t pk = 1;
    for (std::uint32_t i = 0; i < e; ++i) pk *= p;
    best = std::min(best, pk);
  }
  return best + 1;
}

std::vector<std::vector<ComplexMatrix>> projectors(const MubSet& set) {
  std::vector<std::vector<ComplexMatrix>> out;
  for (const auto& basis : set.bases) {
    std::vector<ComplexMatrix> group;
    for (const auto& v : basis.vectors) group.push_back(ComplexMatrix::outer(v));
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace cpoly
