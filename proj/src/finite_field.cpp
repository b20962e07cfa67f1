#include "cpoly/finite_field.hpp"

#include <string>

#include "cpoly/error.hpp"

namespace cpoly {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_mod(Poly a, const Poly& divisor, std::uint32_t p) {
  trim(a);
  const std::size_t d = divisor.size() - 1;
  while (a.size() > d) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * divisor[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (!(a.spec() == b.spec())) throw InvalidInput("field element spec mismatch");
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const Poly& poly_in, std::uint32_t p) {
  Poly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_mod(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InvalidInput("make_field: " + std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxFieldDegree) {
    throw SizeCapExceeded("make_field: degree must be in [1, " + std::to_string(kMaxFieldDegree) +
                          "], got " + std::to_string(k));
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > kMaxFieldOrder) {
    throw SizeCapExceeded("make_field: field order " + std::to_string(q) + " exceeds " +
                          std::to_string(kMaxFieldOrder));
  }
  // Candidates in lexicographic order of (c_0, c_1, ..., c_{k-1}).
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly candidate(k + 1);
    std::uint64_t rest = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    candidate[k] = 1;
    if (is_irreducible(candidate, p)) return FieldSpec{p, k, candidate};
  }
  throw Error("make_field: no irreducible polynomial found");  // unreachable for prime p
}

FieldElem::FieldElem(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint32_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (!spec_) throw InvalidInput("FieldElem: null spec");
  if (coeffs_.size() > spec_->k) coeffs_ = poly_mod(coeffs_, spec_->modulus, spec_->p);
  for (auto& c : coeffs_) c %= spec_->p;
  coeffs_.resize(spec_->k, 0);
}

FieldElem FieldElem::zero(std::shared_ptr<const FieldSpec> spec) { return FieldElem(std::move(spec), {}); }

FieldElem FieldElem::one(std::shared_ptr<const FieldSpec> spec) { return FieldElem(std::move(spec), {1}); }

FieldElem FieldElem::from_index(std::shared_ptr<const FieldSpec> spec, std::uint32_t index) {
  if (index >= spec->order()) throw InvalidInput("FieldElem::from_index: index out of range");
  std::vector<std::uint32_t> coeffs(spec->k);
  for (std::uint32_t i = 0; i < spec->k; ++i) {
    coeffs[i] = index % spec->p;
    index /= spec->p;
  }
  return FieldElem(std::move(spec), std::move(coeffs));
}

std::uint32_t FieldElem::index() const {
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * spec_->p + coeffs_[i];
  return idx;
}

bool FieldElem::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.spec() == b.spec() && a.coeffs_ == b.coeffs_;
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.spec().p;
  std::vector<std::uint32_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p;
  return FieldElem(a.spec_ptr(), std::move(c));
}

FieldElem neg(const FieldElem& a) {
  const std::uint32_t p = a.spec().p;
  std::vector<std::uint32_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - a.coeffs()[i]) % p;
  return FieldElem(a.spec_ptr(), std::move(c));
}

FieldElem sub(const FieldElem& a, const FieldElem& b) { return add(a, neg(b)); }

FieldElem mul(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  const FieldSpec& spec = a.spec();
  Poly prod(2 * spec.k, 0);
  for (std::size_t i = 0; i < spec.k; ++i)
    for (std::size_t j = 0; j < spec.k; ++j)
      prod[i + j] = (prod[i + j] + a.coeffs()[i] * b.coeffs()[j]) % spec.p;
  return FieldElem(a.spec_ptr(), poly_mod(std::move(prod), spec.modulus, spec.p));
}

FieldElem pow(const FieldElem& a, std::uint64_t e) {
  FieldElem result = FieldElem::one(a.spec_ptr());
  FieldElem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) throw DivisionByZero("inv: zero has no inverse");
  return pow(a, a.spec().order() - 2);
}

std::uint32_t absolute_trace(const FieldElem& a) {
  FieldElem sum = a;
  FieldElem frob = a;
  for (std::uint32_t i = 1; i < a.spec().k; ++i) {
    frob = pow(frob, a.spec().p);
    sum = add(sum, frob);
  }
  for (std::size_t i = 1; i < sum.coeffs().size(); ++i) {
    if (sum.coeffs()[i] != 0) throw Error("absolute_trace: result left the prime subfield");
  }
  return sum.coeffs()[0];
}

std::vector<FieldElem> enumerate(std::shared_ptr<const FieldSpec> spec) {
  std::vector<FieldElem> out;
  const std::uint32_t q = spec->order();
  out.reserve(q);
  for (std::uint32_t i = 0; i < q; ++i) out.push_back(FieldElem::from_index(spec, i));
  return out;
}

FieldTables::FieldTables(std::shared_ptr<const FieldSpec> spec)
    : spec_(std::move(spec)), q_(spec_->order()), add_(q_ * q_), mul_(q_ * q_), trace_(q_) {
  const auto elems = enumerate(spec_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    trace_[a] = static_cast<std::uint16_t>(absolute_trace(elems[a]));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint16_t>(cpoly::add(elems[a], elems[b]).index());
      mul_[a * q_ + b] = static_cast<std::uint16_t>(cpoly::mul(elems[a], elems[b]).index());
    }
  }
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(f[0].first), f[0].second};
}

}  // namespace cpoly
