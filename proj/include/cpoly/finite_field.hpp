#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cpoly {

// GF(p^k) presented as GF(p)[x] / (modulus). Coefficient lists are constant
// term first.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;  // monic, length k + 1

  std::uint32_t order() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 512;
inline constexpr std::uint32_t kMaxFieldDegree = 9;

bool is_prime(std::uint64_t n);

// Deterministic FieldSpec: the modulus is the smallest monic irreducible of
// degree k, comparing coefficients from the constant term upward. For k = 1
// the modulus is x.
FieldSpec make_field(std::uint32_t p, std::uint32_t k);

// Brute-force irreducibility: no monic factor of degree 1..deg/2 divides.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

class FieldElem {
 public:
  FieldElem(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint32_t> coeffs);

  static FieldElem zero(std::shared_ptr<const FieldSpec> spec);
  static FieldElem one(std::shared_ptr<const FieldSpec> spec);
  static FieldElem from_index(std::shared_ptr<const FieldSpec> spec, std::uint32_t index);

  const FieldSpec& spec() const { return *spec_; }
  const std::shared_ptr<const FieldSpec>& spec_ptr() const { return spec_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  // Position in the canonical enumeration: sum_i coeffs[i] * p^i.
  std::uint32_t index() const;
  bool is_zero() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  std::shared_ptr<const FieldSpec> spec_;
  std::vector<std::uint32_t> coeffs_;
};

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem pow(const FieldElem& a, std::uint64_t e);
// a^(q-2); throws DivisionByZero for a = 0.
FieldElem inv(const FieldElem& a);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return sub(a, b); }
inline FieldElem operator-(const FieldElem& a) { return neg(a); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return mul(a, b); }

// a + a^p + ... + a^(p^(k-1)), as an integer in [0, p).
std::uint32_t absolute_trace(const FieldElem& a);

// All q elements; element i has index() == i, zero first.
std::vector<FieldElem> enumerate(std::shared_ptr<const FieldSpec> spec);

// Index-based arithmetic tables for hot loops (MOLS, MUB phases).
class FieldTables {
 public:
  explicit FieldTables(std::shared_ptr<const FieldSpec> spec);

  std::uint32_t order() const { return q_; }
  const FieldSpec& spec() const { return *spec_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }

 private:
  std::shared_ptr<const FieldSpec> spec_;
  std::uint32_t q_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> trace_;
};

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

struct PrimePower {
  std::uint32_t p;
  std::uint32_t k;
};

// (p, k) when n = p^k with k >= 1.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

}  // namespace cpoly
