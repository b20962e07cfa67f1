#include "doctest.h"

#include <set>

#include "cpoly/error.hpp"
#include "cpoly/finite_field.hpp"
#include "cpoly/json_io.hpp"
#include "cpoly/mub.hpp"
#include "support.hpp"

using namespace cpoly;

namespace {

Complex ip(const StateVector& a, const StateVector& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// Independent overlap scan: max ||<e|f>|^2 - 1/n| over distinct bases.
double worst_unbiasedness(const MubSet& set, std::size_t& pairs) {
  double worst = 0.0;
  pairs = 0;
  for (std::size_t a = 0; a < set.bases.size(); ++a)
    for (std::size_t b = a + 1; b < set.bases.size(); ++b)
      for (const auto& e : set.bases[a].vectors)
        for (const auto& f : set.bases[b].vectors) {
          worst = std::max(worst, std::abs(std::norm(ip(e, f)) - 1.0 / set.n));
          ++pairs;
        }
  return worst;
}

// Clock Z|m> = w^m |m>, shift X|m> = |m+1>.
ComplexMatrix shift_clock(std::size_t p, std::size_t x_power, std::size_t z_power) {
  const double two_pi = 2.0 * std::acos(-1.0);
  ComplexMatrix m(p);
  for (std::size_t col = 0; col < p; ++col) {
    const std::size_t row = (col + x_power) % p;
    m(row, col) = std::polar(1.0, two_pi * static_cast<double>((z_power * col) % p) / static_cast<double>(p));
  }
  return m;
}

bool is_eigenbasis(const Basis& basis, const ComplexMatrix& w) {
  for (const auto& v : basis.vectors) {
    const auto wv = testing::apply(w, v);
    const Complex lambda = ip(v, wv);
    double res = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) res += std::norm(wv[i] - lambda * v[i]);
    if (std::sqrt(res) > 1e-10) return false;
  }
  return true;
}

MubSet conjugate(const MubSet& set, const ComplexMatrix& u) {
  MubSet out{set.n, {}};
  for (const auto& b : set.bases) {
    Basis nb;
    for (const auto& v : b.vectors) nb.vectors.push_back(testing::apply(u, v));
    out.bases.push_back(std::move(nb));
  }
  return out;
}

const std::vector<std::size_t> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32};

}  // namespace

TEST_CASE("complete sets for prime powers are unbiased") {
  for (std::size_t n : kPrimePowers) {
    CAPTURE(n);
    const MubSet set = build_complete(n);
    REQUIRE(set.bases.size() == n + 1);
    CHECK(set.complete());
    const auto report = verify_mub(set, 1e-10);
    CHECK(report.pass);
    std::size_t pairs = 0;
    const double worst = worst_unbiasedness(set, pairs);
    CHECK(worst < 1e-12);
    CHECK(std::abs(report.max_unbiasedness_violation - worst) < 1e-14);
    CHECK(report.cross_pairs_checked == pairs);
    for (std::size_t a = 0; a <= n; ++a) {
      REQUIRE(set.bases[a].vectors.size() == n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(std::abs(ip(set.bases[a].vectors[i], set.bases[a].vectors[j]) - Complex(i == j)) < 1e-12);
    }
  }
}

TEST_CASE("overlap counts at n = 3 and n = 9") {
  std::size_t pairs = 0;
  CHECK(worst_unbiasedness(build_complete(3), pairs) < 1e-12);
  // 54 unordered cross pairs, 108 ordered.
  CHECK(2 * pairs == 108);
  CHECK(verify_mub(build_complete(3), 1e-10).cross_pairs_checked == 54);
  CHECK(worst_unbiasedness(build_complete(9), pairs) < 1e-12);
  CHECK(pairs == 45 * 81);
  CHECK(verify_mub(build_complete(9), 1e-10).cross_pairs_checked == 3645);
}

TEST_CASE("n = 2 gives the Pauli eigenbases") {
  const MubSet set = build_complete(2);
  const Complex i(0.0, 1.0);
  const ComplexMatrix sx(2, {0, 1, 1, 0}), sy(2, {0, -i, i, 0}), sz(2, {1, 0, 0, -1});
  std::set<int> matched;
  for (const auto& b : set.bases) {
    int which = -1;
    if (is_eigenbasis(b, sz)) which = 0;
    if (is_eigenbasis(b, sx)) which = 1;
    if (is_eigenbasis(b, sy)) which = 2;
    CHECK(which >= 0);
    matched.insert(which);
  }
  CHECK(matched.size() == 3);
}

TEST_CASE("prime n matches the shift and clock eigenbases") {
  for (std::size_t p : {3u, 5u, 7u, 11u}) {
    CAPTURE(p);
    const MubSet set = build_complete(p);
    std::set<std::size_t> used;
    for (const auto& basis : set.bases) {
      std::vector<std::size_t> hits;
      if (is_eigenbasis(basis, shift_clock(p, 0, 1))) hits.push_back(p);
      for (std::size_t c = 0; c < p; ++c)
        if (is_eigenbasis(basis, shift_clock(p, 1, c))) hits.push_back(c);
      REQUIRE(hits.size() == 1);
      used.insert(hits.front());
    }
    CHECK(used.size() == p + 1);
  }
}

TEST_CASE("phase convention: first nonzero component is real positive") {
  for (std::size_t n : kPrimePowers) {
    const MubSet set = build_complete(n);
    for (const auto& b : set.bases)
      for (const auto& v : b.vectors) {
        std::size_t i = 0;
        while (std::abs(v[i]) < 1e-12) ++i;
        CHECK(v[i].real() > 0.0);
        CHECK(std::abs(v[i].imag()) < 1e-15);
      }
  }
}

TEST_CASE("projector identities") {
  for (std::size_t n : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const auto groups = projectors(build_complete(n));
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = 0; b < groups.size(); ++b)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const double t = trace_product(groups[a][i], groups[b][j]).real();
            const double expect = a == b ? (i == j ? 1.0 : 0.0) : 1.0 / n;
            CHECK(std::abs(t - expect) < 1e-10);
          }
  }
}

TEST_CASE("non-prime-power dimensions are refused") {
  try {
    build_complete(6);
    FAIL("expected an exception");
  } catch (const UnsupportedDimension& e) {
    CHECK(std::string(e.what()).find("6 = 2·3 is not a prime power") != std::string::npos);
  }
  CHECK_THROWS_AS(build_complete(10), UnsupportedDimension);
  CHECK_THROWS_AS(build_complete(12), UnsupportedDimension);
  CHECK(factorization_string(12) == "12 = 2^2·3");
}

TEST_CASE("verify_mub failures") {
  MubSet dup = build_complete(3);
  dup.bases[1] = dup.bases[0];
  const auto r = verify_mub(dup, 1e-10);
  CHECK_FALSE(r.pass);
  CHECK(std::abs(r.max_unbiasedness_violation - (1.0 - 1.0 / 3.0)) < 1e-12);
  CHECK(r.witness[0] != r.witness[2]);

  MubSet ragged = build_complete(3);
  ragged.bases[2].vectors[1].pop_back();
  CHECK_THROWS_AS(verify_mub(ragged, 1e-10), InvalidInput);

  MubSet skew = build_complete(2);
  skew.bases[1].vectors[0][0] *= 1.01;
  const auto s = verify_mub(skew, 1e-10);
  CHECK_FALSE(s.pass);
  CHECK(s.max_orthonormality_violation > 1e-3);
}

TEST_CASE("verdict is invariant under a common unitary") {
  for (std::size_t n : {3u, 4u}) {
    for (int t = 0; t < 5; ++t) {
      const ComplexMatrix u = testing::random_unitary(n);
      CHECK(verify_mub(conjugate(build_complete(n), u), 1e-10).pass);
      MubSet bad = build_complete(n);
      bad.bases.back() = bad.bases.front();
      CHECK_FALSE(verify_mub(conjugate(bad, u), 1e-10).pass);
    }
  }
}

TEST_CASE("lower bounds") {
  CHECK(mub_lower_bound(6) == 3);
  CHECK(mub_lower_bound(12) == 4);
  CHECK(mub_lower_bound(7) == 8);
  CHECK(mub_lower_bound(10) == 3);
  CHECK(mub_lower_bound(20) == 5);
  for (std::size_t n : kPrimePowers) CHECK(mub_lower_bound(n) == n + 1);
}

TEST_CASE("serialization is deterministic and round-trips") {
  for (std::size_t n : {2u, 4u, 5u, 8u}) {
    const std::string a = mub_set_to_json(build_complete(n)).dump();
    const std::string b = mub_set_to_json(build_complete(n)).dump();
    CHECK(a == b);
    const MubSet back = mub_set_from_json(Json::parse(a));
    CHECK(verify_mub(back, 1e-10).pass);
    CHECK(mub_set_to_json(back).dump() == a);
  }
}
