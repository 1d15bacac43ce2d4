#include "amorph/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "amorph/errors.hpp"

namespace amorph {

namespace {

struct FieldSpec {
  int p;
  int e;
  std::vector<int> poly;  // monic, low degree first
};

const std::map<int, FieldSpec>& field_specs() {
  static const std::map<int, FieldSpec> specs = {
      {2, {2, 1, {}}},
      {3, {3, 1, {}}},
      {4, {2, 2, {1, 1, 1}}},        // x^2 + x + 1
      {5, {5, 1, {}}},
      {7, {7, 1, {}}},
      {8, {2, 3, {1, 1, 0, 1}}},     // x^3 + x + 1
      {9, {3, 2, {1, 0, 1}}},        // x^2 + 1
      {11, {11, 1, {}}},
      {13, {13, 1, {}}},
      {16, {2, 4, {1, 1, 0, 0, 1}}}, // x^4 + x + 1
      {25, {5, 2, {3, 0, 1}}},       // x^2 + 3
      {27, {3, 3, {1, 2, 0, 1}}},    // x^3 + 2x + 1
  };
  return specs;
}

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> c(e);
  for (int k = 0; k < e; ++k) {
    c[k] = a % p;
    a /= p;
  }
  return c;
}

int from_digits(const std::vector<int>& c, int p) {
  int a = 0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) a = a * p + c[k];
  return a;
}

}  // namespace

const std::vector<int>& SmallField::supported_orders() {
  static const std::vector<int> orders = [] {
    std::vector<int> out;
    for (const auto& [n, spec] : field_specs()) out.push_back(n);
    return out;
  }();
  return orders;
}

SmallField::SmallField(int order) : n_(order) {
  auto it = field_specs().find(order);
  if (it == field_specs().end()) throw FieldUnsupported("unsupported field order " + std::to_string(order));
  p_ = it->second.p;
  e_ = it->second.e;
  poly_ = it->second.poly;

  const std::size_t cells = static_cast<std::size_t>(n_) * n_;
  add_.resize(cells);
  mul_.resize(cells);
  for (int a = 0; a < n_; ++a) {
    const auto ca = digits(a, p_, e_);
    for (int b = 0; b < n_; ++b) {
      const auto cb = digits(b, p_, e_);
      std::vector<int> sum(e_);
      for (int k = 0; k < e_; ++k) sum[k] = (ca[k] + cb[k]) % p_;
      add_[a * n_ + b] = from_digits(sum, p_);

      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      }
      // Reduce modulo the monic polynomial, top degree down.
      for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        for (int k = 0; k <= e_; ++k) {
          int& slot = prod[deg - e_ + k];
          slot = ((slot - c * poly_[k]) % p_ + p_) % p_;
        }
      }
      prod.resize(e_);
      mul_[a * n_ + b] = from_digits(prod, p_);
    }
  }

  neg_.assign(n_, -1);
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  check_axioms();
  for (int g = 1; g < n_; ++g) {
    if (multiplicative_order(g) == n_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

int SmallField::inv(int a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

int SmallField::multiplicative_order(int a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  int x = a;
  int k = 1;
  while (x != 1) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

void SmallField::check_axioms() const {
  auto fail = [&](const std::string& what) {
    throw FieldUnsupported("GF(" + std::to_string(n_) + ") table fails " + what);
  };
  for (int a = 0; a < n_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
    if (neg_[a] < 0) fail("additive inverse");
    if (a != 0 && inv_[a] < 0) fail("multiplicative inverse");
    for (int b = 0; b < n_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (int c = 0; c < n_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

}  // namespace amorph
