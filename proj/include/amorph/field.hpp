#pragma once

#include <vector>

namespace amorph {

/// GF(n) for n in {2,3,4,5,7,8,9,11,13,16,25,27}.
///
/// Elements are indices 0..n-1: the polynomial c_0 + c_1 x + ... over GF(p)
/// has index c_0 + c_1 p + ... . Index 0 is zero and 1 is one; for prime n
/// the index is the residue itself.
class SmallField {
 public:
  /// Builds the tables and checks the field axioms. Throws FieldUnsupported.
  explicit SmallField(int order);

  static const std::vector<int>& supported_orders();

  int order() const { return n_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  /// Coefficients c_0..c_e of the monic irreducible polynomial (e > 1), else empty.
  const std::vector<int>& irreducible() const { return poly_; }

  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for a = 0.
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }

  /// Smallest element of multiplicative order n - 1.
  int primitive_element() const { return primitive_; }
  int multiplicative_order(int a) const;

 private:
  void check_axioms() const;

  int n_;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> poly_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
  int primitive_ = 0;
};

}  // namespace amorph
