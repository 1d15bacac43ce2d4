#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amorph/partition.hpp"
#include "amorph/scheme.hpp"

namespace amorph {

/// Partition of the n + 1 slopes of the affine plane over GF(n) into d
/// nonempty groups. Slopes are named by field-element index 0..n-1; the
/// vertical slope (infinity) is n.
class SlopeGrouping {
 public:
  /// Throws std::invalid_argument unless the groups partition {0..n}.
  SlopeGrouping(int n, std::vector<IndexSet> groups);

  /// n + 1 singleton groups.
  static SlopeGrouping singletons(int n);
  /// Consecutive slopes in groups of the given sizes (summing to n + 1).
  static SlopeGrouping sized(int n, const std::vector<int>& sizes);
  /// "0,1|2|3" with "inf" or n for the vertical slope.
  static SlopeGrouping parse(std::string_view text, int n);

  int n() const { return n_; }
  int d() const { return static_cast<int>(groups_.size()); }
  const std::vector<IndexSet>& groups() const { return groups_; }
  /// Class (1..d) of a slope.
  int class_of(int slope) const { return class_of_[slope]; }

 private:
  int n_;
  std::vector<IndexSet> groups_;
  std::vector<int> class_of_;
};

/// Points (x, y) of GF(n)^2 with index x * n + y; two points are in class i
/// when the slope of their line lies in group i. Throws FieldUnsupported.
AssociationScheme gen_net_scheme(int n, const SlopeGrouping& grouping);

struct CyclotomicSpec {
  int q = 0;
  int d = 0;
  /// Primitive element (field index); the field's smallest one when empty.
  std::optional<int> generator;
};

/// Points are field elements; x, y are in class i when x - y lies in the
/// coset g^(i-1) H of the index-d subgroup H. Throws FieldUnsupported,
/// PreconditionFailed (d does not divide q - 1, generator not primitive) or
/// NotSymmetric (-1 outside H).
AssociationScheme gen_cyclotomic(const CyclotomicSpec& spec);

/// Binary Hamming scheme H(m, 2), 1 <= m <= 10. Throws LimitExceeded.
AssociationScheme gen_hamming_binary(int m);

/// One-class scheme on v >= 2 points. Throws PreconditionFailed for v < 2.
AssociationScheme gen_complete(int v);

struct CorpusEntry {
  std::string name;
  AssociationScheme scheme;
};

/// The desk-scale corpus shipped under corpus/, in file-name order.
std::vector<CorpusEntry> standard_corpus();

}  // namespace amorph
