#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "exchkit/atom.hpp"
#include "exchkit/pattern.hpp"
#include "exchkit/rational.hpp"

namespace exchkit {

/// Number of supported tuples an exact enumeration may touch before the
/// operation refuses with TooLargeToEnumerate. The exact layer is an
/// oracle, not a production sampler.
inline constexpr std::size_t kEnumerationGuard = 10'000'000;

void check_enumeration_guard(std::size_t base, std::size_t exponent);

/// Probability measure on k-tuples of atoms with exact rational weights.
///
/// Canonical form: no zero-weight entries, weights sum exactly to 1,
/// entries ordered lexicographically. Immutable after construction and
/// safe to share across threads.
class DiscreteMeasure {
public:
  using Support = std::map<Tuple, Rational>;

  /// Merges duplicate tuples and drops zero weights. Throws
  /// Error(MixedArity) when tuple lengths differ, Error(InvalidArgument)
  /// on a negative weight or empty tuple, Error(NonNormalized) when the
  /// total mass is not exactly 1.
  static DiscreteMeasure make(const std::vector<std::pair<Tuple, Rational>>& entries);

  static DiscreteMeasure dirac(Tuple point);

  /// Mixture sum_i weight_i * measure_i. Weights must be nonnegative and
  /// sum exactly to 1; arities must agree.
  static DiscreteMeasure mix(const std::vector<std::pair<Rational, DiscreteMeasure>>& parts);

  int arity() const { return arity_; }
  const Support& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  /// Weight of a tuple, 0 when unsupported.
  Rational weight(const Tuple& t) const;

  /// Marginal on the selected coordinates (in the given order).
  DiscreteMeasure marginal(std::span<const std::size_t> coords) const;

  /// Coordinate permutation: result tuple u with u[i] = t[perm[i]].
  DiscreteMeasure permute_coordinates(std::span<const std::size_t> perm) const;

  bool operator==(const DiscreteMeasure&) const = default;

  /// Total order so measures can key maps (arity, then support entries).
  friend bool operator<(const DiscreteMeasure& a, const DiscreteMeasure& b);

private:
  DiscreteMeasure(int arity, Support entries);

  int arity_ = 1;
  Support entries_;
};

/// L1 distance of the pmfs over the union of supports; range [0, 2].
/// This is the variation-norm convention, twice the statistical TV.
Rational tv_distance(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// k-fold product of an arity-1 measure with itself.
DiscreteMeasure tensor_power(const DiscreteMeasure& mu, int k);

/// Push-forward along a pattern: each supported j-tuple y maps to the
/// k-tuple (y_{p(0)}, ..., y_{p(k-1)}) with the same weight. Requires
/// mu.arity() == p.image_size().
DiscreteMeasure push_forward_pattern(const DiscreteMeasure& mu, const IndexPattern& p);

/// Product measure on concatenated coordinates.
DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b);

} // namespace exchkit
