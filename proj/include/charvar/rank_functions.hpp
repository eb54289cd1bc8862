#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/ideal.hpp"
#include "charvar/module_rank.hpp"
#include "charvar/newton.hpp"
#include "charvar/slope.hpp"
#include "charvar/trace.hpp"

namespace charvar {

/// Coefficient field k (or its ring of integers) relative to the minimal
/// field of definition k0 of the component.
class FieldSpec {
 public:
  enum class Kind { Rationals, ContainsDefinitionField, SubfieldOfDefinitionField };

  /// Q, with index = [k0 : Q].
  static FieldSpec rationals(unsigned index);
  static FieldSpec contains_definition_field();
  /// k inside k0 with [k0 : k] = index.
  static FieldSpec subfield(unsigned index);
  /// Throws InputError if `field` already is a ring of integers.
  static FieldSpec ring_of_integers(const FieldSpec& field);

  Kind kind() const { return kind_; }
  bool is_ring_of_integers() const { return ring_; }
  /// [k0 : k], with 1 when k contains k0.
  unsigned index() const { return index_; }
  /// The field itself when this is a ring of integers.
  FieldSpec field() const;
  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, unsigned index, bool ring) : kind_(kind), index_(index), ring_(ring) {}
  Kind kind_;
  unsigned index_;
  bool ring_;
};

/// index * norm. Throws InputError when given a ring of integers.
std::uint64_t rank_over_field(std::uint64_t norm_value, const FieldSpec& field);
/// Same value as over the fraction field. Throws InputError unless `field` is
/// a ring of integers.
std::uint64_t rank_over_ring_of_integers(std::uint64_t norm_value, const FieldSpec& field);

/// rank_Q / norm. InconsistencyError when the norm does not divide the rank.
std::uint64_t fod_degree(std::uint64_t rank_Q, std::uint64_t norm_value);

struct FodCandidate {
  std::uint64_t degree;
  std::uint64_t norm;
  friend bool operator==(const FodCandidate&, const FodCandidate&) = default;
};

/// Divisors e of rank_Q with implied norm rank_Q / e >= min_norm; e = 1 is
/// dropped when exclude_trivial.
std::vector<FodCandidate> fod_candidates(std::uint64_t rank_Q, bool exclude_trivial, std::uint64_t min_norm = 1);

struct Assumption {
  enum class Status { Assumed, Verified, Violated };
  std::string statement;
  Status status = Status::Assumed;
};

std::string to_string(Assumption::Status s);

struct RankReport {
  enum class Path { EliminationOverQ, NormFromPolygon, ClosedFormula };

  Slope slope{1, 0};
  /// nullopt means Infinite.
  std::optional<std::uint64_t> rank;
  Path path = Path::EliminationOverQ;
  std::vector<Assumption> assumptions;
  /// Infinite in the curve case: the slope is strongly detected.
  bool detected = false;
  std::optional<Poly> non_integral;
  /// The trace function used as f, when elimination ran.
  std::optional<Poly> trace;

  bool is_finite() const { return rank.has_value(); }
};

std::string to_string(RankReport::Path p);

/// Rank of the coordinate ring over Q[f] for f = I_alpha, the trace of
/// mu^p lambda^q embedded in the ideal's variables (which must include x, y,
/// z). Requires Krull dimension 1. When `polygon` is given, the
/// non-boundary-slope hypothesis is checked against it.
RankReport classify_slope(const Ideal& I, const PeripheralSystem& ps, const Slope& alpha,
                          const RankOptions& options = {}, const NewtonPolygon* polygon = nullptr);

/// As above with the trace function supplied directly.
RankReport classify_slope(const Ideal& I, const Poly& trace, const Slope& alpha, const RankOptions& options = {},
                          const NewtonPolygon* polygon = nullptr);

/// [k0 : k] * ||alpha|| from the polygon.
RankReport formula_rank(const NewtonPolygon& P, const Slope& alpha, const FieldSpec& field);

struct CrossValidation {
  struct Entry {
    RankReport report;
    std::int64_t norm;
    std::optional<std::uint64_t> quotient;
  };
  /// Ordered by canonical slope.
  std::vector<Entry> entries;
  /// Common value of rank / norm over the finite slopes, i.e. [k0 : Q].
  std::optional<std::uint64_t> degree;
  bool consistent = true;
  std::string message;
  /// True when every sampled slope came out Infinite (a closed essential
  /// surface may be detected); not a proof.
  bool all_sampled_infinite = false;
};

/// Compares elimination ranks with polygon norms slope by slope. Slopes are
/// evaluated concurrently when options.limits.threads > 1.
CrossValidation cross_validate(const Ideal& I, const PeripheralSystem& ps, const NewtonPolygon& P,
                               std::vector<Slope> slopes, const RankOptions& options = {});

}  // namespace charvar
