#include "charvar/rank_functions.hpp"

#include <algorithm>
#include <future>

#include "charvar/groebner.hpp"

namespace charvar {

FieldSpec FieldSpec::rationals(unsigned index) {
  if (index == 0) throw InputError("field index must be positive");
  return FieldSpec(Kind::Rationals, index, false);
}

FieldSpec FieldSpec::contains_definition_field() { return FieldSpec(Kind::ContainsDefinitionField, 1, false); }

FieldSpec FieldSpec::subfield(unsigned index) {
  if (index == 0) throw InputError("field index must be positive");
  return FieldSpec(Kind::SubfieldOfDefinitionField, index, false);
}

FieldSpec FieldSpec::ring_of_integers(const FieldSpec& field) {
  if (field.ring_) throw InputError("already a ring of integers");
  FieldSpec out = field;
  out.ring_ = true;
  return out;
}

FieldSpec FieldSpec::field() const {
  FieldSpec out = *this;
  out.ring_ = false;
  return out;
}

std::string FieldSpec::describe() const {
  std::string base;
  switch (kind_) {
    case Kind::Rationals: base = "Q with [k0:Q] = " + std::to_string(index_); break;
    case Kind::ContainsDefinitionField: base = "field containing k0"; break;
    case Kind::SubfieldOfDefinitionField: base = "subfield k with [k0:k] = " + std::to_string(index_); break;
  }
  return ring_ ? "ring of integers of " + base : base;
}

std::uint64_t rank_over_field(std::uint64_t norm_value, const FieldSpec& field) {
  if (field.is_ring_of_integers()) throw InputError("rank_over_field expects a field");
  return field.index() * norm_value;
}

std::uint64_t rank_over_ring_of_integers(std::uint64_t norm_value, const FieldSpec& field) {
  if (!field.is_ring_of_integers()) throw InputError("rank_over_ring_of_integers expects a ring of integers");
  // Clearing denominators: a basis over the fraction field rescales to one
  // over the ring.
  return rank_over_field(norm_value, field.field());
}

std::uint64_t fod_degree(std::uint64_t rank_Q, std::uint64_t norm_value) {
  if (rank_Q == 0 || norm_value == 0) throw InputError("rank and norm must be positive");
  if (rank_Q % norm_value != 0)
    throw InconsistencyError("norm " + std::to_string(norm_value) + " does not divide rank " + std::to_string(rank_Q));
  return rank_Q / norm_value;
}

std::vector<FodCandidate> fod_candidates(std::uint64_t rank_Q, bool exclude_trivial, std::uint64_t min_norm) {
  if (rank_Q == 0) throw InputError("rank must be positive");
  std::vector<FodCandidate> out;
  for (std::uint64_t e = 1; e <= rank_Q; ++e) {
    if (rank_Q % e != 0 || (exclude_trivial && e == 1) || rank_Q / e < min_norm) continue;
    out.push_back({e, rank_Q / e});
  }
  return out;
}

std::string to_string(Assumption::Status s) {
  switch (s) {
    case Assumption::Status::Assumed: return "assumed";
    case Assumption::Status::Verified: return "verified";
    case Assumption::Status::Violated: return "violated";
  }
  return "";
}

std::string to_string(RankReport::Path p) {
  switch (p) {
    case RankReport::Path::EliminationOverQ: return "elimination over Q";
    case RankReport::Path::NormFromPolygon: return "norm from polygon";
    case RankReport::Path::ClosedFormula: return "closed formula";
  }
  return "";
}

namespace {

Assumption boundary_assumption(const Slope& alpha, const NewtonPolygon* polygon) {
  Assumption a{"slope " + alpha.to_string() + " is not a boundary slope", Assumption::Status::Assumed};
  if (polygon && !polygon->is_point()) {
    auto slopes = boundary_slopes(*polygon);
    a.status = std::find(slopes.begin(), slopes.end(), alpha) == slopes.end() ? Assumption::Status::Verified
                                                                              : Assumption::Status::Violated;
  }
  return a;
}

Assumption surface_assumption() {
  return {"the component does not detect a closed essential surface", Assumption::Status::Assumed};
}

}  // namespace

RankReport classify_slope(const Ideal& I, const Poly& trace, const Slope& alpha, const RankOptions& options,
                          const NewtonPolygon* polygon) {
  const unsigned dim = krull_dimension(I, options.limits);
  if (dim != 1)
    throw InputError("classify_slope needs a curve; the ideal has Krull dimension " + std::to_string(dim));
  RankReport report;
  report.slope = alpha;
  report.path = RankReport::Path::EliminationOverQ;
  report.trace = embed(trace, I.variables());
  const RankResult r = module_rank(I, *report.trace, options);
  if (r.rank) {
    report.rank = *r.rank;
    report.assumptions = {boundary_assumption(alpha, polygon), surface_assumption()};
  } else {
    report.detected = true;
    report.non_integral = r.non_integral;
  }
  return report;
}

RankReport classify_slope(const Ideal& I, const PeripheralSystem& ps, const Slope& alpha, const RankOptions& options,
                          const NewtonPolygon* polygon) {
  for (const auto& v : trace_variables())
    if (!I.variables().index_of(v))
      throw InputError("ideal variables [" + join(I.variables()) + "] must include the trace coordinates x, y, z");
  return classify_slope(I, slope_trace(ps, alpha), alpha, options, polygon);
}

RankReport formula_rank(const NewtonPolygon& P, const Slope& alpha, const FieldSpec& field) {
  RankReport report;
  report.slope = alpha;
  report.path = RankReport::Path::ClosedFormula;
  const auto norm = static_cast<std::uint64_t>(cs_norm(P, alpha));
  report.rank = field.is_ring_of_integers() ? rank_over_ring_of_integers(norm, field) : rank_over_field(norm, field);
  report.assumptions = {boundary_assumption(alpha, &P), surface_assumption(),
                        {"coefficients in " + field.describe(), Assumption::Status::Assumed}};
  return report;
}

CrossValidation cross_validate(const Ideal& I, const PeripheralSystem& ps, const NewtonPolygon& P,
                               std::vector<Slope> slopes, const RankOptions& options) {
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  CrossValidation out;
  if (slopes.empty()) return out;

  std::vector<RankReport> reports(slopes.size());
  if (options.limits.threads > 1) {
    RankOptions inner = options;
    inner.limits.threads = 1;
    std::vector<std::future<RankReport>> jobs;
    for (const auto& s : slopes)
      jobs.push_back(std::async(std::launch::async, [&, s] { return classify_slope(I, ps, s, inner, &P); }));
    for (std::size_t k = 0; k < jobs.size(); ++k) reports[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < slopes.size(); ++k) reports[k] = classify_slope(I, ps, slopes[k], options, &P);
  }

  out.all_sampled_infinite = true;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    CrossValidation::Entry entry{std::move(reports[k]), cs_norm(P, slopes[k]), std::nullopt};
    if (entry.report.rank) {
      out.all_sampled_infinite = false;
      const auto norm = static_cast<std::uint64_t>(entry.norm);
      if (norm == 0 || *entry.report.rank % norm != 0) {
        if (out.consistent)
          out.message = "norm " + std::to_string(norm) + " does not divide rank " +
                        std::to_string(*entry.report.rank) + " at slope " + entry.report.slope.to_string();
        out.consistent = false;
      } else {
        entry.quotient = *entry.report.rank / norm;
        if (!out.degree) {
          out.degree = entry.quotient;
        } else if (*out.degree != *entry.quotient && out.consistent) {
          out.consistent = false;
          out.message = "rank/norm is " + std::to_string(*out.degree) + " at one slope and " +
                        std::to_string(*entry.quotient) + " at slope " + entry.report.slope.to_string();
        }
      }
    }
    out.entries.push_back(std::move(entry));
  }
  if (!out.consistent) out.degree.reset();
  return out;
}

}  // namespace charvar
