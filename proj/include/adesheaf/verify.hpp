// verify.hpp
//
// Verification suites. Each check records what was claimed, where the
// expected value comes from, and what was computed. Informational checks
// are reported but never fail a suite.
#pragma once

#include <string>
#include <vector>

#include "adesheaf/io.hpp"

namespace ade {

enum class Origin { Literature, Computed, Trivial };
std::string origin_name(Origin o);

struct Check {
  std::string claim;
  std::string reference;  // short descriptive handle for the source of `expected`
  Json computed;
  Json expected;
  Origin origin = Origin::Computed;
  bool pass = false;
  bool informational = false;
  std::string note;
};

enum class Status { Pass, Fail, Partial };
std::string status_name(Status s);
/// 0 pass, 1 fail, 2 partial.
int exit_code(Status s);

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  bool partial = false;
  std::vector<std::string> notes;
  double runtime_seconds = 0;  // left out of to_json so reports stay byte-stable

  /// Fail iff some non-informational check fails; otherwise partial if
  /// flagged, else pass.
  Status status() const;
  std::size_t failures() const;
  /// Sorts the checks by claim, keeping insertion order among equal claims.
  void canonicalize();
};

Json to_json(const VerificationReport& report);

VerificationReport verify_unbounded_rank(int r_max);
/// Bounds above max_f = 5 or max_g = 4 are clamped and the report is marked
/// partial. Throws Unsupported for configurations other than D(n), E(n).
VerificationReport verify_rigid_bound(const CurveConfig& config, const EnumerationBounds& bounds, int workers = 1);
VerificationReport verify_tables();
VerificationReport verify_hom_engine();

/// All four suites; the rigid-bound suite runs on D4, D5, E6, E7, E8.
std::vector<VerificationReport> verify_all(int r_max = 6, int workers = 1);
Status combined_status(const std::vector<VerificationReport>& reports);

/// The rank-3 universal extension of O_{C4} by N41 + N32 + N23, moved onto
/// `config` along the D4 star (identity for D(n), 1,2,3,4 -> 2,4,3,5 for E(n)).
ExtPresentation rank3_example(const CurveConfig& config);

/// The D4 table poset and the E four-stage table poset used by the suites.
BundlePoset d4_table_poset();
BundlePoset e_four_stage_poset();

}  // namespace ade
