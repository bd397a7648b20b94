#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace alphaidx {

inline constexpr double kEpsilonStrict = 1e-9;

enum class Verdict { pass, fail, indeterminate, inapplicable };

/// Direction of a claimed inequality lhs REL rhs.
enum class Relation { less, less_equal, greater, greater_equal };

const char* to_string(Verdict v);
const char* to_string(Relation r);

using Context = std::vector<std::pair<std::string, double>>;

struct InequalityReport {
  std::string name;
  Relation relation = Relation::greater;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Signed slack in the claimed direction: positive means the claim holds.
  double margin = 0.0;
  Verdict verdict = Verdict::pass;
  Context context;
  std::string subject;  // graph6 of the instance, when there is one
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Strict relations pass only with margin > eps and are indeterminate for
/// |margin| <= eps. Non-strict ones pass for margin >= -eps.
InequalityReport compare(std::string name, double lhs, Relation rel, double rhs,
                         double eps = kEpsilonStrict, Context context = {});

InequalityReport inapplicable(std::string name, std::string why, Context context = {});

struct ViolationRecord {
  std::string kind;  // "violation" | "indeterminate" | "non-unique-extremal"
  std::string graph6;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string detail;  // which inequality, for suite reports
};

struct VerificationReport {
  std::string claim;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::int64_t instances_checked = 0;
  std::int64_t instances_qualifying = 0;
  std::vector<ViolationRecord> violations;
  std::optional<std::string> extremal_witness;
  std::optional<double> min_margin;
  std::int64_t runtime_ms = 0;

  bool verified() const { return violations.empty(); }
};

nlohmann::ordered_json to_json(const InequalityReport& r);
nlohmann::ordered_json to_json(const VerificationReport& r);

/// "claim,parameters,instances_checked,violations,extremal_witness,min_margin,runtime_ms"
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);

/// Folds inequality reports into one VerificationReport (used by the lemma
/// suites); non-passing non-inapplicable reports become violations.
VerificationReport summarize(std::string claim, const std::vector<InequalityReport>& reports);

}  // namespace alphaidx
