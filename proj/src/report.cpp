#include "alphaidx/report.hpp"

#include <cmath>
#include <sstream>

namespace alphaidx {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
  }
  return "?";
}

InequalityReport compare(std::string name, double lhs, Relation rel, double rhs, double eps, Context context) {
  InequalityReport r;
  r.name = std::move(name);
  r.relation = rel;
  r.lhs = lhs;
  r.rhs = rhs;
  r.context = std::move(context);
  const bool wants_greater = rel == Relation::greater || rel == Relation::greater_equal;
  r.margin = wants_greater ? lhs - rhs : rhs - lhs;
  const bool strict = rel == Relation::greater || rel == Relation::less;
  if (std::isnan(r.margin)) {
    r.verdict = Verdict::fail;
  } else if (strict) {
    r.verdict = r.margin > eps ? Verdict::pass : (r.margin < -eps ? Verdict::fail : Verdict::indeterminate);
  } else {
    r.verdict = r.margin >= -eps ? Verdict::pass : Verdict::fail;
  }
  if (r.verdict == Verdict::pass && r.margin < eps && !strict) r.note = "margin below eps_strict";
  return r;
}

InequalityReport inapplicable(std::string name, std::string why, Context context) {
  InequalityReport r;
  r.name = std::move(name);
  r.verdict = Verdict::inapplicable;
  r.context = std::move(context);
  r.note = std::move(why);
  r.lhs = r.rhs = r.margin = std::nan("");
  return r;
}

namespace {

nlohmann::ordered_json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const InequalityReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["relation"] = to_string(r.relation);
  j["lhs"] = number_or_null(r.lhs);
  j["rhs"] = number_or_null(r.rhs);
  j["margin"] = number_or_null(r.margin);
  j["verdict"] = to_string(r.verdict);
  auto ctx = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.context) ctx[k] = number_or_null(v);
  j["context"] = ctx;
  if (!r.subject.empty()) j["subject"] = r.subject;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["parameters"] = r.parameters;
  j["instances_checked"] = r.instances_checked;
  j["instances_qualifying"] = r.instances_qualifying;
  auto v = nlohmann::ordered_json::array();
  for (const auto& rec : r.violations) {
    nlohmann::ordered_json e{{"kind", rec.kind},
                             {"graph6", rec.graph6},
                             {"lhs", number_or_null(rec.lhs)},
                             {"rhs", number_or_null(rec.rhs)},
                             {"margin", number_or_null(rec.margin)}};
    if (!rec.detail.empty()) e["detail"] = rec.detail;
    v.push_back(std::move(e));
  }
  j["violations"] = v;
  j["extremal_witness"] = r.extremal_witness ? nlohmann::ordered_json(*r.extremal_witness) : nlohmann::ordered_json(nullptr);
  j["min_margin"] = r.min_margin ? number_or_null(*r.min_margin) : nlohmann::ordered_json(nullptr);
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

std::string csv_header() { return "claim,parameters,instances_checked,violations,extremal_witness,min_margin,runtime_ms"; }

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  std::string params = r.parameters.dump();
  std::string quoted;
  for (char c : params) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  os << r.claim << ",\"" << quoted << "\"," << r.instances_checked << ',' << r.violations.size() << ',';
  // graph6 uses bytes 63..126, which include no comma or quote.
  if (r.extremal_witness) os << *r.extremal_witness;
  os << ',';
  if (r.min_margin) os << nlohmann::json(*r.min_margin).dump();
  os << ',' << r.runtime_ms;
  return os.str();
}

VerificationReport summarize(std::string claim, const std::vector<InequalityReport>& reports) {
  VerificationReport out;
  out.claim = std::move(claim);
  for (const auto& r : reports) {
    if (r.verdict == Verdict::inapplicable) continue;
    ++out.instances_checked;
    ++out.instances_qualifying;
    if (!out.min_margin || r.margin < *out.min_margin) out.min_margin = r.margin;
    if (r.verdict != Verdict::pass) {
      out.violations.push_back(ViolationRecord{r.verdict == Verdict::fail ? "violation" : "indeterminate", r.subject,
                                               r.lhs, r.rhs, r.margin, r.name});
    }
  }
  return out;
}

}  // namespace alphaidx
