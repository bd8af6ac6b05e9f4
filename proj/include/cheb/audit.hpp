#pragma once

#include <string>
#include <vector>

#include "cheb/expr.hpp"
#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

enum class Relation { kLe, kGe };

// How an item can be checked:
//  - kClosedForm: lhs is a closed-form constant; machine-decidable.
//  - kExternal:   the claim rests on a numeric value taken from external
//                 tables; recorded and echoed, marked "assumed".
//  - kAssembly:   the claim summarizes a multi-step regrouping with no single
//                 closed form at this granularity; recorded, "unverifiable".
enum class AuditKind { kClosedForm, kExternal, kAssembly };

enum class AuditStatus {
  kVerified,
  kRefuted,
  kUndecided,  // rendered as "undecided-at-precision"
  kAssumed,
  kUnverifiable,
};

// One audited inequality lhs <relation> rhs with an exact rational right side.
struct AuditItem {
  std::string id;
  ExprPtr lhs;
  Relation relation = Relation::kLe;
  Rational rhs;
  std::string anchor;  // the claim in formula form (or what it summarizes)
  AuditKind kind = AuditKind::kClosedForm;
  std::string note;    // extra context for external/assembly items
};

struct AuditReport {
  std::string id;
  AuditStatus status = AuditStatus::kUndecided;
  Interval lhs_enclosure;
  Rational rhs;
  // Signed margin by which the claimed relation holds: rhs - lhs for <=,
  // lhs - rhs for >=. Certainly nonnegative iff verified.
  Interval slack;
  std::string anchor;
  Prec decided_at = 0;  // precision at which the status was decided (0 = n/a)
  std::string note;
};

std::string status_name(AuditStatus s);

// The full built-in catalog, in a fixed order. Stable ids.
const std::vector<AuditItem>& audit_catalog();

// Lookup by id; throws NotFoundError.
const AuditItem& find_audit_item(const std::string& id);

// Evaluates one item at the given precision (>= 64). Closed-form items whose
// expression closes over rational arithmetic are decided exactly.
AuditReport run_audit_item(const AuditItem& item, Prec precision);

// Evaluates a batch at one precision; reports are sorted by id.
std::vector<AuditReport> run_audit(const std::vector<AuditItem>& items, Prec precision);

// Precision ladder 256 -> 512 -> 1024: each undecided item is retried at the
// next rung; decided_at records the deciding rung. Reports sorted by id.
std::vector<AuditReport> run_audit_ladder(const std::vector<AuditItem>& items);

// Renderers. CSV columns: id,status,lhs_lo,lhs_hi,rhs,slack_lo,slack_hi,anchor.
// JSON is a bare array of objects in the same order; text is aligned columns.
std::string render_audit_csv(const std::vector<AuditReport>& reports);
std::string render_audit_json(const std::vector<AuditReport>& reports);
std::string render_audit_text(const std::vector<AuditReport>& reports);

}  // namespace cheb
