#pragma once

#include <string>
#include <vector>

#include "genusone/graph.hpp"
#include "genusone/stability.hpp"

namespace genusone {

enum class RewriteKind { BlowUp, ContractCore, StabilizeContract };
std::string to_string(RewriteKind kind);

struct RewriteStep {
  RewriteKind kind;
  std::vector<std::string> affected;  // moved marks or removed vertices
  int level_before = 0;
  int level_after = 0;
  int elliptic_before = 0;  // multiplicity, 0 when nodal
  int elliptic_after = 0;
  DualGraph before;
  DualGraph after;
};

enum class TerminationCause { AlreadyNonconstant, MapNonconstantOnCore, LevelExceedsM };
std::string to_string(TerminationCause cause);

struct ReductionTrace {
  DualGraph initial;
  std::vector<RewriteStep> steps;
  DualGraph final;
  TerminationCause cause = TerminationCause::AlreadyNonconstant;
};

/// Each mark on a core vertex moves to a fresh exceptional genus-0 degree-0
/// vertex attached by a new edge.
DualGraph blow_up_core_marks(const DualGraph& g);

/// Replaces the (unmarked, degree-0) core by an elliptic point whose branches
/// are the former neighbors of the core.
DualGraph contract_core(const DualGraph& g);

/// Contracts non-core degree-0 genus-0 vertices with exactly two
/// distinguished points until none remain. Deterministic id order; the
/// fixpoint is order-independent.
DualGraph stabilize(const DualGraph& g);

/// The m-stable reduction sequence: alternate blow-up and contraction while
/// the map is constant on the core and the level is at most m, then
/// stabilize. Input must be nodal and minimal (every contracted genus-0
/// vertex has at least two distinguished points).
ReductionTrace reduce(const DualGraph& g, const StabilityParams& params);

}  // namespace genusone
