#pragma once

#include <utility>
#include <vector>

#include "selman/observer.hpp"
#include "selman/report.hpp"

namespace selman {

/// Carrier subset as a sorted vector of point indices.
using Subset = std::vector<size_t>;

Subset full_subset(size_t carrier_size);
Subset subset_intersect(const Subset& a, const Subset& b);
Subset subset_union(const Subset& a, const Subset& b);
Subset subset_complement(const Subset& a, size_t carrier_size);
bool subset_contains(const Subset& a, size_t point);
bool subset_includes(const Subset& outer, const Subset& inner);
std::string format_subset(const Carrier& carrier, const Subset& s);

using BoundsPair = std::pair<ConstantObserver, ConstantObserver>;

/// Family of observers dominated by mu, holding mu and the zero observer and
/// closed under pairwise inf and sup (the finite reading of axioms a1-a3).
/// Members are kept canonically sorted on their exact value tables.
class MuTopology {
 public:
  MuTopology(Observer mu, std::vector<Observer> members);

  const Observer& mu() const { return mu_; }
  const std::vector<Observer>& members() const { return members_; }
  bool contains_exact(const Observer& o) const;

 private:
  Observer mu_;
  std::vector<Observer> members_;
};

/// Smallest superset of family + {zero, mu} closed under pairwise inf/sup.
/// The generated value lattice is finite, so the fixpoint terminates.
/// Raises NotDominated when a family member exceeds mu.
MuTopology generate_mu_topology(const Observer& mu,
                                const std::vector<Observer>& family,
                                const TolerancePolicy& tol = {});

/// Per-axiom report: a1 (mu and zero present), a2 (pairwise inf closed),
/// a3 (pairwise sup closed; equivalent to arbitrary subfamily joins on a
/// finite set), plus the domination premise. Failures carry witnesses.
Report validate_mu_axioms(const MuTopology& t, const TolerancePolicy& tol = {});

/// Points where r_j + eq_tol < lam_j(x) < s_j - eq_tol in every coordinate.
/// Raises BoundsNotOrdered unless r < s coordinatewise.
Subset level_preimage(const Observer& lam, const ConstantObserver& r,
                      const ConstantObserver& s, const TolerancePolicy& tol = {});

/// Point-set topology on the carrier: contains the empty set and the
/// carrier, closed under finite intersection and union.
class PointTopology {
 public:
  PointTopology(CarrierPtr carrier, std::vector<Subset> sets);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<Subset>& sets() const { return sets_; }
  bool contains(const Subset& s) const;

  Report validate() const;

 private:
  CarrierPtr carrier_;
  std::vector<Subset> sets_;  // sorted
};

/// Topology generated by the level preimages of the members of t over the
/// given bounds: close the subbasis under intersection, then union, then
/// adjoin the empty set and the carrier.
PointTopology generate_level_topology(const MuTopology& t,
                                      const std::vector<BoundsPair>& bounds,
                                      const TolerancePolicy& tol = {});

/// One produced chart domain with its decomposition U = U1 n mu^-1(r, s).
struct KEntry {
  Subset domain;
  Subset u1;
  ConstantObserver lower, upper;
};

struct BuildKResult {
  std::vector<KEntry> entries;   // deduplicated by domain, first provenance kept
  size_t discarded_empty = 0;    // empty intersections are dropped but counted
};

/// All intersections U1 n level_preimage(mu, r, s). Raises EmptyK1 when k1
/// is empty and BoundsNotOrdered on unordered pairs.
BuildKResult build_K(const std::vector<Subset>& k1, const Observer& mu,
                     const std::vector<BoundsPair>& bounds,
                     const TolerancePolicy& tol = {});

}  // namespace selman
