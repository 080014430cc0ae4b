#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "autlab/subgroups.hpp"

namespace autlab {

/// Result of a property decision: the verdict plus the witness that decides
/// it (the offending subgroup or element when the verdict is negative, or
/// occasionally the certifying one). False verdicts always carry a witness.
struct Finding {
  bool value = false;
  std::optional<Subgroup> witness;
  std::optional<elem_t> witness_element;
  std::string detail;

  explicit operator bool() const { return value; }
};

Finding is_abelian(const GroupPtr& g);
bool is_prime_power_order(const GroupPtr& g);
bool is_prime_power_order(const Subgroup& h);
Finding is_nilpotent(const GroupPtr& g);
Finding is_solvable(const GroupPtr& g);
Finding is_supersolvable(const GroupPtr& g, const SubgroupLattice& lattice);
Finding is_a_group(const GroupPtr& g, const SubgroupLattice& lattice);
Finding is_cp(const GroupPtr& g);
Finding is_sbp(const GroupPtr& g, const SubgroupLattice& lattice);

/// N = C for every abelian subgroup (equivalent to abelian).
Finding is_nc(const GroupPtr& g, const SubgroupLattice& lattice);
/// Every non-normal abelian subgroup has N = C.
Finding is_quasi_nc(const GroupPtr& g, const SubgroupLattice& lattice);
/// Every non-normal abelian subgroup A has N = C or C = A.
Finding is_nnc(const GroupPtr& g, const SubgroupLattice& lattice);
/// N = C for every abelian subgroup of non-prime-power order.
Finding is_pnc(const GroupPtr& g, const SubgroupLattice& lattice);

Finding is_minimal_non_nilpotent(const GroupPtr& g, const SubgroupLattice& lattice);

/// For abelian h this is N = C; for non-abelian h it compares N/C with
/// h / Z(h) up to isomorphism.
Finding has_small_automizer(const GroupPtr& g, const Subgroup& h,
                            const Caps& caps = {});
/// Compares N/C with the full automorphism group of h up to isomorphism.
Finding has_large_automizer(const GroupPtr& g, const Subgroup& h,
                            const Caps& caps = {});

/// h is a central extension of g by center_sub (center_sub must be central
/// in h) whose full center has prime power order.
Finding is_p_central_extension(const GroupPtr& h, const Subgroup& center_sub,
                               const GroupPtr& g, const Caps& caps = {});

/// All group-level properties of one group, keyed by property name.
struct PropertyReport {
  std::string group_name;
  int order = 0;
  std::map<std::string, Finding> properties;

  nlohmann::json to_json() const;  // stable: keys sorted
};

/// Computes the lattice once and evaluates every (or a filtered subset of)
/// group-level predicate. `filter` holds property names; empty = all.
PropertyReport property_report(const GroupPtr& g, const Caps& caps = {},
                               const std::vector<std::string>& filter = {});
std::vector<std::string> property_names();

}  // namespace autlab
