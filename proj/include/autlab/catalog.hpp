#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "autlab/group.hpp"

namespace autlab {

// -- Named families ---------------------------------------------------------

GroupPtr cyclic(int n);
GroupPtr dihedral(int n);                      // order 2n, n >= 1
GroupPtr symmetric(int n, const Caps& caps = {});    // n <= 5
GroupPtr alternating(int n, const Caps& caps = {});  // n <= 5
GroupPtr generalized_quaternion(int order);    // order = 2^k, 8 <= order <= 32
GroupPtr elementary_abelian(int p, int a);

/// Multiplicative order of p modulo q (least a >= 1 with p^a = 1 mod q).
int exp_order(int p, int q);

/// The split extension of an elementary abelian group of rank exp_order(p,q)
/// over p by a cyclic group of order q acting through an automorphism of
/// order q (the lexicographically smallest one, for reproducibility).
/// Requires exp_order(p,q) >= 2; every proper subgroup of the result has
/// prime power order.
GroupPtr sbp_type_iii(int p, int q, const Caps& caps = {});

/// Kernel (a p-group) extended by a cyclic group of order q acting through
/// `action_auto`, an automorphism of the kernel whose order divides q.
GroupPtr minimal_non_nilpotent_family(const GroupPtr& kernel_p_group, int q,
                                      const std::vector<elem_t>& action_auto,
                                      const Caps& caps = {});
/// Deterministically picks an order-q automorphism of g, if one exists.
std::optional<std::vector<elem_t>> automorphism_of_order(const GroupPtr& g, int q,
                                                         const Caps& caps = {});

// -- Catalog ----------------------------------------------------------------

/// One named test group. `tags` are expectations ("pnc", "!cp", ...) that the
/// verification harness cross-checks against computed values.
struct CatalogEntry {
  std::string name;
  nlohmann::json construction;
  GroupPtr group;
  std::vector<std::string> tags;  // kept sorted
};

using Catalog = std::vector<CatalogEntry>;

/// The built-in test corpus: cyclic groups to order 24, dihedral groups to
/// order 64, small symmetric/alternating/quaternion/elementary-abelian
/// groups, every group of order <= 15, and the named product and split
/// extension examples the verifiers need.
Catalog default_catalog(const Caps& caps = {});

const CatalogEntry* find_entry(const Catalog& catalog, const std::string& name);

void save_catalog(const Catalog& entries, const std::string& path);
Catalog load_catalog(const std::string& path, const Caps& caps = {});

nlohmann::json group_to_json(const Group& g);
GroupPtr group_from_json(const nlohmann::json& j, const Caps& caps = {});

}  // namespace autlab
