#pragma once

#include <utility>
#include <vector>

#include "autlab/dyn_bitset.hpp"
#include "autlab/group.hpp"

namespace autlab {

/// A subset of a parent group's elements, closed under the parent's
/// operation. Value object; the parent is held by pointer identity and
/// operations across different parents are ParentMismatch errors.
struct Subgroup {
  GroupPtr parent;
  DynBitset members;

  int order() const { return static_cast<int>(members.count()); }
  bool contains(elem_t a) const { return members.test(a); }
  bool is_whole_group() const { return order() == parent->order(); }
  std::vector<elem_t> elements() const { return members.to_indices(); }
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup subgroup_from_elements(const GroupPtr& g, const std::vector<elem_t>& elems);

/// Smallest subgroup containing the seed (closure under multiplication;
/// inverses follow from finiteness).
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<elem_t>& seed);
Subgroup generated_subgroup(const GroupPtr& g, const DynBitset& seed);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
DynBitset conjugate_members(const Group& g, const DynBitset& members, elem_t a);

bool is_subgroup_set(const Group& g, const DynBitset& members);
bool is_normal_subgroup(const Subgroup& h);
bool is_abelian_subgroup(const Subgroup& h);
bool is_nilpotent_subgroup(const Subgroup& h);  // lower central series inside the parent
bool same_parent(const Subgroup& a, const Subgroup& b);

struct SubgroupFlags {
  bool normal = false;
  bool abelian = false;
  bool prime_power = false;
};

/// The complete list of subgroups, deduplicated and sorted by size then
/// member bitset, with per-subgroup structure flags.
struct SubgroupLattice {
  GroupPtr parent;
  std::vector<Subgroup> all;
  std::vector<SubgroupFlags> flags;

  std::size_t size() const { return all.size(); }
};

/// Every subgroup, computed as the join-closure of the cyclic subgroups.
/// Complete because each subgroup is the join of its cyclic subgroups.
SubgroupLattice all_subgroups(const GroupPtr& g, const Caps& caps = {});

Subgroup centralizer(const GroupPtr& g, const Subgroup& h);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

/// N_G(H)/C_G(H) with the quotient materialized as a concrete group.
struct Automizer {
  Subgroup subject;
  Subgroup normalizer;
  Subgroup centralizer;
  GroupPtr quotient;
};
Automizer automizer(const GroupPtr& g, const Subgroup& h);

/// Largest normal nilpotent subgroup, as the join of the lattice's normal
/// nilpotent members.
Subgroup fitting_subgroup(const GroupPtr& g, const SubgroupLattice& lattice);
/// Independent route: the product of the p-cores (each an intersection of
/// the Sylow-p subgroups) over the primes dividing |G|.
Subgroup fitting_via_p_cores(const GroupPtr& g, const SubgroupLattice& lattice);
Subgroup p_core(const GroupPtr& g, int p, const SubgroupLattice& lattice);

std::vector<Subgroup> sylow_subgroups(const GroupPtr& g, int p,
                                      const SubgroupLattice& lattice);
std::vector<Subgroup> maximal_normal_subgroups(const GroupPtr& g,
                                               const SubgroupLattice& lattice);
std::vector<Subgroup> hall_p_prime_subgroups(const GroupPtr& g, int p,
                                             const SubgroupLattice& lattice);

/// Re-materializes a subgroup as a standalone group on its own element
/// indices. Second member maps new indices back to parent indices.
std::pair<GroupPtr, std::vector<elem_t>> subgroup_as_group(const Subgroup& h);

/// Quotient by a normal subgroup: coset group plus the projection map.
/// Throws NotNormal (with a witness element) otherwise.
std::pair<GroupPtr, GroupMap> quotient_group(const GroupPtr& g, const Subgroup& n);

/// Cosets of `normal_sub` inside the subgroup `ambient` of g; both are
/// member sets over g. Requires normal_sub normal in ambient.
GroupPtr quotient_of_subgroup(const GroupPtr& g, const DynBitset& ambient,
                              const DynBitset& normal_sub);

// Small arithmetic helpers shared by the lattice and predicate layers.
bool is_prime(int n);
bool is_prime_power(int n);                 // includes 1 (p^0)
std::vector<std::pair<int, int>> factorize(int n);
int p_part(int n, int p);

}  // namespace autlab
