#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "autlab/caps.hpp"
#include "autlab/errors.hpp"

namespace autlab {

using elem_t = std::uint16_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group given by its full multiplication table over elements
/// 0..n-1. Construction verifies all group axioms (Latin square, identity,
/// inverses, associativity); instances are immutable afterwards and safe to
/// share between threads.
class Group {
 public:
  /// Validates and builds. Throws NotLatinSquare / NoIdentity / NoInverse /
  /// NotAssociative, each naming the first offending pair or triple.
  Group(int n, std::vector<elem_t> flat_table,
        std::optional<std::vector<std::string>> labels = std::nullopt,
        std::string name = "");

  int order() const { return n_; }
  elem_t identity() const { return identity_; }
  elem_t mul(elem_t a, elem_t b) const { return table_[a * n_ + b]; }
  elem_t inverse(elem_t a) const { return inv_[a]; }
  elem_t conj(elem_t a, elem_t x) const {  // a x a^-1
    return mul(mul(a, x), inv_[a]);
  }
  elem_t commutator(elem_t a, elem_t b) const {  // a b a^-1 b^-1
    return mul(mul(a, b), mul(inv_[a], inv_[b]));
  }
  elem_t power(elem_t a, long k) const;
  int element_order(elem_t a) const { return orders_[a]; }

  const std::string& name() const { return name_; }
  bool has_labels() const { return labels_.has_value(); }
  std::string label(elem_t a) const;
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  std::vector<std::vector<int>> table() const;

 private:
  int n_ = 0;
  std::vector<elem_t> table_;
  elem_t identity_ = 0;
  std::vector<elem_t> inv_;
  std::vector<int> orders_;
  std::optional<std::vector<std::string>> labels_;
  std::string name_;
};

/// A map between two groups' element index spaces.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<elem_t> images;

  bool is_homomorphism() const;
  bool is_bijective() const;
};

/// Data for a split extension: each complement element acts on the kernel
/// through an automorphism, and the assignment itself must be a
/// homomorphism into the automorphisms of the kernel.
struct SemidirectSpec {
  GroupPtr kernel;
  GroupPtr complement;
  std::vector<std::vector<elem_t>> action;  // action[q][k] = image of k
};

GroupPtr group_from_table(const std::vector<std::vector<int>>& table,
                          std::optional<std::vector<std::string>> labels = std::nullopt,
                          std::string name = "");

/// Generates the group closure of permutation generators of {1..degree}.
/// Generators accept cycle notation "(1 2 3)(4 5)" or one-line images
/// "2 3 1". Element labels record cycle notation.
GroupPtr group_from_permutations(int degree,
                                 const std::vector<std::string>& generators,
                                 const Caps& caps = {}, std::string name = "");

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2,
                        const Caps& caps = {});

GroupPtr semidirect_product(const SemidirectSpec& spec, const Caps& caps = {});

/// Isomorphism search: order and element-order-multiset filters, then
/// backtracking over images of a greedy minimal generating set. Returns the
/// first isomorphism in deterministic search order, or nullopt.
std::optional<GroupMap> find_isomorphism(const GroupPtr& g1, const GroupPtr& g2,
                                         const Caps& caps = {});
bool isomorphic(const GroupPtr& g1, const GroupPtr& g2, const Caps& caps = {});

/// The automorphisms of g as a concrete group under composition, together
/// with the image vector of each element. Element i of `group` applies as
/// x -> autos[i][x]; elements are sorted by image vector.
struct AutGroup {
  GroupPtr group;
  std::vector<std::vector<elem_t>> autos;
};
AutGroup automorphism_group(const GroupPtr& g, const Caps& caps = {});

/// Greedy minimal generating set: repeatedly adjoin the smallest element
/// outside the closure so far. Size is at most log2(n).
std::vector<elem_t> minimal_generating_set(const Group& g);

/// Parses "(1 2 3)(4 5)" or one-line "2 3 1" into 0-based images.
std::vector<elem_t> parse_permutation(const std::string& text, int degree);
std::string cycle_notation(const std::vector<elem_t>& perm);

}  // namespace autlab
