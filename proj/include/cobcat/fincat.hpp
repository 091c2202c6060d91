#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cobcat {

/// One failed law, e.g. kind "associativity" with the offending triple.
struct Issue {
  std::string kind;
  std::string detail;
};
using ValidationReport = std::vector<Issue>;

/// A finite unital category stored as explicit tables. Objects and
/// morphisms are dense ids; names are kept for serialization.
class FinCat {
 public:
  struct Morphism {
    std::string name;
    int src = 0;
    int tgt = 0;
  };

  class Builder {
   public:
    /// Adds an object together with its identity morphism (named
    /// `identity_name`, or "id_<name>" when empty). Returns the object id.
    int add_object(std::string name, std::string identity_name = {});
    int add_morphism(std::string name, std::string_view src, std::string_view tgt);
    int add_morphism(std::string name, int src, int tgt);
    /// Records g∘f = h. Composites with an identity are filled in
    /// automatically unless given explicitly.
    void set_compose(std::string_view f, std::string_view g, std::string_view h);
    void set_compose(int f, int g, int h);

    int object_id(std::string_view name) const;
    int morphism_id(std::string_view name) const;

    /// Throws DomainError on unknown names or a missing composite.
    FinCat build() &&;

   private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::map<std::string, int, std::less<>> object_ids_;
    std::map<std::string, int, std::less<>> morphism_ids_;
    std::map<std::pair<int, int>, int> compose_;
  };

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  const Morphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  int src(int f) const { return morphism(f).src; }
  int tgt(int f) const { return morphism(f).tgt; }
  int identity(int x) const { return identities_.at(static_cast<std::size_t>(x)); }
  bool is_identity(int f) const { return identities_[static_cast<std::size_t>(src(f))] == f; }

  /// g∘f for tgt(f) = src(g); std::nullopt when the pair is not composable.
  std::optional<int> compose(int f, int g) const;

  /// All morphisms x → y.
  std::span<const int> hom(int x, int y) const;
  /// All morphisms with source x.
  std::span<const int> out(int x) const { return out_[static_cast<std::size_t>(x)]; }

  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> out_;
  std::vector<std::size_t> out_pos_;             // position of f within out_[src f]
  std::vector<std::vector<int>> compose_;        // compose_[f][out_pos_[g]] = g∘f
  std::vector<std::vector<int>> hom_;            // hom_[x * n + y]
};

ValidationReport validate_category(const FinCat& c);

/// Inverse table (indexed by morphism id) when every morphism is invertible.
std::optional<std::vector<int>> is_groupoid(const FinCat& c);

FinCat product(const FinCat& c, const FinCat& d);
FinCat disjoint_union(const FinCat& c, const FinCat& d);
/// Full subcategory on the given objects (order kept).
FinCat full_subcategory(const FinCat& c, std::span<const int> objects);
/// Same category with object ids permuted: new id i is old object perm[i].
FinCat relabel_objects(const FinCat& c, std::span<const int> perm);

/// Functor between two categories that must outlive it.
struct Functor {
  const FinCat* source = nullptr;
  const FinCat* target = nullptr;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

/// Natural transformation between two functors with common source/target.
struct NatTrans {
  const Functor* from = nullptr;
  const Functor* to = nullptr;
  std::vector<int> components;  // object of source ↦ morphism of target
};

ValidationReport check_functor(const Functor& f);
ValidationReport check_nat_trans(const NatTrans& t);

Functor identity_functor(const FinCat& c);

// Small catalogue of standard categories.
FinCat terminal_category();
/// Poset on `names` with x ≤ y iff leq(x, y); leq must be a partial order.
FinCat poset_category(const std::vector<std::string>& names,
                      const std::vector<std::vector<bool>>& leq);
/// The interval [1] = {0 < 1}.
FinCat interval_category();
/// Cyclic group ℤ/n as a one-object category; morphism k is "g^k".
FinCat cyclic_group_category(int n);
/// Two objects a, b and two parallel arrows f, g: a → b.
FinCat parallel_arrows_category();
/// Poset of nonempty proper subsets of {0, …, n-1} under inclusion.
FinCat proper_subset_poset(int n);

}  // namespace cobcat
