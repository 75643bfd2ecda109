#pragma once

#include "bicross/scalar.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bicross {

/// Pair (k, n) in the semidirect product Z[1/m] x| Z; the Z-generator acts
/// on the normal factor by multiplication by m.
struct SemiElem {
  Rat k;
  Int n;
  friend bool operator==(const SemiElem& a, const SemiElem& b) {
    return a.k == b.k && a.n == b.n;
  }
  friend bool operator<(const SemiElem& a, const SemiElem& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.k < b.k;
  }
};

/// Canonical opaque encoding of a group element: a table index, a 0-based
/// permutation image sequence, an additive rational (Z and Z[1/m]), or a
/// semidirect pair. Equality and ordering are encoding equality.
class GroupElement {
 public:
  using Perm = std::vector<uint8_t>;

  GroupElement() : v_(uint32_t{0}) {}
  explicit GroupElement(uint32_t table_index) : v_(table_index) {}
  explicit GroupElement(Perm images) : v_(std::move(images)) {}
  explicit GroupElement(Rat additive) : v_(std::move(additive)) {}
  explicit GroupElement(SemiElem s) : v_(std::move(s)) {}

  bool is_table() const { return std::holds_alternative<uint32_t>(v_); }
  bool is_perm() const { return std::holds_alternative<Perm>(v_); }
  bool is_rat() const { return std::holds_alternative<Rat>(v_); }
  bool is_semi() const { return std::holds_alternative<SemiElem>(v_); }

  uint32_t table_index() const { return std::get<uint32_t>(v_); }
  const Perm& perm() const { return std::get<Perm>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  const SemiElem& semi() const { return std::get<SemiElem>(v_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.v_ == b.v_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    return a.v_ < b.v_;
  }

 private:
  std::variant<uint32_t, Perm, Rat, SemiElem> v_;
};

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A group given by computable operations. Finite groups expose an
/// enumeration; infinite families do not, and "for all" checks degrade to
/// seeded probes. All implementations are immutable after construction.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement mul(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inv(const GroupElement& a) const = 0;
  virtual bool contains(const GroupElement& a) const = 0;

  /// All elements in a stable canonical order, when finite.
  virtual const std::vector<GroupElement>* enumeration() const { return nullptr; }

  /// Seeded sampling for probe sets; finite groups draw uniformly from the
  /// enumeration, infinite families from a bounded canonical window.
  virtual GroupElement sample(std::mt19937_64& rng) const;

  virtual std::string format_element(const GroupElement& a) const = 0;
  virtual std::optional<GroupElement> parse_element(const std::string& text) const = 0;

  bool finite() const { return enumeration() != nullptr; }
  size_t order() const {
    const auto* e = enumeration();
    if (!e) throw GroupError("order() on infinite group " + name());
    return e->size();
  }
  bool is_identity(const GroupElement& a) const { return a == identity(); }
};

using GroupPtr = std::shared_ptr<const Group>;

/// Finite group from an n x n multiplication table of 0-based indices.
/// Validates identity, inverses and associativity on construction.
GroupPtr make_table_group(std::string name, std::vector<std::vector<uint32_t>> table,
                          std::vector<std::string> labels = {});

/// Permutation group on {1..degree} generated by the given permutations
/// (0-based image sequences internally; cycle notation in text form).
GroupPtr make_perm_group(std::string name, size_t degree,
                         std::vector<GroupElement::Perm> generators);

/// The integers under addition.
GroupPtr make_integer_group(std::string name = "Z");

/// Z[1/m] under addition: rationals whose denominator divides a power of m.
GroupPtr make_dyadic_group(unsigned m, std::string name = "");

/// Z[1/m] x| Z with (k,n)(k',n') = (k + m^n k', n + n').
GroupPtr make_semidirect_group(unsigned m, std::string name = "");

/// Subgroup of a finite parent, from an explicit element list or generated
/// from a generator list. Delegates operations to the parent.
GroupPtr make_subgroup(std::string name, GroupPtr parent,
                       std::vector<GroupElement> elements);
GroupPtr make_subgroup_generated(std::string name, GroupPtr parent,
                                 std::vector<GroupElement> generators);

/// Composition convention for permutations, fixed project-wide:
/// (p*q)(x) = p(q(x)), i.e. the right factor acts first.
GroupElement::Perm perm_compose(const GroupElement::Perm& p, const GroupElement::Perm& q);
GroupElement::Perm perm_inverse(const GroupElement::Perm& p);
std::string perm_to_cycles(const GroupElement::Perm& p);
std::optional<GroupElement::Perm> perm_from_cycles(const std::string& text, size_t degree);

struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoFactorization : FactorizationError {
  using FactorizationError::FactorizationError;
};
struct AmbiguousFactorization : FactorizationError {
  using FactorizationError::FactorizationError;
};

/// Writes g = k*h with k in K and h in H, both subgroups of the same finite
/// parent. Throws NoFactorization / AmbiguousFactorization when the pair
/// (K, H) is not an exact factorization.
std::pair<GroupElement, GroupElement> factorize(const Group& k_sub, const Group& h_sub,
                                                const Group& parent, const GroupElement& g);

}  // namespace bicross
