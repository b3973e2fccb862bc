#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "comgraph/element.hpp"
#include "comgraph/representation.hpp"

namespace comgraph {

inline constexpr std::size_t kDefaultMaxOrder = 100'000;

/// Groups up to this order may materialize a Cayley table.
inline constexpr std::size_t kCayleyTableLimit = 4096;

struct ConjugacyClasses {
  std::vector<std::vector<ElementId>> classes;  // each sorted; ordered by smallest member
  std::vector<std::uint32_t> class_of;          // element id -> class index
};

/// Enumerated element universe of a finite group with a multiplication oracle.
///
/// Ids are dense and assigned in breadth-first discovery order starting with
/// the identity at id 0. Structural data (orders, center, classes, derived
/// subgroup, inverses) is computed on first use under std::call_once, so a
/// constructed group can be shared between threads.
class FiniteGroup {
 public:
  /// Closure of the generators under the representation's product.
  /// Throws OrderCapExceeded if more than max_order elements are reached.
  static GroupPtr enumerate(RepresentationPtr rep, std::span<const Encoding> generators,
                            std::size_t max_order = kDefaultMaxOrder, std::string label = {});

  /// Same, deducing the representation from Perm / MatModP / Affine generators.
  static GroupPtr enumerate(std::span<const GroupElement> generators,
                            std::size_t max_order = kDefaultMaxOrder, std::string label = {});

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::size_t order() const { return order_; }
  static constexpr ElementId identity() { return 0; }
  std::span<const ElementId> generators() const { return generator_ids_; }

  const Representation& representation() const { return *rep_; }
  const RepresentationPtr& representation_ptr() const { return rep_; }

  EncodingView encoding(ElementId a) const;
  std::optional<ElementId> find(EncodingView bytes) const;
  /// Id of an element given by value; throws std::out_of_range if it is not in the group.
  ElementId id_of(const GroupElement& element) const;
  GroupElement element(ElementId a) const;
  std::string format(ElementId a) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId invert(ElementId a) const;
  ElementId power(ElementId a, std::int64_t exponent) const;
  /// [a, b] = a^-1 b^-1 a b.
  ElementId commutator(ElementId a, ElementId b) const;
  /// a^x = x^-1 a x.
  ElementId conjugate(ElementId a, ElementId x) const;
  bool commute(ElementId a, ElementId b) const;

  std::uint64_t element_order(ElementId a) const;
  std::span<const std::uint64_t> element_orders() const;

  std::vector<ElementId> centralizer(ElementId a) const;
  const std::vector<ElementId>& center() const;
  bool is_central(ElementId a) const;
  bool is_abelian() const { return center().size() == order_; }

  const ConjugacyClasses& conjugacy_classes() const;
  const std::vector<ElementId>& derived_subgroup() const;

  /// Sorted ids of the subgroup generated by the given elements.
  std::vector<ElementId> subgroup(std::span<const ElementId> generators) const;

  /// Materializes the Cayley table (order <= kCayleyTableLimit only); after
  /// this multiply() is a table lookup. Used for factor groups of wreath and
  /// central products.
  void build_cayley_table() const;
  bool has_cayley_table() const { return table_ready_.load(std::memory_order_acquire); }

 private:
  FiniteGroup() = default;

  void check(ElementId a) const;
  ElementId lookup(EncodingView bytes) const;

  std::string label_;
  RepresentationPtr rep_;
  std::size_t width_ = 0;
  std::size_t order_ = 0;
  std::string data_;  // order_ * width_ bytes
  std::unordered_map<Encoding, ElementId> index_;
  std::vector<ElementId> generator_ids_;

  mutable std::once_flag table_once_;
  mutable std::atomic<bool> table_ready_{false};
  mutable std::vector<std::uint16_t> table_;

  mutable std::once_flag inverse_once_;
  mutable std::vector<ElementId> inverses_;
  mutable std::once_flag order_once_;
  mutable std::vector<std::uint64_t> orders_;
  mutable std::once_flag center_once_;
  mutable std::vector<ElementId> center_;
  mutable std::vector<bool> central_flags_;
  mutable std::once_flag classes_once_;
  mutable ConjugacyClasses classes_;
  mutable std::once_flag derived_once_;
  mutable std::vector<ElementId> derived_;
};

}  // namespace comgraph
