#include "comgraph/finite_group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <stdexcept>

#include "comgraph/errors.hpp"
#include "comgraph/number_theory.hpp"

namespace comgraph {

namespace {

// Per-call product buffer; stack storage for the common small widths.
class Scratch {
 public:
  explicit Scratch(std::size_t width) {
    if (width > sizeof(inline_)) heap_.resize(width);
  }
  char* data() { return heap_.empty() ? inline_ : heap_.data(); }

 private:
  char inline_[128];
  std::string heap_;
};

}  // namespace

GroupPtr FiniteGroup::enumerate(RepresentationPtr rep, std::span<const Encoding> generators,
                                std::size_t max_order, std::string label) {
  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->rep_ = std::move(rep);
  group->label_ = std::move(label);
  const std::size_t width = group->rep_->width();
  group->width_ = width;

  for (const auto& g : generators) {
    if (g.size() != width) throw IncompatibleGenerators("generator encoding has the wrong width");
  }

  auto add = [&](EncodingView bytes) -> ElementId {
    const auto [it, inserted] = group->index_.try_emplace(Encoding(bytes), static_cast<ElementId>(group->order_));
    if (inserted) {
      if (group->order_ >= max_order) throw OrderCapExceeded(max_order);
      group->data_.append(bytes);
      ++group->order_;
    }
    return it->second;
  };

  add(group->rep_->identity());
  std::vector<Encoding> distinct;
  for (const auto& g : generators) {
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);
  }

  // Breadth-first right multiplication by the generators; in a finite group the
  // generated monoid is already the generated subgroup.
  Encoding product(width, '\0');
  for (std::size_t next = 0; next < group->order_; ++next) {
    for (const auto& g : distinct) {
      const Encoding current = group->data_.substr(next * width, width);
      group->rep_->multiply(current, g, product.data());
      add(product);
    }
  }

  for (const auto& g : distinct) {
    const ElementId id = group->index_.at(g);
    if (id != identity()) group->generator_ids_.push_back(id);
  }
  return group;
}

GroupPtr FiniteGroup::enumerate(std::span<const GroupElement> generators, std::size_t max_order,
                                std::string label) {
  auto rep = representation_for(generators);
  std::vector<Encoding> encoded;
  encoded.reserve(generators.size());
  for (const auto& g : generators) encoded.push_back(rep->encode(g));
  return enumerate(std::move(rep), encoded, max_order, std::move(label));
}

void FiniteGroup::check(ElementId a) const {
  if (a >= order_) throw std::out_of_range("element id " + std::to_string(a) + " not in group of order " +
                                           std::to_string(order_));
}

EncodingView FiniteGroup::encoding(ElementId a) const {
  check(a);
  return EncodingView(data_).substr(std::size_t{a} * width_, width_);
}

std::optional<ElementId> FiniteGroup::find(EncodingView bytes) const {
  const auto it = index_.find(Encoding(bytes));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::lookup(EncodingView bytes) const {
  const auto it = index_.find(Encoding(bytes));
  if (it == index_.end()) throw std::logic_error("product escaped the enumerated group");
  return it->second;
}

ElementId FiniteGroup::id_of(const GroupElement& element) const {
  const auto id = find(rep_->encode(element));
  if (!id) throw std::out_of_range("element is not a member of " + (label_.empty() ? "the group" : label_));
  return *id;
}

GroupElement FiniteGroup::element(ElementId a) const { return rep_->decode(encoding(a)); }

std::string FiniteGroup::format(ElementId a) const { return rep_->format(encoding(a)); }

void FiniteGroup::build_cayley_table() const {
  if (order_ > kCayleyTableLimit) return;
  std::call_once(table_once_, [this] {
    table_.resize(order_ * order_);
    Scratch buffer(width_);
    char* out = buffer.data();
    for (std::size_t a = 0; a < order_; ++a) {
      const EncodingView ea = EncodingView(data_).substr(a * width_, width_);
      for (std::size_t b = 0; b < order_; ++b) {
        rep_->multiply(ea, EncodingView(data_).substr(b * width_, width_), out);
        table_[a * order_ + b] = static_cast<std::uint16_t>(lookup(EncodingView(out, width_)));
      }
    }
    table_ready_.store(true, std::memory_order_release);
  });
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  check(a);
  check(b);
  if (table_ready_.load(std::memory_order_acquire)) return table_[std::size_t{a} * order_ + b];
  Scratch buffer(width_);
  char* out = buffer.data();
  rep_->multiply(encoding(a), encoding(b), out);
  return lookup(EncodingView(out, width_));
}

ElementId FiniteGroup::invert(ElementId a) const {
  check(a);
  std::call_once(inverse_once_, [this] {
    inverses_.assign(order_, 0);
    Scratch buffer(width_);
    char* out = buffer.data();
    for (std::size_t x = 0; x < order_; ++x) {
      rep_->invert(EncodingView(data_).substr(x * width_, width_), out);
      inverses_[x] = lookup(EncodingView(out, width_));
    }
  });
  return inverses_[a];
}

ElementId FiniteGroup::power(ElementId a, std::int64_t exponent) const {
  check(a);
  ElementId base = exponent < 0 ? invert(a) : a;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  return lookup(rep_->power(encoding(base), e));
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

ElementId FiniteGroup::conjugate(ElementId a, ElementId x) const { return multiply(multiply(invert(x), a), x); }

bool FiniteGroup::commute(ElementId a, ElementId b) const {
  check(a);
  check(b);
  if (table_ready_.load(std::memory_order_acquire)) {
    return table_[std::size_t{a} * order_ + b] == table_[std::size_t{b} * order_ + a];
  }
  Scratch left(width_);
  Scratch right(width_);
  char* ab = left.data();
  char* ba = right.data();
  const EncodingView ea = encoding(a);
  const EncodingView eb = encoding(b);
  rep_->multiply(ea, eb, ab);
  rep_->multiply(eb, ea, ba);
  return std::memcmp(ab, ba, width_) == 0;
}

std::span<const std::uint64_t> FiniteGroup::element_orders() const {
  std::call_once(order_once_, [this] {
    const auto primes = factorize(order_);
    const Encoding identity_bytes = rep_->identity();
    orders_.assign(order_, 1);
    for (std::size_t a = 0; a < order_; ++a) {
      const EncodingView ea = EncodingView(data_).substr(a * width_, width_);
      std::uint64_t d = order_;
      for (const auto& [prime, exponent] : primes) {
        for (unsigned i = 0; i < exponent; ++i) {
          if (rep_->power(ea, d / prime) != identity_bytes) break;
          d /= prime;
        }
      }
      orders_[a] = d;
    }
  });
  return orders_;
}

std::uint64_t FiniteGroup::element_order(ElementId a) const {
  check(a);
  return element_orders()[a];
}

std::vector<ElementId> FiniteGroup::centralizer(ElementId a) const {
  check(a);
  std::vector<ElementId> out;
  for (ElementId g = 0; g < order_; ++g) {
    if (commute(a, g)) out.push_back(g);
  }
  return out;
}

const std::vector<ElementId>& FiniteGroup::center() const {
  std::call_once(center_once_, [this] {
    central_flags_.assign(order_, false);
    for (ElementId z = 0; z < order_; ++z) {
      const bool central = std::all_of(generator_ids_.begin(), generator_ids_.end(),
                                       [&](ElementId g) { return commute(z, g); });
      if (central) {
        central_flags_[z] = true;
        center_.push_back(z);
      }
    }
  });
  return center_;
}

bool FiniteGroup::is_central(ElementId a) const {
  check(a);
  center();
  return central_flags_[a];
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    constexpr std::uint32_t unassigned = ~std::uint32_t{0};
    classes_.class_of.assign(order_, unassigned);
    for (ElementId start = 0; start < order_; ++start) {
      if (classes_.class_of[start] != unassigned) continue;
      const auto index = static_cast<std::uint32_t>(classes_.classes.size());
      std::vector<ElementId> orbit{start};
      classes_.class_of[start] = index;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const ElementId g : generator_ids_) {
          const ElementId c = conjugate(orbit[i], g);
          if (classes_.class_of[c] == unassigned) {
            classes_.class_of[c] = index;
            orbit.push_back(c);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes_.classes.push_back(std::move(orbit));
    }
  });
  return classes_;
}

std::vector<ElementId> FiniteGroup::subgroup(std::span<const ElementId> generators) const {
  std::vector<bool> member(order_, false);
  std::vector<ElementId> elements{identity()};
  member[identity()] = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const ElementId g : generators) {
      const ElementId next = multiply(elements[i], g);
      if (!member[next]) {
        member[next] = true;
        elements.push_back(next);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

const std::vector<ElementId>& FiniteGroup::derived_subgroup() const {
  std::call_once(derived_once_, [this] {
    // Normal closure of the generator commutators.
    std::vector<ElementId> normal_generators;
    for (const ElementId a : generator_ids_) {
      for (const ElementId b : generator_ids_) {
        const ElementId c = commutator(a, b);
        if (c != identity() &&
            std::find(normal_generators.begin(), normal_generators.end(), c) == normal_generators.end()) {
          normal_generators.push_back(c);
        }
      }
    }
    std::vector<ElementId> members = subgroup(normal_generators);
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<bool> is_member(order_, false);
      for (const ElementId m : members) is_member[m] = true;
      const std::size_t count = normal_generators.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (const ElementId g : generator_ids_) {
          const ElementId c = conjugate(normal_generators[i], g);
          if (!is_member[c]) {
            normal_generators.push_back(c);
            is_member[c] = true;
            changed = true;
          }
        }
      }
      if (changed) members = subgroup(normal_generators);
    }
    derived_ = std::move(members);
  });
  return derived_;
}

}  // namespace comgraph
