#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace comgraph {

/// Dense index of an element inside an enumerated FiniteGroup. The identity is always 0.
using ElementId = std::uint32_t;

/// Canonical fixed-width byte encoding of an element. Two elements of the same
/// group are equal iff their encodings are equal; ordering is bytewise unsigned.
using Encoding = std::string;
using EncodingView = std::string_view;

/// Permutation of {0..n-1}, acting on the right: point i maps to images[i].
struct Perm {
  std::vector<std::uint8_t> images;

  static Perm identity(std::size_t n);
  /// Builds a permutation from disjoint cycles on n points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint8_t>>& cycles);

  std::size_t degree() const { return images.size(); }
  bool is_bijection() const;
  /// Right-action product: first this, then other.
  Perm then(const Perm& other) const;
  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;
};

/// n x n matrix over Z_p stored row-major with entries in [0, p).
struct MatModP {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::vector<std::uint8_t> entries;

  static MatModP identity(std::uint32_t n, std::uint32_t p);
  static MatModP from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  std::uint8_t at(std::uint32_t row, std::uint32_t col) const { return entries[row * n + col]; }
  std::uint8_t& at(std::uint32_t row, std::uint32_t col) { return entries[row * n + col]; }

  friend bool operator==(const MatModP&, const MatModP&) = default;
};

/// Pair (x, X) of AGL(2, p): translation row vector x and a 2x2 linear part X.
struct Affine {
  std::uint32_t p = 0;
  std::array<std::uint8_t, 2> vec{};
  std::array<std::uint8_t, 4> mat{};

  friend bool operator==(const Affine&, const Affine&) = default;
};

/// Element (a_1, ..., a_n) pi of A wr S_n with base coordinates given as ids of A.
struct WreathElement {
  std::vector<ElementId> base;
  Perm top;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Coset (h, k) N of an external central product, as ids of the factors.
struct CentralCoset {
  ElementId left = 0;
  ElementId right = 0;

  friend bool operator==(const CentralCoset&, const CentralCoset&) = default;
};

using GroupElement = std::variant<Perm, MatModP, Affine, WreathElement, CentralCoset>;

std::string_view variant_name(const GroupElement& element);

}  // namespace comgraph
