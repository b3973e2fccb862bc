#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "comgraph/element.hpp"

namespace comgraph {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Multiplication oracle over fixed-width encodings. Implementations are
/// immutable after construction and safe to call from several threads.
class Representation {
 public:
  virtual ~Representation() = default;

  virtual std::string kind() const = 0;
  virtual std::size_t width() const = 0;
  virtual Encoding identity() const = 0;

  /// out = a * b; out must hold width() bytes and may not alias a or b.
  virtual void multiply(EncodingView a, EncodingView b, char* out) const = 0;
  virtual void invert(EncodingView a, char* out) const = 0;

  /// Throws IncompatibleGenerators when the element is of a different variant
  /// or has parameters (degree, modulus) that do not match this representation.
  virtual Encoding encode(const GroupElement& element) const = 0;
  virtual GroupElement decode(EncodingView bytes) const = 0;

  /// Human-readable label used by exports and the CLI.
  virtual std::string format(EncodingView bytes) const = 0;

  Encoding multiply(EncodingView a, EncodingView b) const;
  Encoding invert(EncodingView a) const;
  Encoding power(EncodingView a, std::uint64_t exponent) const;
};

using RepresentationPtr = std::shared_ptr<const Representation>;

class PermutationRep final : public Representation {
 public:
  explicit PermutationRep(std::size_t degree);

  std::string kind() const override { return "perm"; }
  std::size_t width() const override { return degree_; }
  Encoding identity() const override;
  using Representation::invert;
  using Representation::multiply;
  void multiply(EncodingView a, EncodingView b, char* out) const override;
  void invert(EncodingView a, char* out) const override;
  Encoding encode(const GroupElement& element) const override;
  GroupElement decode(EncodingView bytes) const override;
  std::string format(EncodingView bytes) const override;

  std::size_t degree() const { return degree_; }

 private:
  std::size_t degree_;
};

/// GL(n, p) with the usual matrix product.
class MatrixRep final : public Representation {
 public:
  MatrixRep(std::uint32_t n, std::uint32_t p);

  std::string kind() const override { return "matrix"; }
  std::size_t width() const override { return std::size_t{n_} * n_; }
  Encoding identity() const override;
  using Representation::invert;
  using Representation::multiply;
  void multiply(EncodingView a, EncodingView b, char* out) const override;
  void invert(EncodingView a, char* out) const override;
  Encoding encode(const GroupElement& element) const override;
  GroupElement decode(EncodingView bytes) const override;
  std::string format(EncodingView bytes) const override;

  std::uint32_t n() const { return n_; }
  std::uint32_t p() const { return p_; }

 private:
  std::uint32_t n_;
  std::uint32_t p_;
};

/// AGL(2, p) acting on row vectors with the linear part on the right:
/// (x, X)(y, Y) = (x + y X^-1, XY) and (x, X)^-1 = (-x X, X^-1).
class AffineRep final : public Representation {
 public:
  explicit AffineRep(std::uint32_t p);

  std::string kind() const override { return "affine"; }
  std::size_t width() const override { return 6; }
  Encoding identity() const override;
  using Representation::invert;
  using Representation::multiply;
  void multiply(EncodingView a, EncodingView b, char* out) const override;
  void invert(EncodingView a, char* out) const override;
  Encoding encode(const GroupElement& element) const override;
  GroupElement decode(EncodingView bytes) const override;
  std::string format(EncodingView bytes) const override;

  std::uint32_t p() const { return p_; }

 private:
  void inverse_matrix(const std::uint8_t* m, std::uint8_t* out) const;

  std::uint32_t p_;
};

/// A wr S_n. Encoding: n base ids (2 bytes each, big-endian) followed by the
/// n images of the top permutation. Product convention:
/// (a, pi)(c, tau) = (d, pi tau) with d_i = a_i * c_{i pi}.
class WreathRep final : public Representation {
 public:
  WreathRep(GroupPtr base, std::size_t n);

  std::string kind() const override { return "wreath"; }
  std::size_t width() const override { return 3 * n_; }
  Encoding identity() const override;
  using Representation::invert;
  using Representation::multiply;
  void multiply(EncodingView a, EncodingView b, char* out) const override;
  void invert(EncodingView a, char* out) const override;
  Encoding encode(const GroupElement& element) const override;
  GroupElement decode(EncodingView bytes) const override;
  std::string format(EncodingView bytes) const override;

  const FiniteGroup& base() const { return *base_; }
  const GroupPtr& base_ptr() const { return base_; }
  std::size_t degree() const { return n_; }

 private:
  GroupPtr base_;
  std::size_t n_;
};

/// (H x K) / N where N = {(z^i, w^-i)} identifies <z> <= Z(H) with <w> <= Z(K).
/// Encoding: big-endian (h id, k id), 4 bytes each, of the encoding-minimal
/// member of the coset.
class CentralProductRep final : public Representation {
 public:
  CentralProductRep(GroupPtr left, GroupPtr right, ElementId left_generator,
                    ElementId right_generator);

  std::string kind() const override { return "central"; }
  std::size_t width() const override { return 8; }
  Encoding identity() const override;
  using Representation::invert;
  using Representation::multiply;
  void multiply(EncodingView a, EncodingView b, char* out) const override;
  void invert(EncodingView a, char* out) const override;
  Encoding encode(const GroupElement& element) const override;
  GroupElement decode(EncodingView bytes) const override;
  std::string format(EncodingView bytes) const override;

  const FiniteGroup& left() const { return *left_; }
  const FiniteGroup& right() const { return *right_; }
  /// Size of the identified central subgroup.
  std::size_t identified_order() const { return left_powers_.size(); }

 private:
  void canonicalize(ElementId h, ElementId k, char* out) const;

  GroupPtr left_;
  GroupPtr right_;
  std::vector<ElementId> left_powers_;   // z^i
  std::vector<ElementId> right_powers_;  // w^-i
};

/// Picks the standalone representation for a list of Perm, MatModP or Affine
/// generators; throws IncompatibleGenerators for mixed variants or parameters.
RepresentationPtr representation_for(std::span<const GroupElement> generators);

}  // namespace comgraph
