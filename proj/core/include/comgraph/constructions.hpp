#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "comgraph/element.hpp"
#include "comgraph/finite_group.hpp"

namespace comgraph {

GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
GroupPtr cyclic(std::size_t n);
/// Dihedral group of order n (n even, n >= 4).
GroupPtr dihedral(std::size_t n);
GroupPtr quaternion8();
GroupPtr sl23();

/// A wr S_n with S_n permuting the n coordinates.
GroupPtr wreath(const GroupPtr& base, std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Identification of <left> <= Z(H) with <right> <= Z(K) sending left to right.
struct CentralIdentification {
  ElementId left = FiniteGroup::identity();
  ElementId right = FiniteGroup::identity();
};

/// Central elements of order `order` chosen encoding-minimal in each factor.
/// Throws InvalidPhi if either factor has no such central element.
CentralIdentification identify_centers(const FiniteGroup& left, const FiniteGroup& right, std::uint64_t order);

/// External central product (H x K) / {(z^i, phi(z)^-i)}.
GroupPtr central_product(const GroupPtr& left, const GroupPtr& right, CentralIdentification phi,
                         std::size_t max_order = kDefaultMaxOrder);
GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right, std::size_t max_order = kDefaultMaxOrder);

/// Images of the two factors inside a central product, as ids of the product.
ElementId embed_left(const FiniteGroup& product, ElementId h);
ElementId embed_right(const FiniteGroup& product, ElementId k);

/// Lower unitriangular n x n matrices over Z_p.
GroupPtr ult(std::uint32_t n, std::uint32_t p, std::size_t max_order = kDefaultMaxOrder);

/// Extraspecial group of order p^(2 rank + 1): rank 1 is ULT(3, p) (Q8 for
/// p = 2); rank 2 is the central product of two rank-1 groups over their centers.
GroupPtr extraspecial(std::uint32_t p, unsigned rank, std::size_t max_order = kDefaultMaxOrder);

using Mat2 = std::array<std::uint8_t, 4>;  // row-major 2x2 over Z_p

struct ConstructionWParams {
  std::uint32_t p = 0;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  Mat2 j{};
  Mat2 k{};
  Mat2 l{};
  Mat2 z{};
};

struct ConstructionW {
  GroupPtr group;
  ConstructionWParams params;

  /// ((x0, x1), X) as an element id of the group.
  ElementId element(std::uint32_t x0, std::uint32_t x1, const Mat2& m) const;
  Mat2 identity_matrix() const { return {1, 0, 0, 1}; }
  Mat2 minus_identity() const;
};

/// Parameters for the affine family with alpha the smallest residue in
/// [2, p - 1] of multiplicative order 3. Throws NotValidPrime.
ConstructionWParams construction_w_params(std::uint32_t p);

/// Z_p^2 semidirect SL(2,3) inside AGL(2, p), of order 24 p^2.
ConstructionW construction_w(std::uint32_t p, std::size_t max_order = kDefaultMaxOrder);

/// Closure of explicit matrices in GL(n, p). Throws SingularGenerator.
GroupPtr matrix_group(std::uint32_t n, std::uint32_t p, const std::vector<MatModP>& generators,
                      std::size_t max_order = kDefaultMaxOrder);

}  // namespace comgraph
