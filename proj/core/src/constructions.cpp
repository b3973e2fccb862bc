#include "comgraph/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "comgraph/errors.hpp"
#include "comgraph/number_theory.hpp"

namespace comgraph {

namespace {

std::string label_of(const GroupPtr& g) { return g->label().empty() ? std::string("?") : g->label(); }

// Multiplies predicted order factors, saturating past the cap.
void require_within_cap(long double predicted, std::size_t max_order) {
  if (predicted > static_cast<long double>(max_order)) throw OrderCapExceeded(max_order);
}

GroupPtr enumerate_perms(std::size_t degree, std::vector<Perm> generators, std::string label) {
  if (generators.empty()) generators.push_back(Perm::identity(degree));
  std::vector<GroupElement> gens(generators.begin(), generators.end());
  return FiniteGroup::enumerate(gens, kDefaultMaxOrder, std::move(label));
}

std::vector<std::uint8_t> iota_points(std::size_t from, std::size_t to) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(static_cast<std::uint8_t>(i));
  return out;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b, std::uint32_t p) {
  return {static_cast<std::uint8_t>((a[0] * b[0] + a[1] * b[2]) % p),
          static_cast<std::uint8_t>((a[0] * b[1] + a[1] * b[3]) % p),
          static_cast<std::uint8_t>((a[2] * b[0] + a[3] * b[2]) % p),
          static_cast<std::uint8_t>((a[2] * b[1] + a[3] * b[3]) % p)};
}

std::uint8_t neg(std::uint32_t x, std::uint32_t p) { return static_cast<std::uint8_t>((p - x % p) % p); }

}  // namespace

GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 8) throw UnsupportedParams("symmetric(n) supports 1 <= n <= 8");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    gens.push_back(Perm::from_cycles(n, {iota_points(0, n)}));
  }
  return enumerate_perms(n, std::move(gens), "sym(" + std::to_string(n) + ")");
}

GroupPtr alternating(std::size_t n) {
  if (n == 0 || n > 8) throw UnsupportedParams("alternating(n) supports 1 <= n <= 8");
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<std::uint8_t>(i)}}));
  }
  return enumerate_perms(n, std::move(gens), "alt(" + std::to_string(n) + ")");
}

GroupPtr cyclic(std::size_t n) {
  if (n == 0 || n > 255) throw UnsupportedParams("cyclic(n) supports 1 <= n <= 255");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {iota_points(0, n)}));
  return enumerate_perms(n, std::move(gens), "cyc(" + std::to_string(n) + ")");
}

GroupPtr dihedral(std::size_t n) {
  if (n < 4 || n % 2 != 0 || n > 510) throw UnsupportedParams("dihedral(n) needs even order 4 <= n <= 510");
  const std::string label = "dih(" + std::to_string(n) + ")";
  if (n == 4) {
    return enumerate_perms(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                           label);
  }
  const std::size_t m = n / 2;
  Perm reflection = Perm::identity(m);
  for (std::size_t i = 0; i < m; ++i) reflection.images[i] = static_cast<std::uint8_t>((m - i) % m);
  return enumerate_perms(m, {Perm::from_cycles(m, {iota_points(0, m)}), reflection}, label);
}

GroupPtr quaternion8() {
  const std::vector<GroupElement> gens{MatModP::from_rows(3, {{0, 1}, {-1, 0}}),
                                       MatModP::from_rows(3, {{1, 1}, {1, -1}})};
  return FiniteGroup::enumerate(gens, kDefaultMaxOrder, "q8()");
}

GroupPtr sl23() {
  const std::vector<GroupElement> gens{MatModP::from_rows(3, {{1, 1}, {0, 1}}),
                                       MatModP::from_rows(3, {{1, 0}, {1, 1}})};
  return FiniteGroup::enumerate(gens, kDefaultMaxOrder, "sl23()");
}

GroupPtr wreath(const GroupPtr& base, std::size_t n, std::size_t max_order) {
  if (n == 0) throw UnsupportedParams("wreath degree must be positive");
  long double predicted = 1;
  for (std::size_t i = 0; i < n; ++i) predicted *= static_cast<long double>(base->order()) * (i + 1);
  require_within_cap(predicted, max_order);

  auto rep = std::make_shared<WreathRep>(base, n);
  std::vector<Encoding> gens;
  const std::vector<ElementId> ones(n, FiniteGroup::identity());
  for (const ElementId b : base->generators()) {
    WreathElement w{ones, Perm::identity(n)};
    w.base[0] = b;
    gens.push_back(rep->encode(w));
  }
  if (n >= 2) {
    gens.push_back(rep->encode(WreathElement{ones, Perm::from_cycles(n, {{0, 1}})}));
    gens.push_back(rep->encode(WreathElement{ones, Perm::from_cycles(n, {iota_points(0, n)})}));
  }
  return FiniteGroup::enumerate(rep, gens, max_order,
                                "wr(" + label_of(base) + ", " + std::to_string(n) + ")");
}

CentralIdentification identify_centers(const FiniteGroup& left, const FiniteGroup& right, std::uint64_t order) {
  if (order == 0) throw InvalidPhi("identified subgroup order must be positive");
  if (order == 1) return {};
  auto pick = [order](const FiniteGroup& g, const char* side) {
    std::optional<ElementId> best;
    for (const ElementId z : g.center()) {
      if (g.element_order(z) != order) continue;
      if (!best || g.encoding(z) < g.encoding(*best)) best = z;
    }
    if (!best) {
      throw InvalidPhi(std::string(side) + " factor has no central element of order " + std::to_string(order));
    }
    return *best;
  };
  return {pick(left, "left"), pick(right, "right")};
}

GroupPtr central_product(const GroupPtr& left, const GroupPtr& right, CentralIdentification phi,
                         std::size_t max_order) {
  if (phi.left >= left->order() || phi.right >= right->order()) throw InvalidPhi("phi names an unknown element");
  if (!left->is_central(phi.left)) throw InvalidPhi("phi source is not central in the left factor");
  if (!right->is_central(phi.right)) throw InvalidPhi("phi image is not central in the right factor");
  const std::uint64_t m = left->element_order(phi.left);
  if (right->element_order(phi.right) != m) throw InvalidPhi("phi does not preserve the generator order");
  require_within_cap(static_cast<long double>(left->order()) * right->order() / m, max_order);

  auto rep = std::make_shared<CentralProductRep>(left, right, phi.left, phi.right);
  std::vector<Encoding> gens;
  for (const ElementId h : left->generators()) gens.push_back(rep->encode(CentralCoset{h, FiniteGroup::identity()}));
  for (const ElementId k : right->generators()) gens.push_back(rep->encode(CentralCoset{FiniteGroup::identity(), k}));
  std::string label;
  if (m == 1) {
    label = "dprod(" + label_of(left) + ", " + label_of(right) + ")";
  } else {
    label = "cprod(" + label_of(left) + ", " + label_of(right) + ", phi=" + std::to_string(m) + ")";
  }
  return FiniteGroup::enumerate(rep, gens, max_order, std::move(label));
}

GroupPtr direct_product(const GroupPtr& left, const GroupPtr& right, std::size_t max_order) {
  return central_product(left, right, CentralIdentification{}, max_order);
}

ElementId embed_left(const FiniteGroup& product, ElementId h) {
  return product.id_of(CentralCoset{h, FiniteGroup::identity()});
}

ElementId embed_right(const FiniteGroup& product, ElementId k) {
  return product.id_of(CentralCoset{FiniteGroup::identity(), k});
}

GroupPtr ult(std::uint32_t n, std::uint32_t p, std::size_t max_order) {
  if (n < 2) throw UnsupportedParams("ult(n, p) needs n >= 2");
  if (!is_prime(p)) throw NotValidPrime("ult modulus " + std::to_string(p) + " is not prime");
  long double predicted = 1;
  for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) predicted *= p;
  require_within_cap(predicted, max_order);

  std::vector<GroupElement> gens;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    MatModP m = MatModP::identity(n, p);
    m.at(i + 1, i) = 1;
    gens.emplace_back(std::move(m));
  }
  return FiniteGroup::enumerate(gens, max_order, "ult(" + std::to_string(n) + ", " + std::to_string(p) + ")");
}

GroupPtr extraspecial(std::uint32_t p, unsigned rank, std::size_t max_order) {
  if (!is_prime(p)) throw NotValidPrime("extraspecial prime " + std::to_string(p) + " is not prime");
  if (rank != 1 && rank != 2) throw UnsupportedParams("extraspecial rank must be 1 or 2");
  long double predicted = p;
  for (unsigned i = 0; i < 2 * rank; ++i) predicted *= p;
  require_within_cap(predicted, max_order);

  const std::string label = "extra(" + std::to_string(p) + ", " + std::to_string(rank) + ")";
  auto rank_one = [&] { return p == 2 ? quaternion8() : ult(3, p, max_order); };
  GroupPtr h = rank_one();
  if (rank == 1) {
    auto copy = std::const_pointer_cast<FiniteGroup>(h);
    copy->set_label(label);
    return h;
  }
  GroupPtr k = rank_one();
  GroupPtr g = central_product(h, k, identify_centers(*h, *k, p), max_order);
  std::const_pointer_cast<FiniteGroup>(g)->set_label(label);
  return g;
}

ConstructionWParams construction_w_params(std::uint32_t p) {
  if (!is_prime(p) || p % 3 != 1) {
    throw NotValidPrime(std::to_string(p) + " is not a prime congruent to 1 mod 3");
  }
  if (p > 251) throw UnsupportedParams("construction W supports p < 256");
  ConstructionWParams w;
  w.p = p;
  for (std::uint32_t a = 2; a < p; ++a) {
    if (pow_mod(a, 3, p) == 1) {
      w.alpha = a;
      break;
    }
  }
  w.beta = (w.alpha + 1) % p;
  const auto a = static_cast<std::uint8_t>(w.alpha);
  const auto b = static_cast<std::uint8_t>(w.beta);
  w.j = {0, 1, neg(1, p), 0};
  w.k = {a, b, b, neg(a, p)};
  w.l = {b, neg(a, p), neg(a, p), neg(b, p)};
  w.z = {neg(b, p), a, 0, 1};

  const std::uint32_t minus_one = p - 1;
  const bool scalars_ok = w.alpha != 1 && pow_mod(w.alpha, 3, p) == 1 && w.beta != minus_one &&
                          pow_mod(w.beta, 3, p) == minus_one && (w.alpha * w.alpha + w.beta * w.beta) % p == minus_one;
  const Mat2 minus_i{neg(1, p), 0, 0, neg(1, p)};
  const Mat2 id{1, 0, 0, 1};
  const Mat2 z_inv = mat2_mul(w.z, w.z, p);
  auto conj = [&](const Mat2& m) { return mat2_mul(mat2_mul(z_inv, m, p), w.z, p); };
  const bool matrices_ok = mat2_mul(w.j, w.j, p) == minus_i && mat2_mul(w.k, w.k, p) == minus_i &&
                           mat2_mul(w.l, w.l, p) == minus_i && mat2_mul(z_inv, w.z, p) == id &&
                           conj(w.j) == w.k && conj(w.k) == w.l && conj(w.l) == w.j;
  if (!scalars_ok || !matrices_ok) throw std::logic_error("construction W parameter invariants failed");
  return w;
}

Mat2 ConstructionW::minus_identity() const {
  const auto m = static_cast<std::uint8_t>(params.p - 1);
  return {m, 0, 0, m};
}

ElementId ConstructionW::element(std::uint32_t x0, std::uint32_t x1, const Mat2& m) const {
  Affine a;
  a.p = params.p;
  a.vec = {static_cast<std::uint8_t>(x0 % params.p), static_cast<std::uint8_t>(x1 % params.p)};
  a.mat = m;
  return group->id_of(a);
}

ConstructionW construction_w(std::uint32_t p, std::size_t max_order) {
  ConstructionW w;
  w.params = construction_w_params(p);
  require_within_cap(24.0L * p * p, max_order);
  auto linear = [p](const Mat2& m) { return GroupElement(Affine{p, {0, 0}, m}); };
  const std::vector<GroupElement> gens{linear(w.params.j), linear(w.params.k), linear(w.params.l),
                                       linear(w.params.z), Affine{p, {1, 0}, {1, 0, 0, 1}},
                                       Affine{p, {0, 1}, {1, 0, 0, 1}}};
  w.group = FiniteGroup::enumerate(gens, max_order, "W(" + std::to_string(p) + ")");
  return w;
}

GroupPtr matrix_group(std::uint32_t n, std::uint32_t p, const std::vector<MatModP>& generators,
                      std::size_t max_order) {
  auto rep = std::make_shared<MatrixRep>(n, p);
  std::vector<Encoding> gens;
  std::ostringstream label;
  label << "matgrp(" << n << ", " << p;
  for (const auto& m : generators) {
    Encoding e = rep->encode(m);
    (void)rep->invert(e);  // throws SingularGenerator
    gens.push_back(std::move(e));
    label << ", " << rep->format(gens.back());
  }
  label << ')';
  return FiniteGroup::enumerate(rep, gens, max_order, label.str());
}

}  // namespace comgraph
