#include "comgraph/element.hpp"

#include <stdexcept>

#include "comgraph/errors.hpp"

namespace comgraph {

Perm Perm::identity(std::size_t n) {
  Perm perm;
  perm.images.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm.images[i] = static_cast<std::uint8_t>(i);
  return perm;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint8_t>>& cycles) {
  Perm perm = identity(n);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint8_t from = cycle[i];
      if (from >= n || used[from]) throw std::invalid_argument("cycles are not disjoint points of the domain");
      used[from] = true;
      perm.images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return perm;
}

bool Perm::is_bijection() const {
  std::vector<bool> hit(images.size(), false);
  for (const auto image : images) {
    if (image >= images.size() || hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

Perm Perm::then(const Perm& other) const {
  if (other.degree() != degree()) throw std::invalid_argument("permutation degrees differ");
  Perm out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = other.images[images[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[images[i]] = static_cast<std::uint8_t>(i);
  return out;
}

MatModP MatModP::identity(std::uint32_t n, std::uint32_t p) {
  MatModP m{n, p, std::vector<std::uint8_t>(std::size_t{n} * n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatModP MatModP::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  if (p < 2 || p > 255) throw UnsupportedParams("matrix modulus out of range");
  const auto n = static_cast<std::uint32_t>(rows.size());
  MatModP m{n, p, std::vector<std::uint8_t>(std::size_t{n} * n, 0)};
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw IncompatibleGenerators("matrix is not square");
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::int64_t mod = static_cast<std::int64_t>(p);
      m.at(i, j) = static_cast<std::uint8_t>(((rows[i][j] % mod) + mod) % mod);
    }
  }
  return m;
}

std::string_view variant_name(const GroupElement& element) {
  switch (element.index()) {
    case 0: return "perm";
    case 1: return "matrix";
    case 2: return "affine";
    case 3: return "wreath";
    default: return "central";
  }
}

}  // namespace comgraph
