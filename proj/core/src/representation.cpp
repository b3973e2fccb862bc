#include "comgraph/representation.hpp"

#include <algorithm>
#include <sstream>

#include "comgraph/errors.hpp"
#include "comgraph/finite_group.hpp"
#include "comgraph/number_theory.hpp"

namespace comgraph {

namespace {

std::uint8_t byte_at(EncodingView bytes, std::size_t i) { return static_cast<std::uint8_t>(bytes[i]); }

std::string format_perm(const std::uint8_t* images, std::size_t n) {
  std::ostringstream out;
  std::vector<bool> seen(n, false);
  bool any = false;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start] || images[start] == start) continue;
    any = true;
    out << '(';
    std::size_t point = start;
    bool first = true;
    while (!seen[point]) {
      seen[point] = true;
      if (!first) out << ' ';
      out << point;
      first = false;
      point = images[point];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

std::string format_matrix(const std::uint8_t* entries, std::uint32_t n) {
  std::ostringstream out;
  out << '[';
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i) out << ',';
    out << '[';
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << static_cast<unsigned>(entries[i * n + j]);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

void put_u16(char* out, std::uint32_t value) {
  out[0] = static_cast<char>((value >> 8) & 0xffu);
  out[1] = static_cast<char>(value & 0xffu);
}

std::uint32_t get_u16(const char* in) {
  return (std::uint32_t{static_cast<std::uint8_t>(in[0])} << 8) | static_cast<std::uint8_t>(in[1]);
}

void put_u32(char* out, std::uint32_t value) {
  for (int i = 0; i < 4; ++i) out[i] = static_cast<char>((value >> (24 - 8 * i)) & 0xffu);
}

std::uint32_t get_u32(const char* in) {
  std::uint32_t value = 0;
  for (int i = 0; i < 4; ++i) value = (value << 8) | static_cast<std::uint8_t>(in[i]);
  return value;
}

}  // namespace

Encoding Representation::multiply(EncodingView a, EncodingView b) const {
  Encoding out(width(), '\0');
  multiply(a, b, out.data());
  return out;
}

Encoding Representation::invert(EncodingView a) const {
  Encoding out(width(), '\0');
  invert(a, out.data());
  return out;
}

Encoding Representation::power(EncodingView a, std::uint64_t exponent) const {
  Encoding result = identity();
  Encoding base(a);
  Encoding scratch(width(), '\0');
  while (exponent > 0) {
    if (exponent & 1u) {
      multiply(result, base, scratch.data());
      result.swap(scratch);
    }
    exponent >>= 1u;
    if (exponent > 0) {
      multiply(base, base, scratch.data());
      base.swap(scratch);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Permutations

PermutationRep::PermutationRep(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > 255) throw UnsupportedParams("permutation degree must be in [1, 255]");
}

Encoding PermutationRep::identity() const {
  Encoding out(degree_, '\0');
  for (std::size_t i = 0; i < degree_; ++i) out[i] = static_cast<char>(i);
  return out;
}

void PermutationRep::multiply(EncodingView a, EncodingView b, char* out) const {
  for (std::size_t i = 0; i < degree_; ++i) out[i] = b[byte_at(a, i)];
}

void PermutationRep::invert(EncodingView a, char* out) const {
  for (std::size_t i = 0; i < degree_; ++i) out[byte_at(a, i)] = static_cast<char>(i);
}

Encoding PermutationRep::encode(const GroupElement& element) const {
  const auto* perm = std::get_if<Perm>(&element);
  if (!perm) throw IncompatibleGenerators("expected a permutation, got " + std::string(variant_name(element)));
  if (perm->degree() != degree_) throw IncompatibleGenerators("permutation degree mismatch");
  if (!perm->is_bijection()) throw IncompatibleGenerators("permutation images are not a bijection");
  return Encoding(perm->images.begin(), perm->images.end());
}

GroupElement PermutationRep::decode(EncodingView bytes) const {
  Perm perm;
  perm.images.assign(bytes.begin(), bytes.end());
  return perm;
}

std::string PermutationRep::format(EncodingView bytes) const {
  return format_perm(reinterpret_cast<const std::uint8_t*>(bytes.data()), degree_);
}

// ---------------------------------------------------------------------------
// Matrices mod p

MatrixRep::MatrixRep(std::uint32_t n, std::uint32_t p) : n_(n), p_(p) {
  if (n == 0 || n > 15) throw UnsupportedParams("matrix size must be in [1, 15]");
  if (!is_prime(p) || p > 251) throw UnsupportedParams("matrix modulus must be a prime below 256");
}

Encoding MatrixRep::identity() const {
  Encoding out(width(), '\0');
  for (std::uint32_t i = 0; i < n_; ++i) out[i * n_ + i] = 1;
  return out;
}

void MatrixRep::multiply(EncodingView a, EncodingView b, char* out) const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::uint32_t sum = 0;
      for (std::uint32_t k = 0; k < n_; ++k) sum += std::uint32_t{byte_at(a, i * n_ + k)} * byte_at(b, k * n_ + j);
      out[i * n_ + j] = static_cast<char>(sum % p_);
    }
  }
}

void MatrixRep::invert(EncodingView a, char* out) const {
  // Gauss-Jordan on [A | I].
  const std::uint32_t cols = 2 * n_;
  std::vector<std::uint32_t> work(std::size_t{n_} * cols, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) work[i * cols + j] = byte_at(a, i * n_ + j);
    work[i * cols + n_ + i] = 1;
  }
  for (std::uint32_t col = 0; col < n_; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n_ && work[pivot * cols + col] == 0) ++pivot;
    if (pivot == n_) throw SingularGenerator("matrix is singular mod " + std::to_string(p_));
    if (pivot != col) {
      for (std::uint32_t j = 0; j < cols; ++j) std::swap(work[pivot * cols + j], work[col * cols + j]);
    }
    const std::uint32_t scale = inv_mod(work[col * cols + col], p_);
    for (std::uint32_t j = 0; j < cols; ++j) work[col * cols + j] = work[col * cols + j] * scale % p_;
    for (std::uint32_t row = 0; row < n_; ++row) {
      if (row == col || work[row * cols + col] == 0) continue;
      const std::uint32_t factor = work[row * cols + col];
      for (std::uint32_t j = 0; j < cols; ++j) {
        work[row * cols + j] = (work[row * cols + j] + (p_ - factor) * work[col * cols + j]) % p_;
      }
    }
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) out[i * n_ + j] = static_cast<char>(work[i * cols + n_ + j]);
  }
}

Encoding MatrixRep::encode(const GroupElement& element) const {
  const auto* m = std::get_if<MatModP>(&element);
  if (!m) throw IncompatibleGenerators("expected a matrix, got " + std::string(variant_name(element)));
  if (m->n != n_ || m->p != p_) throw IncompatibleGenerators("matrix size or modulus mismatch");
  if (m->entries.size() != width()) throw IncompatibleGenerators("matrix entry count mismatch");
  for (const auto entry : m->entries) {
    if (entry >= p_) throw IncompatibleGenerators("matrix entry not reduced mod p");
  }
  return Encoding(m->entries.begin(), m->entries.end());
}

GroupElement MatrixRep::decode(EncodingView bytes) const {
  MatModP m{n_, p_, std::vector<std::uint8_t>(bytes.begin(), bytes.end())};
  return m;
}

std::string MatrixRep::format(EncodingView bytes) const {
  return format_matrix(reinterpret_cast<const std::uint8_t*>(bytes.data()), n_);
}

// ---------------------------------------------------------------------------
// AGL(2, p)

AffineRep::AffineRep(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > 251) throw UnsupportedParams("affine modulus must be a prime below 256");
}

Encoding AffineRep::identity() const { return Encoding{'\0', '\0', '\1', '\0', '\0', '\1'}; }

void AffineRep::inverse_matrix(const std::uint8_t* m, std::uint8_t* out) const {
  const std::uint32_t det = (std::uint32_t{m[0]} * m[3] + p_ * p_ - std::uint32_t{m[1]} * m[2]) % p_;
  if (det == 0) throw SingularGenerator("affine linear part is singular");
  const std::uint32_t inv = inv_mod(det, p_);
  out[0] = static_cast<std::uint8_t>(std::uint32_t{m[3]} * inv % p_);
  out[1] = static_cast<std::uint8_t>((p_ - m[1]) % p_ * inv % p_);
  out[2] = static_cast<std::uint8_t>((p_ - m[2]) % p_ * inv % p_);
  out[3] = static_cast<std::uint8_t>(std::uint32_t{m[0]} * inv % p_);
}

void AffineRep::multiply(EncodingView a, EncodingView b, char* out) const {
  const auto* x = reinterpret_cast<const std::uint8_t*>(a.data());
  const auto* y = reinterpret_cast<const std::uint8_t*>(b.data());
  std::uint8_t xinv[4];
  inverse_matrix(x + 2, xinv);
  // translation: x + y X^-1 with y a row vector
  const std::uint32_t t0 = (x[0] + std::uint32_t{y[0]} * xinv[0] + std::uint32_t{y[1]} * xinv[2]) % p_;
  const std::uint32_t t1 = (x[1] + std::uint32_t{y[0]} * xinv[1] + std::uint32_t{y[1]} * xinv[3]) % p_;
  const std::uint8_t* xm = x + 2;
  const std::uint8_t* ym = y + 2;
  out[0] = static_cast<char>(t0);
  out[1] = static_cast<char>(t1);
  out[2] = static_cast<char>((std::uint32_t{xm[0]} * ym[0] + std::uint32_t{xm[1]} * ym[2]) % p_);
  out[3] = static_cast<char>((std::uint32_t{xm[0]} * ym[1] + std::uint32_t{xm[1]} * ym[3]) % p_);
  out[4] = static_cast<char>((std::uint32_t{xm[2]} * ym[0] + std::uint32_t{xm[3]} * ym[2]) % p_);
  out[5] = static_cast<char>((std::uint32_t{xm[2]} * ym[1] + std::uint32_t{xm[3]} * ym[3]) % p_);
}

void AffineRep::invert(EncodingView a, char* out) const {
  const auto* x = reinterpret_cast<const std::uint8_t*>(a.data());
  std::uint8_t xinv[4];
  inverse_matrix(x + 2, xinv);
  const std::uint8_t* xm = x + 2;
  // -x X
  const std::uint32_t v0 = (std::uint32_t{x[0]} * xm[0] + std::uint32_t{x[1]} * xm[2]) % p_;
  const std::uint32_t v1 = (std::uint32_t{x[0]} * xm[1] + std::uint32_t{x[1]} * xm[3]) % p_;
  out[0] = static_cast<char>((p_ - v0) % p_);
  out[1] = static_cast<char>((p_ - v1) % p_);
  for (int i = 0; i < 4; ++i) out[2 + i] = static_cast<char>(xinv[i]);
}

Encoding AffineRep::encode(const GroupElement& element) const {
  const auto* a = std::get_if<Affine>(&element);
  if (!a) throw IncompatibleGenerators("expected an affine pair, got " + std::string(variant_name(element)));
  if (a->p != p_) throw IncompatibleGenerators("affine modulus mismatch");
  Encoding out(6, '\0');
  for (int i = 0; i < 2; ++i) out[i] = static_cast<char>(a->vec[i]);
  for (int i = 0; i < 4; ++i) out[2 + i] = static_cast<char>(a->mat[i]);
  for (const char c : out) {
    if (static_cast<std::uint8_t>(c) >= p_) throw IncompatibleGenerators("affine entry not reduced mod p");
  }
  return out;
}

GroupElement AffineRep::decode(EncodingView bytes) const {
  Affine a;
  a.p = p_;
  for (int i = 0; i < 2; ++i) a.vec[i] = byte_at(bytes, i);
  for (int i = 0; i < 4; ++i) a.mat[i] = byte_at(bytes, 2 + i);
  return a;
}

std::string AffineRep::format(EncodingView bytes) const {
  std::ostringstream out;
  out << "((" << unsigned{byte_at(bytes, 0)} << ',' << unsigned{byte_at(bytes, 1)} << "),"
      << format_matrix(reinterpret_cast<const std::uint8_t*>(bytes.data()) + 2, 2) << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// Wreath products

WreathRep::WreathRep(GroupPtr base, std::size_t n) : base_(std::move(base)), n_(n) {
  if (n == 0 || n > 255) throw UnsupportedParams("wreath degree must be in [1, 255]");
  if (base_->order() > 0xffffu) throw UnsupportedParams("wreath base group too large for 16-bit ids");
  if (base_->order() <= kCayleyTableLimit) base_->build_cayley_table();
}

Encoding WreathRep::identity() const {
  Encoding out(width(), '\0');
  for (std::size_t i = 0; i < n_; ++i) out[2 * n_ + i] = static_cast<char>(i);
  return out;
}

void WreathRep::multiply(EncodingView a, EncodingView b, char* out) const {
  const char* top_a = a.data() + 2 * n_;
  const char* top_b = b.data() + 2 * n_;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto moved = static_cast<std::uint8_t>(top_a[i]);
    const ElementId product = base_->multiply(get_u16(a.data() + 2 * i), get_u16(b.data() + 2 * moved));
    put_u16(out + 2 * i, product);
    out[2 * n_ + i] = top_b[moved];
  }
}

void WreathRep::invert(EncodingView a, char* out) const {
  const char* top_a = a.data() + 2 * n_;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto image = static_cast<std::uint8_t>(top_a[i]);
    // d_{i pi} = (a_i)^-1, top = pi^-1
    put_u16(out + 2 * image, base_->invert(get_u16(a.data() + 2 * i)));
    out[2 * n_ + image] = static_cast<char>(i);
  }
}

Encoding WreathRep::encode(const GroupElement& element) const {
  const auto* w = std::get_if<WreathElement>(&element);
  if (!w) throw IncompatibleGenerators("expected a wreath element, got " + std::string(variant_name(element)));
  if (w->base.size() != n_ || w->top.degree() != n_ || !w->top.is_bijection()) {
    throw IncompatibleGenerators("wreath element has the wrong degree");
  }
  Encoding out(width(), '\0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (w->base[i] >= base_->order()) throw IncompatibleGenerators("wreath coordinate is not a base element");
    put_u16(out.data() + 2 * i, w->base[i]);
    out[2 * n_ + i] = static_cast<char>(w->top.images[i]);
  }
  return out;
}

GroupElement WreathRep::decode(EncodingView bytes) const {
  WreathElement w;
  w.base.resize(n_);
  w.top.images.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    w.base[i] = get_u16(bytes.data() + 2 * i);
    w.top.images[i] = byte_at(bytes, 2 * n_ + i);
  }
  return w;
}

std::string WreathRep::format(EncodingView bytes) const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out << "; ";
    out << base_->format(get_u16(bytes.data() + 2 * i));
  }
  out << ']' << format_perm(reinterpret_cast<const std::uint8_t*>(bytes.data()) + 2 * n_, n_);
  return out.str();
}

// ---------------------------------------------------------------------------
// Central products

CentralProductRep::CentralProductRep(GroupPtr left, GroupPtr right, ElementId left_generator,
                                     ElementId right_generator)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_->order() <= kCayleyTableLimit) left_->build_cayley_table();
  if (right_->order() <= kCayleyTableLimit) right_->build_cayley_table();
  const ElementId right_inverse = right_->invert(right_generator);
  ElementId z = FiniteGroup::identity();
  ElementId w = FiniteGroup::identity();
  do {
    left_powers_.push_back(z);
    right_powers_.push_back(w);
    z = left_->multiply(z, left_generator);
    w = right_->multiply(w, right_inverse);
  } while (z != FiniteGroup::identity());
}

void CentralProductRep::canonicalize(ElementId h, ElementId k, char* out) const {
  ElementId best_h = h;
  ElementId best_k = k;
  for (std::size_t i = 1; i < left_powers_.size(); ++i) {
    const ElementId ch = left_->multiply(h, left_powers_[i]);
    const ElementId ck = right_->multiply(k, right_powers_[i]);
    if (ch < best_h || (ch == best_h && ck < best_k)) {
      best_h = ch;
      best_k = ck;
    }
  }
  put_u32(out, best_h);
  put_u32(out + 4, best_k);
}

Encoding CentralProductRep::identity() const { return Encoding(8, '\0'); }

void CentralProductRep::multiply(EncodingView a, EncodingView b, char* out) const {
  canonicalize(left_->multiply(get_u32(a.data()), get_u32(b.data())),
               right_->multiply(get_u32(a.data() + 4), get_u32(b.data() + 4)), out);
}

void CentralProductRep::invert(EncodingView a, char* out) const {
  canonicalize(left_->invert(get_u32(a.data())), right_->invert(get_u32(a.data() + 4)), out);
}

Encoding CentralProductRep::encode(const GroupElement& element) const {
  const auto* c = std::get_if<CentralCoset>(&element);
  if (!c) throw IncompatibleGenerators("expected a central coset, got " + std::string(variant_name(element)));
  if (c->left >= left_->order() || c->right >= right_->order()) {
    throw IncompatibleGenerators("central coset component out of range");
  }
  Encoding out(8, '\0');
  canonicalize(c->left, c->right, out.data());
  return out;
}

GroupElement CentralProductRep::decode(EncodingView bytes) const {
  return CentralCoset{get_u32(bytes.data()), get_u32(bytes.data() + 4)};
}

std::string CentralProductRep::format(EncodingView bytes) const {
  return left_->format(get_u32(bytes.data())) + "*" + right_->format(get_u32(bytes.data() + 4));
}

// ---------------------------------------------------------------------------

RepresentationPtr representation_for(std::span<const GroupElement> generators) {
  if (generators.empty()) throw IncompatibleGenerators("no generators given");
  const auto& first = generators.front();
  for (const auto& g : generators) {
    if (g.index() != first.index()) throw IncompatibleGenerators("generators mix representation variants");
  }
  RepresentationPtr rep;
  if (const auto* perm = std::get_if<Perm>(&first)) {
    rep = std::make_shared<PermutationRep>(perm->degree());
  } else if (const auto* m = std::get_if<MatModP>(&first)) {
    rep = std::make_shared<MatrixRep>(m->n, m->p);
  } else if (const auto* a = std::get_if<Affine>(&first)) {
    rep = std::make_shared<AffineRep>(a->p);
  } else {
    throw IncompatibleGenerators(std::string(variant_name(first)) + " generators need their factor groups");
  }
  for (const auto& g : generators) (void)rep->encode(g);
  return rep;
}

}  // namespace comgraph
