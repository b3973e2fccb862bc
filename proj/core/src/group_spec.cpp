#include "comgraph/group_spec.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "comgraph/constructions.hpp"
#include "comgraph/errors.hpp"

namespace comgraph {

namespace {

struct NameInfo {
  GroupSpec::Kind kind;
  std::size_t ints;      // integer parameters expected
  std::size_t children;  // nested specs expected (before integers)
};

const std::map<std::string, NameInfo, std::less<>>& names() {
  static const std::map<std::string, NameInfo, std::less<>> table{
      {"sym", {GroupSpec::Kind::standard, 1, 0}},
      {"alt", {GroupSpec::Kind::standard, 1, 0}},
      {"cyc", {GroupSpec::Kind::standard, 1, 0}},
      {"dih", {GroupSpec::Kind::standard, 1, 0}},
      {"q8", {GroupSpec::Kind::standard, 0, 0}},
      {"sl23", {GroupSpec::Kind::standard, 0, 0}},
      {"wr", {GroupSpec::Kind::wreath, 1, 1}},
      {"cprod", {GroupSpec::Kind::central_product, 1, 2}},
      {"dprod", {GroupSpec::Kind::direct_product, 0, 2}},
      {"ult", {GroupSpec::Kind::ult, 2, 0}},
      {"extra", {GroupSpec::Kind::extraspecial, 2, 0}},
      {"W", {GroupSpec::Kind::construction_w, 1, 0}},
      {"matgrp", {GroupSpec::Kind::matrix_group, 2, 0}},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("expected a group name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::int64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40)) fail("integer out of range");
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected an integer");
    }
    return negative ? -value : value;
  }

  GroupSpec::Matrix matrix() {
    GroupSpec::Matrix rows;
    expect('[');
    do {
      std::vector<std::int64_t> row;
      expect('[');
      do {
        row.push_back(integer());
      } while (peek(',') && (++pos_, true));
      expect(']');
      rows.push_back(std::move(row));
    } while (peek(',') && (++pos_, true));
    expect(']');
    return rows;
  }

  GroupSpec parse_spec() {
    const std::size_t name_pos = (skip_ws(), pos_);
    GroupSpec spec;
    spec.name = identifier();
    const auto it = names().find(spec.name);
    if (it == names().end()) {
      pos_ = name_pos;
      fail("unknown group name '" + spec.name + "'");
    }
    const NameInfo info = it->second;
    spec.kind = info.kind;
    expect('(');

    std::size_t argument = 0;
    auto separator = [&] {
      if (argument++ > 0) expect(',');
    };
    for (std::size_t i = 0; i < info.children; ++i) {
      separator();
      spec.children.push_back(parse_spec());
    }
    for (std::size_t i = 0; i < info.ints; ++i) {
      separator();
      if (spec.kind == GroupSpec::Kind::central_product) {
        skip_ws();
        if (text_.substr(pos_, 3) == "phi") {
          pos_ += 3;
          expect('=');
        }
      }
      spec.params.push_back(integer());
    }
    if (spec.kind == GroupSpec::Kind::matrix_group) {
      while (peek(',')) {
        ++pos_;
        spec.matrices.push_back(matrix());
      }
    }
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(std::ostream& out, const GroupSpec& spec) {
  out << spec.name << '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out << ", ";
    first = false;
  };
  for (const auto& child : spec.children) {
    sep();
    print(out, child);
  }
  for (const auto value : spec.params) {
    sep();
    if (spec.kind == GroupSpec::Kind::central_product) out << "phi=";
    out << value;
  }
  for (const auto& m : spec.matrices) {
    sep();
    out << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out << ',';
      out << '[';
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (j) out << ',';
        out << m[i][j];
      }
      out << ']';
    }
    out << ']';
  }
  out << ')';
}

std::uint32_t small(std::int64_t value, const char* what) {
  if (value < 0 || value > 0xffff) throw UnsupportedParams(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(value);
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  std::ostringstream out;
  print(out, spec);
  return out.str();
}

GroupPtr build_group(const GroupSpec& spec, std::size_t max_order) {
  GroupPtr group;
  switch (spec.kind) {
    case GroupSpec::Kind::standard: {
      const std::uint32_t n = spec.params.empty() ? 0 : small(spec.params[0], "parameter");
      if (spec.name == "sym") group = symmetric(n);
      else if (spec.name == "alt") group = alternating(n);
      else if (spec.name == "cyc") group = cyclic(n);
      else if (spec.name == "dih") group = dihedral(n);
      else if (spec.name == "q8") group = quaternion8();
      else group = sl23();
      if (group->order() > max_order) throw OrderCapExceeded(max_order);
      break;
    }
    case GroupSpec::Kind::wreath:
      group = wreath(build_group(spec.children[0], max_order), small(spec.params[0], "wreath degree"), max_order);
      break;
    case GroupSpec::Kind::central_product: {
      const GroupPtr left = build_group(spec.children[0], max_order);
      const GroupPtr right = build_group(spec.children[1], max_order);
      const auto phi = identify_centers(*left, *right, small(spec.params[0], "phi order"));
      group = central_product(left, right, phi, max_order);
      break;
    }
    case GroupSpec::Kind::direct_product:
      group = direct_product(build_group(spec.children[0], max_order), build_group(spec.children[1], max_order),
                             max_order);
      break;
    case GroupSpec::Kind::ult:
      group = ult(small(spec.params[0], "ult size"), small(spec.params[1], "ult modulus"), max_order);
      break;
    case GroupSpec::Kind::extraspecial:
      group = extraspecial(small(spec.params[0], "prime"), small(spec.params[1], "rank"), max_order);
      break;
    case GroupSpec::Kind::construction_w:
      group = construction_w(small(spec.params[0], "prime"), max_order).group;
      break;
    case GroupSpec::Kind::matrix_group: {
      const std::uint32_t n = small(spec.params[0], "matrix size");
      const std::uint32_t p = small(spec.params[1], "modulus");
      std::vector<MatModP> gens;
      for (const auto& rows : spec.matrices) {
        if (rows.size() != n) throw IncompatibleGenerators("matrix generator has the wrong size");
        gens.push_back(MatModP::from_rows(p, rows));
      }
      group = matrix_group(n, p, gens, max_order);
      break;
    }
  }
  std::const_pointer_cast<FiniteGroup>(group)->set_label(to_string(spec));
  return group;
}

}  // namespace comgraph
