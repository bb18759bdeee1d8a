#include "diffgraph/group_spec.hpp"

#include <cctype>

namespace dg {

GroupSpec GroupSpec::cyclic(u64 n) {
  if (n < 1) throw Error("Z n requires n >= 1");
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::dihedral(u64 n) {
  if (n < 1) throw Error("D n requires n >= 1");
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::symmetric(u64 n) {
  if (n < 1) throw Error("S n requires n >= 1");
  GroupSpec s;
  s.kind = Kind::Symmetric;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::alternating(u64 n) {
  if (n < 1) throw Error("A n requires n >= 1");
  GroupSpec s;
  s.kind = Kind::Alternating;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::semidirect(u64 n, u64 m, u64 g) {
  if (n < 1 || m < 1) throw Error("sd sizes must be >= 1");
  u64 gr = g % n;
  if (gcd_u64(gr, n) != 1)
    throw Error("sd(Z" + std::to_string(n) + ",Z" + std::to_string(m) + "," +
                std::to_string(g) + "): gcd(g,n) != 1");
  if (mod_pow(gr, m, n) != 1 % n)
    throw Error("sd(Z" + std::to_string(n) + ",Z" + std::to_string(m) + "," +
                std::to_string(g) + "): g^m != 1 (mod n), not an action of Z_m");
  GroupSpec s;
  s.kind = Kind::Semidirect;
  s.n = n;
  s.m = m;
  s.g = g;
  return s;
}

GroupSpec GroupSpec::cayley_file(std::string path) {
  GroupSpec s;
  s.kind = Kind::CayleyFile;
  s.path = std::move(path);
  return s;
}

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(n);
    case Kind::Dihedral: return "D" + std::to_string(n);
    case Kind::Symmetric: return "S" + std::to_string(n);
    case Kind::Alternating: return "A" + std::to_string(n);
    case Kind::Semidirect:
      return "sd(Z" + std::to_string(n) + ",Z" + std::to_string(m) + "," + std::to_string(g) + ")";
    case Kind::CayleyFile: return "cayley(" + path + ")";
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].str();
      }
      return out;
    }
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = parse_product();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  u64 parse_int() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    u64 v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<u64>(text_[pos_] - '0');
      if (v > (u64(1) << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  bool lookahead_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    // must not run into a longer identifier
    std::size_t after = pos_ + w.size();
    if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after])) &&
        std::isalpha(static_cast<unsigned char>(w.back())))
      return false;
    return true;
  }

  GroupSpec parse_product() {
    std::vector<GroupSpec> factors;
    factors.push_back(parse_atom());
    while (true) {
      skip_ws();
      // infix 'x': a lone letter x (or the times sign written as 'x')
      if (peek() == 'x' || peek() == 'X') {
        std::size_t after = pos_ + 1;
        bool is_sep = after >= text_.size() ||
                      !std::isalnum(static_cast<unsigned char>(text_[after]));
        if (!is_sep) break;
        ++pos_;
        factors.push_back(parse_atom());
        continue;
      }
      break;
    }
    if (factors.size() == 1) return std::move(factors[0]);
    return GroupSpec::product(std::move(factors));
  }

  GroupSpec parse_atom() {
    skip_ws();
    if (consume('(')) {
      GroupSpec inner = parse_product();
      skip_ws();
      expect(')');
      return inner;
    }
    if (lookahead_word("sd")) {
      pos_ += 2;
      skip_ws();
      expect('(');
      skip_ws();
      if (!consume('Z')) fail("sd expects Z<n> as first argument");
      u64 n = parse_int();
      skip_ws();
      expect(',');
      skip_ws();
      if (!consume('Z')) fail("sd expects Z<m> as second argument");
      u64 m = parse_int();
      skip_ws();
      expect(',');
      u64 g = parse_int();
      skip_ws();
      expect(')');
      std::size_t at = pos_;
      try {
        return GroupSpec::semidirect(n, m, g);
      } catch (const Error& e) {
        throw ParseError(e.what(), at);
      }
    }
    if (lookahead_word("cayley")) {
      pos_ += 6;
      skip_ws();
      expect('(');
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      if (pos_ == text_.size()) fail("unterminated cayley(...)");
      std::string path(text_.substr(start, pos_ - start));
      ++pos_;
      if (path.empty()) fail("cayley() requires a path");
      return GroupSpec::cayley_file(std::move(path));
    }
    char c = peek();
    if (c == 'Z' || c == 'D' || c == 'S' || c == 'A') {
      ++pos_;
      u64 n = parse_int();
      switch (c) {
        case 'Z': return GroupSpec::cyclic(n);
        case 'D': return GroupSpec::dihedral(n);
        case 'S': return GroupSpec::symmetric(n);
        default: return GroupSpec::alternating(n);
      }
    }
    fail("expected a group term (Z/D/S/A/sd/cayley)");
  }
};

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty group spec", 0);
  return Parser(text).parse();
}

}  // namespace dg
