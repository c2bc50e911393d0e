#include "rrs/property.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace rrs {

struct Property::Node {
  enum class Kind {
    var, one, zero, mul, join, arrow, neg,
    eq, le, conj, implies, iff,
  };
  Kind kind;
  int var = -1;  // index into the sorted variable list
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Property::Node;
using Kind = Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

std::string ascii_spelling(std::string_view text) {
  static const std::array<std::pair<std::string_view, std::string_view>, 7> unicode = {{
      {"⇔", "<=>"},
      {"⇒", "=>"},
      {"→", "->"},
      {"⊔", "|"},
      {"·", "*"},
      {"⪯", "<="},
      {"∧", "&"},
  }};
  std::string out(text);
  for (const auto& [from, to] : unicode) {
    for (std::size_t pos = out.find(from); pos != std::string::npos; pos = out.find(from, pos)) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  NodePtr formula() {
    NodePtr left = conjunction();
    if (accept("<=>")) return make(Kind::iff, left, conjunction());
    if (accept("=>")) return make(Kind::implies, left, conjunction());
    return left;
  }

  void finish() {
    skip_space();
    if (pos_ != s_.size()) fail("unexpected input");
  }

  std::vector<char> seen_vars;
  bool uses_join = false;
  bool uses_zero = false;

 private:
  NodePtr conjunction() {
    NodePtr left = atom();
    while (accept("&")) left = make(Kind::conj, left, atom());
    return left;
  }

  NodePtr atom() {
    NodePtr left = term();
    // "<=" must be tried before "=" and must not swallow "<=>".
    if (peek("<=>")) fail("expected '=' or '<='");
    if (accept("<=")) return make(Kind::le, left, term());
    if (peek("=>")) fail("expected '=' or '<='");
    if (accept("=")) return make(Kind::eq, left, term());
    fail("expected '=' or '<='");
  }

  NodePtr term() {
    NodePtr left = join();
    if (accept("->")) return make(Kind::arrow, left, term());
    return left;
  }

  NodePtr join() {
    NodePtr left = product();
    while (accept("|")) {
      uses_join = true;
      left = make(Kind::join, left, product());
    }
    return left;
  }

  NodePtr product() {
    NodePtr left = postfix();
    while (accept("*")) left = make(Kind::mul, left, postfix());
    return left;
  }

  NodePtr postfix() {
    NodePtr e = primary();
    while (accept("'")) {
      uses_zero = true;
      e = make(Kind::neg, e, nullptr);
    }
    return e;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = term();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (c == '1' || c == '0') {
      ++pos_;
      if (c == '0') uses_zero = true;
      return std::make_shared<Node>(Node{c == '1' ? Kind::one : Kind::zero, -1, nullptr, nullptr});
    }
    if (std::islower(static_cast<unsigned char>(c)) != 0) {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])) != 0) {
        fail("variables are single lowercase letters");
      }
      if (std::find(seen_vars.begin(), seen_vars.end(), c) == seen_vars.end()) {
        seen_vars.push_back(c);
      }
      // Variable indices are fixed up once every variable is known.
      return std::make_shared<Node>(Node{Kind::var, c, nullptr, nullptr});
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  static NodePtr make(Kind k, NodePtr a, NodePtr b) {
    return std::make_shared<Node>(Node{k, -1, std::move(a), std::move(b)});
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_space();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("property: " + what + " at offset " + std::to_string(pos_) + " in '" + s_ +
                     "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

NodePtr bind_vars(const NodePtr& n, const std::vector<char>& vars) {
  if (!n) return n;
  if (n->kind == Kind::var) {
    const auto it = std::find(vars.begin(), vars.end(), static_cast<char>(n->var));
    return std::make_shared<Node>(
        Node{Kind::var, static_cast<int>(it - vars.begin()), nullptr, nullptr});
  }
  return std::make_shared<Node>(Node{n->kind, -1, bind_vars(n->lhs, vars), bind_vars(n->rhs, vars)});
}

struct Evaluator {
  const Model& m;
  const std::vector<Element>& env;

  Element term(const Node& n) const {
    switch (n.kind) {
      case Kind::var:
        return env[static_cast<std::size_t>(n.var)];
      case Kind::one:
        return m.unit;
      case Kind::zero:
        return *m.zero;
      case Kind::mul:
        return m.mul(term(*n.lhs), term(*n.rhs));
      case Kind::join:
        return (*m.join)(term(*n.lhs), term(*n.rhs));
      case Kind::arrow:
        return m.arrow(term(*n.lhs), term(*n.rhs));
      case Kind::neg:
        return m.arrow(term(*n.lhs), *m.zero);
      default:
        throw Error("property: formula used as a term");
    }
  }

  bool truth(const Node& n) const {
    switch (n.kind) {
      case Kind::eq:
        return term(*n.lhs) == term(*n.rhs);
      case Kind::le: {
        const Element a = term(*n.lhs);
        const Element b = term(*n.rhs);
        return m.join ? (*m.join)(a, b) == b : m.rel.holds(a, b);
      }
      case Kind::conj:
        return truth(*n.lhs) && truth(*n.rhs);
      case Kind::implies:
        return !truth(*n.lhs) || truth(*n.rhs);
      case Kind::iff:
        return truth(*n.lhs) == truth(*n.rhs);
      default:
        throw Error("property: term used as a formula");
    }
  }
};

}  // namespace

Property Property::parse(std::string_view text) {
  Parser parser(ascii_spelling(text));
  NodePtr root = parser.formula();
  parser.finish();
  Property p;
  p.text_ = std::string(text);
  p.vars_ = parser.seen_vars;
  std::sort(p.vars_.begin(), p.vars_.end());
  p.uses_join_ = parser.uses_join;
  p.uses_zero_ = parser.uses_zero;
  p.root_ = bind_vars(root, p.vars_);
  return p;
}

std::optional<std::vector<Element>> Property::find_violation(const Model& m) const {
  if (uses_join_ && !m.join) throw PreconditionError("property uses '|' but the model has no join");
  if (uses_zero_ && !m.zero) throw PreconditionError("property uses 0 but the model has no zero");
  std::vector<Element> env(vars_.size(), 0);
  const Evaluator eval{m, env};
  while (true) {
    if (!eval.truth(*root_)) return env;
    std::size_t i = env.size();
    while (true) {
      if (i == 0) return std::nullopt;
      --i;
      if (++env[i] < m.size) break;
      env[i] = 0;
    }
  }
}

}  // namespace rrs
