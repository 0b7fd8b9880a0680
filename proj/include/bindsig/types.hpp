#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bindsig {

/// Error raised by the signature/term parsers, with 1-based position info.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

/// Error raised when a term or type fails to check.
struct TypeCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An object-language type expression: a base name, a type-constructor
// application, or (inside arity schemas only) a metavariable.
// Immutable; copies share the underlying node.
class TypeExpr {
 public:
  TypeExpr() : TypeExpr(base("?")) {}

  static TypeExpr base(std::string name) {
    return TypeExpr(std::move(name), {}, false);
  }
  static TypeExpr apply(std::string tycon, std::vector<TypeExpr> args) {
    return TypeExpr(std::move(tycon), std::move(args), false);
  }
  static TypeExpr metavar(std::string name) {
    return TypeExpr(std::move(name), {}, true);
  }

  const std::string& head() const { return node_->head; }
  const std::vector<TypeExpr>& args() const { return node_->args; }
  bool is_metavar() const { return node_->meta; }

  bool contains_metavar() const {
    if (node_->meta) return true;
    for (const auto& a : node_->args)
      if (a.contains_metavar()) return true;
    return false;
  }

  /// Constructor-nesting depth; a bare name counts 1.
  int depth() const {
    int d = 0;
    for (const auto& a : node_->args) d = std::max(d, a.depth());
    return d + 1;
  }

  /// Grammar form: IDENT | "(" IDENT arg+ ")".
  std::string str() const {
    if (node_->args.empty()) return node_->head;
    std::string out = "(" + node_->head;
    for (const auto& a : node_->args) out += " " + a.str();
    out += ")";
    return out;
  }

  friend bool operator==(const TypeExpr& a, const TypeExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->meta != b.node_->meta || a.node_->head != b.node_->head ||
        a.node_->args.size() != b.node_->args.size())
      return false;
    for (std::size_t i = 0; i < a.node_->args.size(); ++i)
      if (!(a.node_->args[i] == b.node_->args[i])) return false;
    return true;
  }
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) {
    return !(a == b);
  }

 private:
  struct Node {
    std::string head;
    std::vector<TypeExpr> args;
    bool meta;
  };
  TypeExpr(std::string head, std::vector<TypeExpr> args, bool meta)
      : node_(std::make_shared<Node>(
            Node{std::move(head), std::move(args), meta})) {}
  std::shared_ptr<const Node> node_;
};

struct TyCon {
  std::string name;
  std::size_t arity = 0;
};

// The set T of object types: either a finite enumeration of names or the
// closure of a family of type constructors.
struct TypeUniverse {
  enum class Kind { Enumerated, Generated };
  Kind kind = Kind::Enumerated;
  std::vector<std::string> names;  // enumerated case
  std::vector<TyCon> tycons;       // generated case

  bool has_base(const std::string& n) const {
    if (kind == Kind::Enumerated) {
      for (const auto& m : names)
        if (m == n) return true;
      return false;
    }
    for (const auto& c : tycons)
      if (c.name == n && c.arity == 0) return true;
    return false;
  }

  std::optional<std::size_t> tycon_arity(const std::string& n) const {
    if (kind != Kind::Generated) return std::nullopt;
    for (const auto& c : tycons)
      if (c.name == n) return c.arity;
    return std::nullopt;
  }
};

}  // namespace bindsig
