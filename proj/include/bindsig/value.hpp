#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bindsig/term.hpp"

namespace bindsig {

// An element of some monad/module carrier: a term (syntax monads), a
// variable-or-bottom (exception monad), a tuple (product modules and
// argument tuples), or a named atom (constant modules).
class Value {
 public:
  enum class Kind { TermV, ExcVar, ExcBottom, Tuple, Atom };

  Value() : Value(atom("?")) {}

  static Value term(Term t);
  static Value exc_var(std::size_t index, TypeExpr type);
  static Value exc_bottom(TypeExpr type);
  static Value tuple(std::vector<Value> items);
  static Value atom(std::string name);

  Kind kind() const { return node_->kind; }
  bool is_term() const { return node_->kind == Kind::TermV; }
  const Term& term_value() const { return node_->term; }
  std::size_t exc_index() const { return node_->index; }
  const TypeExpr& exc_type() const { return node_->type; }
  const std::vector<Value>& items() const { return node_->items; }
  const std::string& atom_name() const { return node_->atom; }

  std::string str() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    Term term;
    std::size_t index = 0;
    TypeExpr type;
    std::vector<Value> items;
    std::string atom;
  };
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace bindsig
