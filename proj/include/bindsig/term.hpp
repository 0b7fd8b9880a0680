#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bindsig/signature.hpp"
#include "bindsig/types.hpp"

namespace bindsig {

// A typing context: finite telescope of concrete object types.  Variable i
// has type telescope[i]; extension prepends, so the freshest variable is
// index 0.
struct Context {
  std::vector<TypeExpr> telescope;

  std::size_t size() const { return telescope.size(); }
  const TypeExpr& operator[](std::size_t i) const { return telescope[i]; }

  friend bool operator==(const Context& a, const Context& b) {
    if (a.telescope.size() != b.telescope.size()) return false;
    for (std::size_t i = 0; i < a.telescope.size(); ++i)
      if (!(a.telescope[i] == b.telescope[i])) return false;
    return true;
  }
};

Context ctx_extend(const TypeExpr& u, const Context& V);
Context ctx_pow(const std::vector<TypeExpr>& l, const Context& V);

std::string print_context(const Context& V);
Context parse_context(const Signature& sig, const std::string& text);

// A well-scoped term: Var(index) or Con(schema, tyargs, args).  The i-th
// argument of a Con lives over ctx_pow(binders_i, V).  Immutable with shared
// structure, so copies are cheap.
class Term {
 public:
  Term() : Term(var(0)) {}

  static Term var(std::size_t index);
  static Term con(std::string schema, TyAssignment tyargs,
                  std::vector<Term> args);

  bool is_var() const { return node_->is_var; }
  std::size_t index() const { return node_->index; }
  const std::string& schema() const { return node_->schema; }
  const TyAssignment& tyargs() const { return node_->tyargs; }
  const std::vector<Term>& args() const { return node_->args; }

  std::size_t node_count() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    bool is_var;
    std::size_t index;
    std::string schema;
    TyAssignment tyargs;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Structural equality (alpha-equivalence is automatic under de Bruijn).
inline bool term_eq(const Term& a, const Term& b) { return a == b; }

struct TypedTerm {
  Term term;
  TypeExpr type;
};

// Type-preserving variable renaming f : V -> W (indices into the target).
struct VarMap {
  Context source;
  Context target;
  std::vector<std::size_t> map;
};

// Simultaneous substitution assignment f : V -> Terms(W).
struct SubstMap {
  Context source;
  Context target;
  std::vector<Term> map;
};

TypedTerm mk_var(const Context& V, std::size_t i);
TypedTerm mk_con(const Signature& sig, const Context& V,
                 const std::string& schema, const TyAssignment& tyargs,
                 const std::vector<Term>& args);

/// Infers (and fully checks) the type of a term over V.
TypeExpr infer_type(const Signature& sig, const Context& V, const Term& x);

VarMap identity_varmap(const Context& V);
/// V -> ctx_extend(u, V), i |-> i+1.
VarMap weakening(const TypeExpr& u, const Context& V);
/// Extends f under one binder: 0 |-> 0, i+1 |-> f(i)+1.
VarMap opt_map(const TypeExpr& u, const VarMap& f);
/// Iterates opt_map in pow order.
VarMap pow_map(const std::vector<TypeExpr>& l, const VarMap& f);

Term rename(const VarMap& f, const Term& x);

/// The variable-as-term assignment eta : V -> Terms(V).
SubstMap eta_subst(const Context& V);
/// Adjusts f under one binder of type u: 0 |-> Var 0, i+1 |-> weakened f(i).
SubstMap shift(const TypeExpr& u, const SubstMap& f);
SubstMap lshift(const std::vector<TypeExpr>& l, const SubstMap& f);

Term subst(const SubstMap& f, const Term& x);

// All well-typed terms over V of type t with <= max_nodes nodes,
// metavariables instantiated from enumerate_type_exprs(ty_depth); ordered by
// node count, then schema declaration order, then recursively.
std::vector<Term> enumerate_terms(const Signature& sig, const Context& V,
                                  const TypeExpr& t, int max_nodes,
                                  int ty_depth);

Term parse_term(const Signature& sig, const Context& V,
                const std::string& text);
std::string print_term(const Term& x);

std::string print_varmap(const VarMap& f);
std::string print_substmap(const SubstMap& f);

}  // namespace bindsig
