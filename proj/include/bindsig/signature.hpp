#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bindsig/types.hpp"

namespace bindsig {

/// One constructor argument: the types bound in it and its result type.
struct ArityArg {
  std::vector<TypeExpr> binders;
  TypeExpr result;
};

// A named arity schema.  Metavariables range over concrete object types and
// are instantiated explicitly; a schema without metavariables is a single
// arity.
struct AritySchema {
  std::string name;
  std::vector<std::string> metavars;
  std::vector<ArityArg> args;
  TypeExpr output;
};

struct Signature {
  std::string name;
  TypeUniverse universe;
  std::vector<AritySchema> schemas;

  const AritySchema* find(const std::string& schema) const {
    for (const auto& s : schemas)
      if (s.name == schema) return &s;
    return nullptr;
  }
};

/// Metavariable-free arity.
struct ConcreteArity {
  std::vector<ArityArg> args;
  TypeExpr output;
};

/// Ordered metavariable assignment (follows the schema's declaration order).
using TyAssignment = std::vector<std::pair<std::string, TypeExpr>>;

std::string print_ty_assignment(const TyAssignment& a);

/// Parses and validates a signature file; throws ParseError.
Signature parse_signature(const std::string& text);

/// Canonical form of the signature-file grammar.
std::string print_signature(const Signature& sig);

/// All violated invariants, empty when the signature is well-formed.
std::vector<std::string> validate_signature(const Signature& sig);

/// Replaces every metavariable; throws TypeCheckError on a missing binding.
ConcreteArity instantiate_arity(const AritySchema& schema,
                                const TyAssignment& assignment);

TypeExpr substitute_metavars(const TypeExpr& t, const TyAssignment& assignment);

// All concrete type expressions of nesting depth <= max_depth, depth-major,
// then tycon declaration order, then left-to-right over argument tuples.
std::vector<TypeExpr> enumerate_type_exprs(const TypeUniverse& universe,
                                           int max_depth);

/// All metavariable assignments for the schema with values drawn from
/// enumerate_type_exprs(universe, ty_depth), odometer order (first
/// metavariable slowest).
std::vector<TyAssignment> enumerate_assignments(const AritySchema& schema,
                                                const TypeUniverse& universe,
                                                int ty_depth);

/// All (schema, assignment) pairs whose instantiated output equals t.
std::vector<std::pair<const AritySchema*, TyAssignment>> arities_with_output(
    const Signature& sig, const TypeExpr& t, int ty_depth);

// The unique algebra map out of the initial algebra of a generated universe:
// replaces each constructor by the given carrier operation.
template <typename Carrier>
Carrier fold_type_algebra(
    const TypeUniverse& universe,
    const std::map<std::string,
                   std::function<Carrier(const std::vector<Carrier>&)>>& ops,
    const TypeExpr& t) {
  if (t.is_metavar())
    throw TypeCheckError("fold_type_algebra: metavariable " + t.head());
  auto it = ops.find(t.head());
  if (it == ops.end())
    throw TypeCheckError("fold_type_algebra: no operation for tycon " +
                         t.head());
  auto arity = universe.tycon_arity(t.head());
  if (arity && *arity != t.args().size())
    throw TypeCheckError("fold_type_algebra: arity mismatch at " + t.head());
  std::vector<Carrier> sub;
  sub.reserve(t.args().size());
  for (const auto& a : t.args())
    sub.push_back(fold_type_algebra(universe, ops, a));
  return it->second(sub);
}

}  // namespace bindsig
