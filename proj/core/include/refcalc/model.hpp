#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "refcalc/json_io.hpp"
#include "refcalc/support_calculus.hpp"

namespace refcalc {

/// Declarations of the model language, one per statement:
///
///   atom A
///   index I = Prod(Atom A, Atom A)
///   family P : I = RECT(FIN, FULL)          # or an inline index after ':'
///   module M = P over Fp:5                  # ring defaults to Q
///   module D = dual(M)
///   module H = hom(M, N)                    # any build kind name
///   claim equal(M, D)
///
/// Atoms must be declared before use and names are unique across declarations.
struct AtomDecl {
  std::string name;
  friend bool operator==(const AtomDecl&, const AtomDecl&) = default;
};

struct IndexDecl {
  std::string name;
  IndexTerm term;
  friend bool operator==(const IndexDecl&, const IndexDecl&) = default;
};

struct FamilyDecl {
  std::string name;
  std::string index_ref;  // empty when the index is written inline
  IndexTerm index;
  Family family;
  friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

struct ModuleDecl {
  enum class Kind { Family, Dual, Build };
  std::string name;
  Kind kind = Kind::Family;
  std::string family_ref;                  // Family
  std::optional<CoefficientRing> ring;     // Family, when written
  BuildKind build = BuildKind::Product;    // Build
  std::vector<std::string> args;           // Dual: 1, Build: 2
  std::optional<ModuleObject> value;       // always set after parsing
  friend bool operator==(const ModuleDecl& a, const ModuleDecl& b) {
    return a.name == b.name && a.kind == b.kind && a.family_ref == b.family_ref && a.ring == b.ring &&
           a.build == b.build && a.args == b.args;
  }
};

struct ClaimDecl {
  std::string left;
  std::string right;
  friend bool operator==(const ClaimDecl&, const ClaimDecl&) = default;
};

using Declaration = std::variant<AtomDecl, IndexDecl, FamilyDecl, ModuleDecl, ClaimDecl>;

struct NamedStructure {
  std::string name;
  StructureBlock block;
};

struct NamedTower {
  std::string name;
  AlgebraTower tower;
};

struct Model {
  std::vector<Declaration> declarations;
  std::vector<NamedStructure> structures;  // from JSON files
  std::vector<NamedTower> towers;          // from JSON files

  std::vector<const FamilyDecl*> families() const;
  std::vector<const ModuleDecl*> modules() const;
  std::vector<const ClaimDecl*> claims() const;
  const ModuleDecl& module(const std::string& name) const;  // throws TypeError if absent
  // Appends another model's contents.
  void merge(Model other);
};

/// Throws ParseError on syntax errors and on type errors; type errors name the
/// declaration, e.g. "type error in family P: RECT requires a Prod index, ...".
Model parse_model(std::string_view text);
/// One declaration per line in source order.
std::string print_model(const Model& m);

/// Files ending in .json hold a structure block or a tower; anything else is
/// model text. Throws Error when the file cannot be read.
Model parse_model_file(const std::string& path);

}  // namespace refcalc
