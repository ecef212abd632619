#include "refcalc/model.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "refcalc/dsl.hpp"
#include "refcalc/errors.hpp"

namespace refcalc {

std::vector<const FamilyDecl*> Model::families() const {
  std::vector<const FamilyDecl*> out;
  for (const auto& d : declarations)
    if (const auto* f = std::get_if<FamilyDecl>(&d)) out.push_back(f);
  return out;
}

std::vector<const ModuleDecl*> Model::modules() const {
  std::vector<const ModuleDecl*> out;
  for (const auto& d : declarations)
    if (const auto* m = std::get_if<ModuleDecl>(&d)) out.push_back(m);
  return out;
}

std::vector<const ClaimDecl*> Model::claims() const {
  std::vector<const ClaimDecl*> out;
  for (const auto& d : declarations)
    if (const auto* c = std::get_if<ClaimDecl>(&d)) out.push_back(c);
  return out;
}

const ModuleDecl& Model::module(const std::string& name) const {
  for (const auto* m : modules())
    if (m->name == name) return *m;
  throw TypeError("no module named " + name);
}

void Model::merge(Model other) {
  for (auto& d : other.declarations) declarations.push_back(std::move(d));
  for (auto& s : other.structures) structures.push_back(std::move(s));
  for (auto& t : other.towers) towers.push_back(std::move(t));
}

namespace {

void collect_atoms(const IndexTerm& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case IndexTerm::Kind::Atom:
      out.push_back(t.name());
      break;
    case IndexTerm::Kind::FinSet:
      break;
    default:
      collect_atoms(t.left(), out);
      collect_atoms(t.right(), out);
  }
}

class ModelParser {
 public:
  explicit ModelParser(std::string_view text) : lex_(text) {}

  Model run() {
    Model m;
    while (!lex_.at_end()) m.declarations.push_back(declaration());
    return m;
  }

 private:
  [[noreturn]] void type_error(const dsl::Token& at, const std::string& decl, const std::string& msg) {
    throw ParseError("type error in " + decl + ": " + msg, at.line, at.column);
  }

  std::string fresh_name(const std::string& what) {
    const dsl::Token at = lex_.peek();
    std::string name = lex_.expect_identifier(what + " name");
    if (!names_.insert(name).second) lex_.fail_at(at, "duplicate name '" + name + "'");
    return name;
  }

  // Re-throws parse errors from the term grammars with the declaration named.
  template <class F>
  auto within(const std::string& decl, F&& f) {
    try {
      return f();
    } catch (const ParseError& e) {
      const std::string& msg = e.bare_message();
      if (msg.rfind("type error: ", 0) == 0)
        throw ParseError("type error in " + decl + ": " + msg.substr(12), e.line(), e.column());
      throw;
    }
  }

  IndexTerm index_term(const std::string& decl) {
    const dsl::Token at = lex_.peek();
    IndexTerm t = within(decl, [&] { return parse_index_term(lex_); });
    std::vector<std::string> used;
    collect_atoms(t, used);
    for (const auto& a : used)
      if (!atoms_.count(a)) type_error(at, decl, "undeclared atom '" + a + "'");
    return t;
  }

  CoefficientRing ring() {
    const dsl::Token at = lex_.peek();
    std::string text = lex_.expect_identifier("coefficient ring (Z, Q, Fp:p, Dual:p)");
    if (lex_.accept(":")) text += ":" + std::to_string(lex_.expect_integer("characteristic"));
    try {
      return CoefficientRing::parse(text);
    } catch (const Error& e) {
      lex_.fail_at(at, e.what());
    }
  }

  const ModuleObject& module_ref(const std::string& decl) {
    const dsl::Token at = lex_.peek();
    const std::string name = lex_.expect_identifier("module name");
    const auto it = modules_.find(name);
    if (it == modules_.end()) type_error(at, decl, "unknown module '" + name + "'");
    return it->second;
  }

  Declaration declaration() {
    const dsl::Token head = lex_.peek();
    if (lex_.accept("atom")) {
      const dsl::Token at = lex_.peek();
      std::string name = lex_.expect_identifier("atom name");
      if (!atoms_.insert(name).second) lex_.fail_at(at, "duplicate atom name '" + name + "'");
      if (!names_.insert(name).second) lex_.fail_at(at, "duplicate name '" + name + "'");
      return AtomDecl{name};
    }
    if (lex_.accept("index")) {
      std::string name = fresh_name("index");
      lex_.expect("=", "'='");
      IndexDecl d{name, index_term("index " + name)};
      indices_.emplace(d.name, d.term);
      return d;
    }
    if (lex_.accept("family")) {
      const std::string name = fresh_name("family");
      const std::string decl = "family " + name;
      lex_.expect(":", "':'");
      std::string ref;
      IndexTerm index = IndexTerm::finset(0);
      const dsl::Token at = lex_.peek();
      if (at.kind == dsl::TokenKind::Identifier && indices_.count(at.text)) {
        ref = lex_.next().text;
        index = indices_.at(ref);
      } else if (at.kind == dsl::TokenKind::Identifier && at.text != "Atom" && at.text != "FinSet" &&
                 at.text != "Sum" && at.text != "Prod") {
        type_error(at, decl, "unknown index '" + at.text + "'");
      } else {
        index = index_term(decl);
      }
      lex_.expect("=", "'='");
      Family fam = within(decl, [&] { return parse_family(lex_, index); });
      FamilyDecl d{name, ref, index, fam};
      families_.emplace(name, fam);
      return d;
    }
    if (lex_.accept("module")) {
      ModuleDecl d;
      d.name = fresh_name("module");
      const std::string decl = "module " + d.name;
      lex_.expect("=", "'='");
      const dsl::Token at = lex_.peek();
      const std::string word = lex_.expect_identifier("family name, dual(..) or a build kind");
      if (word == "dual" && lex_.accept("(")) {
        d.kind = ModuleDecl::Kind::Dual;
        d.args.push_back(lex_.peek().text);
        d.value = dual(module_ref(decl));
        lex_.expect(")", "')'");
      } else if (const auto kind = parse_build_kind(word); kind && lex_.accept("(")) {
        d.kind = ModuleDecl::Kind::Build;
        d.build = *kind;
        d.args.push_back(lex_.peek().text);
        const ModuleObject a = module_ref(decl);
        lex_.expect(",", "','");
        d.args.push_back(lex_.peek().text);
        const ModuleObject b = module_ref(decl);
        lex_.expect(")", "')'");
        try {
          d.value = build(*kind, a, b);
        } catch (const TypeError& e) {
          type_error(at, decl, e.what());
        }
      } else {
        const auto it = families_.find(word);
        if (it == families_.end()) type_error(at, decl, "unknown family '" + word + "'");
        d.kind = ModuleDecl::Kind::Family;
        d.family_ref = word;
        if (lex_.accept("over")) d.ring = ring();
        d.value = ModuleObject::make(it->second, d.ring.value_or(CoefficientRing::rationals()));
      }
      modules_.insert_or_assign(d.name, *d.value);
      return d;
    }
    if (lex_.accept("claim")) {
      const dsl::Token kw = lex_.peek();
      lex_.expect("equal", "'equal'");
      lex_.expect("(", "'('");
      ClaimDecl c;
      c.left = lex_.peek().text;
      const ModuleObject a = module_ref("claim");
      lex_.expect(",", "','");
      c.right = lex_.peek().text;
      const ModuleObject b = module_ref("claim");
      lex_.expect(")", "')'");
      if (!(a.index() == b.index()))
        type_error(kw, "claim equal(" + c.left + ", " + c.right + ")",
                   "index terms differ: " + a.index().to_string() + " vs " + b.index().to_string());
      if (!(a.ring == b.ring))
        type_error(kw, "claim equal(" + c.left + ", " + c.right + ")",
                   "coefficient rings differ: " + a.ring.name() + " vs " + b.ring.name());
      return c;
    }
    lex_.fail_at(head, "expected a declaration (atom, index, family, module, claim)");
  }

  dsl::Lexer lex_;
  std::set<std::string> atoms_;
  std::set<std::string> names_;
  std::map<std::string, IndexTerm> indices_;
  std::map<std::string, Family> families_;
  std::map<std::string, ModuleObject> modules_;
};

struct Printer {
  std::ostringstream& os;
  void operator()(const AtomDecl& d) const { os << "atom " << d.name << "\n"; }
  void operator()(const IndexDecl& d) const { os << "index " << d.name << " = " << d.term.to_string() << "\n"; }
  void operator()(const FamilyDecl& d) const {
    os << "family " << d.name << " : " << (d.index_ref.empty() ? d.index.to_string() : d.index_ref) << " = "
       << d.family.to_string() << "\n";
  }
  void operator()(const ModuleDecl& d) const {
    os << "module " << d.name << " = ";
    switch (d.kind) {
      case ModuleDecl::Kind::Family:
        os << d.family_ref;
        if (d.ring) os << " over " << d.ring->name();
        break;
      case ModuleDecl::Kind::Dual:
        os << "dual(" << d.args.at(0) << ")";
        break;
      case ModuleDecl::Kind::Build:
        os << to_string(d.build) << "(" << d.args.at(0) << ", " << d.args.at(1) << ")";
        break;
    }
    os << "\n";
  }
  void operator()(const ClaimDecl& d) const { os << "claim equal(" << d.left << ", " << d.right << ")\n"; }
};

}  // namespace

Model parse_model(std::string_view text) { return ModelParser(text).run(); }

std::string print_model(const Model& m) {
  std::ostringstream os;
  for (const auto& d : m.declarations) std::visit(Printer{os}, d);
  return os.str();
}

Model parse_model_file(const std::string& path) {
  const std::filesystem::path p(path);
  Model m;
  if (p.extension() == ".json") {
    const json j = read_json_file(path);
    const std::string name = p.stem().string();
    try {
      if (j.is_object() && j.contains("levels")) {
        m.towers.push_back({name, tower_from_json(j)});
      } else {
        m.structures.push_back({name, structure_from_json(j)});
      }
    } catch (const TypeError& e) {
      throw TypeError(path + ": " + e.what());
    }
    return m;
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.bare_message(), e.line(), e.column());
  }
}

}  // namespace refcalc
