#include "rup/emitter/smtlib_validator.hpp"

#include <cctype>
#include <map>
#include <set>

namespace rup::fo {

namespace {

struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
};

class Reader {
 public:
  Reader(std::string_view text, std::vector<std::string>& errors) : text_(text), errors_(errors) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  bool read(SExpr& out) {
    skip();
    if (pos_ >= text_.size()) {
      errors_.push_back("unexpected end of input");
      return false;
    }
    const char ch = text_[pos_];
    if (ch == ')') {
      errors_.push_back("unbalanced ')' at offset " + std::to_string(pos_));
      ++pos_;
      return false;
    }
    if (ch == '(') {
      ++pos_;
      out.is_atom = false;
      while (true) {
        skip();
        if (pos_ >= text_.size()) {
          errors_.push_back("unclosed '('");
          return false;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          return true;
        }
        SExpr child;
        if (!read(child)) return false;
        out.items.push_back(std::move(child));
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != ';') {
      ++pos_;
    }
    out.atom = std::string(text_.substr(start, pos_ - start));
    return true;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string>& errors_;
};

enum class Sort { Real, Bool, Unknown };

bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  std::size_t dots = 0;
  for (char ch : s) {
    if (ch == '.') {
      ++dots;
    } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return dots <= 1 && s.front() != '.' && s.back() != '.';
}

bool is_symbol(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && std::string_view("~!@$%^&*_-+=<>.?/").find(ch) ==
                                                             std::string_view::npos) {
      return false;
    }
  }
  return true;
}

class Checker {
 public:
  explicit Checker(std::vector<std::string>& errors) : errors_(errors) {}

  void command(const SExpr& e) {
    if (e.is_atom || e.items.empty() || !e.items[0].is_atom) {
      error("top-level item is not a command");
      return;
    }
    const std::string& name = e.items[0].atom;
    const std::size_t n = e.items.size();
    if (name == "set-logic") {
      if (n != 2 || !e.items[1].is_atom) error("malformed set-logic");
      if (logic_set_) error("set-logic given twice");
      if (saw_other_) error("set-logic after other commands");
      logic_set_ = true;
      return;
    }
    if (name == "set-info" || name == "set-option") {
      if (n < 2 || !e.items[1].is_atom || e.items[1].atom.empty() || e.items[1].atom[0] != ':') {
        error("malformed " + name);
      }
      return;
    }
    saw_other_ = true;
    if (name == "declare-const") {
      if (n != 3 || !e.items[1].is_atom || !e.items[2].is_atom) {
        error("malformed declare-const");
        return;
      }
      declare(e.items[1].atom, e.items[2].atom);
    } else if (name == "declare-fun") {
      if (n != 4 || !e.items[1].is_atom || e.items[2].is_atom || !e.items[2].items.empty() || !e.items[3].is_atom) {
        error("only nullary declare-fun is supported");
        return;
      }
      declare(e.items[1].atom, e.items[3].atom);
    } else if (name == "assert") {
      if (!logic_set_) error("assert before set-logic");
      if (n != 2) {
        error("assert takes one term");
        return;
      }
      if (term(e.items[1]) != Sort::Bool) error("asserted term is not boolean");
      ++asserts_;
    } else if (name == "check-sat" || name == "get-model" || name == "exit") {
      if (n != 1) error(name + " takes no arguments");
      if (name == "check-sat") ++checks_;
      if (exited_) error("command after exit");
      if (name == "exit") exited_ = true;
      return;
    } else {
      error("unknown command '" + name + "'");
    }
    if (exited_) error("command after exit");
  }

  void finish() {
    if (!logic_set_) error("missing set-logic");
    if (asserts_ == 0) error("no assert");
    if (checks_ == 0) error("missing check-sat");
  }

 private:
  void error(std::string msg) { errors_.push_back(std::move(msg)); }

  void declare(const std::string& name, const std::string& sort) {
    if (!is_symbol(name)) error("bad symbol '" + name + "'");
    if (sort != "Real" && sort != "Bool") error("unsupported sort '" + sort + "'");
    if (!globals_.emplace(name, sort == "Real" ? Sort::Real : Sort::Bool).second) {
      error("symbol '" + name + "' declared twice");
    }
  }

  Sort lookup(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto f = it->find(name); f != it->end()) return f->second;
    }
    if (auto f = globals_.find(name); f != globals_.end()) return f->second;
    error("symbol '" + name + "' used before declaration");
    return Sort::Unknown;
  }

  void expect(Sort got, Sort want, const std::string& where) {
    if (got != Sort::Unknown && got != want) error("sort mismatch in '" + where + "'");
  }

  Sort term(const SExpr& e) {
    if (e.is_atom) {
      if (is_numeral(e.atom)) return Sort::Real;
      if (e.atom == "true" || e.atom == "false") return Sort::Bool;
      if (!is_symbol(e.atom)) {
        error("bad token '" + e.atom + "'");
        return Sort::Unknown;
      }
      return lookup(e.atom);
    }
    if (e.items.empty() || !e.items[0].is_atom) {
      error("empty or higher-order application");
      return Sort::Unknown;
    }
    const std::string& op = e.items[0].atom;
    const std::size_t argc = e.items.size() - 1;
    if (op == "exists" || op == "forall") return quantifier(e);

    static const std::set<std::string> arith{"+", "-", "*", "/"};
    static const std::set<std::string> compare{"<", "<=", ">", ">="};
    static const std::set<std::string> logic{"and", "or", "=>"};
    if (arith.count(op)) {
      if (argc == 0 || (argc == 1 && op != "-")) error("wrong arity for '" + op + "'");
      for (std::size_t i = 1; i <= argc; ++i) expect(term(e.items[i]), Sort::Real, op);
      return Sort::Real;
    }
    if (compare.count(op)) {
      if (argc < 2) error("wrong arity for '" + op + "'");
      for (std::size_t i = 1; i <= argc; ++i) expect(term(e.items[i]), Sort::Real, op);
      return Sort::Bool;
    }
    if (op == "=" || op == "distinct") {
      if (argc < 2) error("wrong arity for '" + op + "'");
      Sort first = Sort::Unknown;
      for (std::size_t i = 1; i <= argc; ++i) {
        const Sort s = term(e.items[i]);
        if (first == Sort::Unknown) first = s;
        expect(s, first, op);
      }
      return Sort::Bool;
    }
    if (logic.count(op)) {
      if (argc < 1 || (op == "=>" && argc < 2)) error("wrong arity for '" + op + "'");
      for (std::size_t i = 1; i <= argc; ++i) expect(term(e.items[i]), Sort::Bool, op);
      return Sort::Bool;
    }
    if (op == "not") {
      if (argc != 1) error("wrong arity for 'not'");
      for (std::size_t i = 1; i <= argc; ++i) expect(term(e.items[i]), Sort::Bool, op);
      return Sort::Bool;
    }
    error("unknown operator '" + op + "'");
    return Sort::Unknown;
  }

  Sort quantifier(const SExpr& e) {
    const std::string& op = e.items[0].atom;
    if (e.items.size() != 3 || e.items[1].is_atom || e.items[1].items.empty()) {
      error("malformed " + op);
      return Sort::Bool;
    }
    std::map<std::string, Sort> scope;
    for (const auto& binding : e.items[1].items) {
      if (binding.is_atom || binding.items.size() != 2 || !binding.items[0].is_atom || !binding.items[1].is_atom) {
        error("malformed binding in " + op);
        continue;
      }
      const std::string& sort = binding.items[1].atom;
      if (sort != "Real" && sort != "Bool") error("unsupported sort '" + sort + "'");
      if (!is_symbol(binding.items[0].atom)) error("bad symbol '" + binding.items[0].atom + "'");
      if (!scope.emplace(binding.items[0].atom, sort == "Bool" ? Sort::Bool : Sort::Real).second) {
        error("variable '" + binding.items[0].atom + "' bound twice");
      }
    }
    scopes_.push_back(std::move(scope));
    expect(term(e.items[2]), Sort::Bool, op);
    scopes_.pop_back();
    return Sort::Bool;
  }

  std::vector<std::string>& errors_;
  std::map<std::string, Sort> globals_;
  std::vector<std::map<std::string, Sort>> scopes_;
  bool logic_set_ = false;
  bool saw_other_ = false;
  bool exited_ = false;
  int asserts_ = 0;
  int checks_ = 0;
};

}  // namespace

std::vector<std::string> validate_smtlib(std::string_view script) {
  std::vector<std::string> errors;
  Reader reader(script, errors);
  Checker checker(errors);
  while (!reader.at_end()) {
    SExpr e;
    if (!reader.read(e)) return errors;
    checker.command(e);
  }
  checker.finish();
  return errors;
}

}  // namespace rup::fo
