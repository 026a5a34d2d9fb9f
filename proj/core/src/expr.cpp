#include "repcheck/expr.hpp"

#include <cctype>

namespace repcheck {

namespace {

struct Ctx {
  GroupPtr G;
  const std::vector<std::pair<std::string, Rep>>* reps;
  const std::map<std::string, SubgroupEntry>* subs;
};

class Parser {
public:
  Parser(const std::string& s, const CatalogInstance& inst, const CohomOptions& opt)
      : s_(s), inst_(inst), opt_(opt) {}

  Rep run() {
    Ctx top{inst_.G, &inst_.env, &inst_.subgroups};
    Rep r = expr(top);
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return r;
  }

private:
  const std::string& s_;
  size_t i_ = 0;
  const CatalogInstance& inst_;
  const CohomOptions& opt_;

  [[noreturn]] void fail(const std::string& why) {
    throw ExprError("expression parse error at offset " + std::to_string(i_) +
                    ": " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip();
    size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_'))
      ++i_;
    if (i_ == start) fail("expected a name");
    return s_.substr(start, i_ - start);
  }
  long long integer() {
    skip();
    size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
    if (i_ == start || (i_ == start + 1 && s_[start] == '-'))
      fail("expected an integer");
    return std::stoll(s_.substr(start, i_ - start));
  }

  std::vector<std::vector<felt>> basis(const Rep& of) {
    const auto& F = of.field();
    std::vector<std::vector<felt>> out;
    expect('[');
    do {
      expect('[');
      std::vector<felt> vec;
      do {
        vec.push_back(F->from_int(integer()));
      } while (eat(','));
      expect(']');
      if (int(vec.size()) != of.dim) fail("basis vector length != module dim");
      out.push_back(std::move(vec));
    } while (eat(','));
    expect(']');
    return out;
  }

  Rep expr(const Ctx& c) {
    std::string name = ident();
    if (!eat('(')) return lookup(c, name);
    Rep r = call(c, name);
    expect(')');
    return r;
  }

  Rep lookup(const Ctx& c, const std::string& name) {
    for (const auto& [nm, r] : *c.reps)
      if (nm == name) return r;
    if (name == "natural") return rep_natural(c.G);
    fail("unknown module name '" + name + "'");
  }

  Rep call(const Ctx& c, const std::string& op) {
    if (op == "trivial") return rep_trivial(c.G, int(integer()));
    if (op == "dual") return rep_dual(expr(c));
    if (op == "tensor") {
      Rep a = expr(c);
      expect(',');
      return rep_tensor(a, expr(c));
    }
    if (op == "sym") {
      long long b = integer();
      expect(',');
      return rep_sym(int(b), expr(c));
    }
    if (op == "wedge2") return rep_wedge2(expr(c));
    if (op == "twist") {
      Rep a = expr(c);
      expect(',');
      return rep_twist(a, int(integer()));
    }
    if (op == "induce") {
      std::string hname = ident();
      if (!c.subs) fail("no subgroups in this context");
      auto it = c.subs->find(hname);
      if (it == c.subs->end()) fail("unknown subgroup '" + hname + "'");
      expect(',');
      Ctx hc{it->second.grp, &it->second.reps, nullptr};
      Rep inner = expr(hc);
      return rep_induce(c.G, it->second.ref, it->second.grp, inner);
    }
    if (op == "sub" || op == "quot") {
      Rep a = expr(c);
      expect(',');
      auto b = basis(a);
      return op == "sub" ? rep_sub(a, b) : rep_quot(a, b);
    }
    if (op == "ad") return rep_ad(expr(c));
    if (op == "adq") return rep_adq(expr(c));
    if (op == "dsum") {
      Rep a = expr(c);
      expect(',');
      return rep_dsum(a, expr(c));
    }
    if (op == "ext") {
      Rep a = expr(c);
      expect(',');
      Rep b = expr(c);
      expect(',');
      long long i = integer();
      // Ext^1(a, b): submodule b, quotient a
      auto cs = ext1(b, a, opt_);
      if (i < 0 || i >= cs.h1_dim)
        fail("ext index " + std::to_string(i) + " out of range (dim " +
             std::to_string(cs.h1_dim) + ")");
      return build_extension(b, a, cs.basis[size_t(i)]);
    }
    fail("unknown operation '" + op + "'");
  }
};

}  // namespace

Rep rep_build(const std::string& expr, const CatalogInstance& inst,
              const CohomOptions& opt) {
  return Parser(expr, inst, opt).run();
}

}  // namespace repcheck
