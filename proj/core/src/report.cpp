#include "repcheck/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "repcheck/adequacy.hpp"

namespace repcheck {

using json = nlohmann::ordered_json;

CatalogInstance load_group_spec(const std::string& path, long long cap) {
  std::ifstream in(path);
  if (!in) throw ExprError("cannot open group spec '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ExprError("group spec '" + path + "': " + e.what());
  }
  try {
    int p = doc.at("field").at("p").get<int>();
    int k = doc.at("field").value("k", 1);
    FieldPtr F;
    if (doc.at("field").contains("modulus"))
      F = FieldCtx::make(p, k, doc.at("field").at("modulus").get<std::vector<int>>());
    else
      F = FieldCtx::make(p, k);
    if (doc.contains("cap")) cap = doc.at("cap").get<long long>();
    std::vector<Mat> gens;
    for (const auto& jm : doc.at("generators")) {
      int rows = int(jm.size()), cols = int(jm.at(0).size());
      Mat m(F, rows, cols);
      for (int i = 0; i < rows; ++i) {
        if (int(jm.at(i).size()) != cols)
          throw ExprError("ragged generator matrix");
        for (int j = 0; j < cols; ++j) {
          const auto& e = jm.at(i).at(j);
          m.at(i, j) = e.is_array()
                           ? F->from_coeffs(e.get<std::vector<long long>>())
                           : F->from_int(e.get<long long>());
        }
      }
      gens.push_back(std::move(m));
    }
    CatalogInstance inst;
    inst.name = doc.value("name", path);
    inst.G = enumerate_group(gens, cap);
    inst.env.emplace_back("natural", rep_natural(inst.G));
    return inst;
  } catch (const json::exception& e) {
    throw ExprError("group spec '" + path + "': " + e.what());
  }
}

namespace {

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos ||
         (s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0);
}

json field_json(const FieldPtr& F) {
  return json{{"p", F->p()}, {"k", F->k()}, {"q", F->q()},
              {"modulus", F->modulus()}};
}

json adequacy_json(const AdequacyReport& a) {
  return json{{"dim", a.dim},
              {"span_dim", a.span_dim},
              {"weak_ok", a.weak_ok},
              {"h1_trivial_dim", a.h1_trivial_dim},
              {"h1_adq_dim", a.h1_adq_dim},
              {"ext1_self_dim", a.ext1_self_dim},
              {"cond_h1_trivial", a.cond_h1_trivial},
              {"cond_h1_adq", a.cond_h1_adq},
              {"adequate", a.adequate}};
}

const char* form_type_str(FormType t) {
  switch (t) {
    case FormType::symmetric: return "symmetric";
    case FormType::alternating: return "alternating";
    case FormType::both: return "both";
    default: return "none";
  }
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

}  // namespace

RunResult cmd_run(const RunConfig& cfg) {
  RunResult res;
  try {
    if (cfg.checks.empty()) throw ExprError("no checks requested");
    for (const auto& c : cfg.checks)
      if (c != "adequacy" && c != "weak" && c != "ext1" && c != "structure" &&
          c != "forms" && c != "projective")
        throw ExprError("unknown check '" + c + "'");
    auto wants = [&](const std::string& c) {
      return std::find(cfg.checks.begin(), cfg.checks.end(), c) !=
             cfg.checks.end();
    };
    CohomOptions copt;
    copt.mem_cap_bytes = cfg.cap_mem_mb << 20;

    CatalogInstance inst = looks_like_path(cfg.group)
                               ? load_group_spec(cfg.group, cfg.cap_elems)
                               : make_group(cfg.group, cfg.params, cfg.cap_elems);
    Rep v = rep_build(cfg.module_expr, inst, copt);
    std::vector<Rep> simples = inst.simples;
    std::vector<std::pair<std::string, Rep>> env = inst.env;
    if (cfg.field_ext > 1) {
      v = extend_scalars(v, cfg.field_ext);
      for (auto& [nm, r] : env) r = extend_scalars(r, cfg.field_ext);
      for (auto& s : simples) s = extend_scalars(s, cfg.field_ext);
    }

    json rep;
    rep["meta"] = json{{"group", inst.name},
                       {"order", inst.G->size()},
                       {"field", field_json(v.field())},
                       {"module", cfg.module_expr},
                       {"dim", v.dim},
                       {"seed", cfg.seed},
                       {"version", kVersion}};
    json timings = json::object();
    std::ostringstream hum;
    hum << inst.name << " |G|=" << inst.G->size() << "  module "
        << cfg.module_expr << " dim " << v.dim << "\n";

    if (wants("adequacy") || wants("weak")) {
      Timer t;
      if (wants("adequacy")) {
        auto a = adequacy_report(v, copt);
        a.group_label = inst.name;
        rep["adequacy"] = adequacy_json(a);
        hum << "  adequacy: " << (a.adequate ? "adequate" : "NOT adequate")
            << " (span " << a.span_dim << "/" << a.dim * a.dim << ", h1(k)="
            << a.h1_trivial_dim << ", h1(adq)=" << a.h1_adq_dim << ")\n";
      } else {
        int sd = weak_span(v);
        rep["adequacy"] =
            json{{"dim", v.dim}, {"span_dim", sd},
                 {"weak_ok", sd == v.dim * v.dim}};
        hum << "  weak span: " << sd << "/" << v.dim * v.dim << "\n";
      }
      timings["adequacy_ms"] = t.ms();
    }
    if (wants("ext1")) {
      Timer t;
      int self = ext1(v, v, copt).h1_dim;
      int dual = ext1(rep_dual(v), rep_dual(v), copt).h1_dim;
      rep["ext1"] = json{{"self", self}, {"dual", dual}};
      hum << "  ext1(V,V) = " << self << ", ext1(V*,V*) = " << dual << "\n";
      timings["ext1_ms"] = t.ms();
    }
    if (wants("structure")) {
      Timer t;
      auto lw = loewy_selfdual(v, env, cfg.seed);
      auto indec = is_indecomposable(v, cfg.seed);
      json jl;
      jl["socle_layers"] = lw.socle_layers;
      jl["radical_layers"] = lw.radical_layers;
      jl["uniserial"] = lw.uniserial;
      jl["self_dual"] = lw.self_dual;
      jl["indecomposable"] =
          indec.verdict == IndecVerdict::indecomposable   ? "yes"
          : indec.verdict == IndecVerdict::decomposable ? "no"
                                                        : "uncertified";
      rep["structure"] = jl;
      hum << "  structure: " << (lw.uniserial ? "uniserial" : "non-uniserial")
          << ", " << (lw.self_dual ? "self-dual" : "not self-dual") << ", "
          << jl["indecomposable"].get<std::string>() << " indecomposable\n";
      timings["structure_ms"] = t.ms();
    }
    if (wants("forms")) {
      Timer t;
      auto fs = invariant_forms(v);
      rep["forms"] = json{{"space_dim", int(fs.basis.size())},
                          {"sym_dim", fs.sym_dim},
                          {"alt_dim", fs.alt_dim},
                          {"degenerate_dim", fs.degenerate_dim},
                          {"type", form_type_str(fs.type)}};
      hum << "  forms: dim " << fs.basis.size() << ", type "
          << form_type_str(fs.type) << "\n";
      timings["forms_ms"] = t.ms();
    }
    if (wants("projective")) {
      Timer t;
      if (simples.empty())
        throw ExprError(
            "projective check needs a catalog group with a known simple list");
      bool pr = is_projective(v, simples, copt);
      rep["projective"] = pr;
      hum << "  projective: " << (pr ? "yes" : "no") << "\n";
      timings["projective_ms"] = t.ms();
    }
    if (cfg.with_timings) rep["timings"] = timings;

    res.report_json = rep.dump(2) + "\n";
    res.summary = hum.str();
    res.exit_code = 0;
  } catch (const ResourceError& e) {
    res.exit_code = 3;
    res.summary = std::string("resource cap: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.summary = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace repcheck
