#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "repcheck/report.hpp"

namespace {

using repcheck::RunConfig;
using repcheck::RunResult;

int write_out(const RunResult& res, const std::string& out) {
  if (res.exit_code == 0 && !out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return 2;
    }
    f << res.report_json;
  }
  return res.exit_code;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  cfg.group = j.at("group").get<std::string>();
  if (j.contains("params"))
    for (auto& [k, v] : j.at("params").items())
      cfg.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
  cfg.module_expr = j.value("module", std::string("natural"));
  if (j.contains("checks"))
    cfg.checks = j.at("checks").get<std::vector<std::string>>();
  cfg.seed = j.value("seed", 0ull);
  cfg.field_ext = j.value("field_ext", 1);
  cfg.cap_elems = j.value("cap_elems", 200000ll);
  cfg.cap_mem_mb = j.value("cap_mem", 512ll);
  return cfg;
}

int run_batch(const std::string& manifest, int jobs, bool timings) {
  nlohmann::json doc;
  {
    std::ifstream in(manifest);
    if (!in) {
      std::cerr << "error: cannot open batch manifest '" << manifest << "'\n";
      return 2;
    }
    try {
      in >> doc;
    } catch (const std::exception& e) {
      std::cerr << "error: batch manifest: " << e.what() << "\n";
      return 2;
    }
  }
  if (!doc.is_array()) {
    std::cerr << "error: batch manifest must be a JSON array\n";
    return 2;
  }
  struct Entry {
    RunConfig cfg;
    std::string out;
    RunResult res;
    bool bad = false;
    std::string err;
  };
  std::vector<Entry> entries;
  for (const auto& j : doc) {
    Entry e;
    try {
      e.cfg = config_from_json(j);
      e.cfg.with_timings = timings;
      e.out = j.value("out", std::string());
    } catch (const std::exception& ex) {
      e.bad = true;
      e.err = ex.what();
    }
    entries.push_back(std::move(e));
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < entries.size();) {
      if (entries[i].bad) continue;
      entries[i].res = repcheck::cmd_run(entries[i].cfg);
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int code = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    std::cout << "[" << i << "] ";
    if (e.bad) {
      std::cout << "error: " << e.err << "\n";
      code = std::max(code, 2);
      continue;
    }
    std::cout << (e.res.exit_code == 0 ? e.res.summary : e.res.summary);
    code = std::max(code, write_out(e.res, e.out));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repcheck: exact verification of modular representation claims"};

  RunConfig cfg;
  std::vector<std::string> params;
  std::string out, batch;
  long long cap_mem = 512;
  int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  bool timings = false;

  app.add_option("--group", cfg.group,
                 "catalog name (sl2, psl2, omega4plus5, sl2_9_semidirect, "
                 "q8_c3_wr_c2, monomial, sln_natural) or group spec file");
  app.add_option("--param", params, "group parameter k=v (repeatable)");
  app.add_option("--module", cfg.module_expr, "module expression")
      ->default_val("natural");
  app.add_option("--check", cfg.checks,
                 "check to run: adequacy, weak, ext1, structure, forms, "
                 "projective (repeatable)");
  app.add_option("--seed", cfg.seed, "random seed")->default_val(0);
  app.add_option("--field-ext", cfg.field_ext,
                 "extension-of-scalars degree multiplier")->default_val(1);
  app.add_option("--out", out, "report output path");
  app.add_option("--cap-elems", cfg.cap_elems, "group enumeration cap")
      ->default_val(200000);
  app.add_option("--cap-mem", cap_mem, "cohomology memory cap in MB")
      ->default_val(512);
  app.add_option("--batch", batch, "batch manifest (JSON array of runs)");
  app.add_option("--jobs", jobs, "batch worker count");
  app.add_flag("--timings", timings, "include timings in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!batch.empty()) return run_batch(batch, jobs, timings);

  if (cfg.group.empty()) {
    std::cerr << "error: --group is required (or use --batch)\n";
    return 2;
  }
  for (const auto& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --param expects k=v, got '" << kv << "'\n";
      return 2;
    }
    cfg.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  cfg.cap_mem_mb = cap_mem;
  cfg.with_timings = timings;

  RunResult res = repcheck::cmd_run(cfg);
  if (res.exit_code == 0)
    std::cout << res.summary;
  else
    std::cerr << res.summary;
  return write_out(res, out);
}
