#pragma once

// Built-in constructors for the group/module instances the verification
// suite runs on, with complete simple-module lists where the engine needs
// them (sl2(q) and psl2(p)).

#include <map>

#include "repcheck/structure.hpp"

namespace repcheck {

struct SubgroupEntry {
  SubgroupRef ref;   // membership view inside the parent
  GroupPtr grp;      // the same subgroup enumerated standalone
  std::vector<std::pair<std::string, Rep>> reps;  // named modules of grp
};

struct CatalogInstance {
  std::string name;
  GroupPtr G;
  // named modules; "natural" always bound
  std::vector<std::pair<std::string, Rep>> env;
  std::vector<Rep> simples;  // complete list when available, else empty
  std::map<std::string, SubgroupEntry> subgroups;

  const Rep& get(const std::string& n) const;
};

// Names: sl2 (q in {2,3,4,5,7,8,9}), psl2 (p odd prime), omega4plus5,
// sl2_9_semidirect, q8_c3_wr_c2, monomial (p, m, top in {C5,F20}),
// sln_natural (n, q). Throws GroupError on unknown name / bad params.
CatalogInstance make_group(const std::string& name,
                           const std::map<std::string, std::string>& params = {},
                           long long cap = 200'000);

struct Thm19Module {
  std::string group_name;  // "sl2" or "psl2"
  int p = 0;
  Rep module;        // the nonsplit uniserial extension
  Rep zero_control;  // split extension from the zero cocycle
  LoewyReport loewy;
  FormSpace forms;
  bool is_pim = false;
};

// The self-dual uniserial modules of the p = 5, 7 instances: (U|U) over
// SL2(p) and PSL2(p), plus (k|U|k) = PIM(1) of dim p over PSL2(5).
std::vector<Thm19Module> thm19_instances(int p, const CohomOptions& opt = {});

}  // namespace repcheck
