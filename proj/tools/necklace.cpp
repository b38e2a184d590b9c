#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "necklace/classical_reps.hpp"
#include "necklace/json_io.hpp"
#include "necklace/local_reps.hpp"
#include "necklace/loop_actions.hpp"
#include "necklace/tl_chain.hpp"
#include "necklace/twisted_algebras.hpp"

using namespace necklace;

namespace {

constexpr const char* kVersion = "necklace 1.0";

enum Status { Pass = 0, Fail = 1, Unresolved = 2 };

struct RunConfig {
  std::string command;
  int n = 3, m = 2, branch = 0;
  std::string family = "symmetric", rep = "standard", mode = "standard", bvs = "ising", check = "all", out, checkpoint, in;
  std::vector<std::string> params;
  std::map<std::string, std::string> bindings;
  std::string q, t, a;
  size_t cap = 1000000, budget_dim = kDefaultBudgetDim;
  uint64_t seed = 20261015;
  unsigned jobs = 1;
};

Scalar param(const RunConfig& c, const std::string& name, const std::string& fallback) {
  auto it = c.bindings.find(name);
  std::string text = it != c.bindings.end() ? it->second : fallback;
  try {
    return Scalar::parse(text);
  } catch (const ParseError& e) {
    throw ConfigParseError("parameter " + name + " = \"" + text + "\": " + e.what());
  }
}

void bind(RunConfig& c) {
  for (auto& p : c.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigParseError("--param expects name=value, got \"" + p + "\"");
    c.bindings[p.substr(0, eq)] = p.substr(eq + 1);
  }
  if (!c.q.empty()) c.bindings["q"] = c.q;
  if (!c.t.empty()) c.bindings["t"] = c.t;
  if (!c.a.empty()) c.bindings["a"] = c.a;
  for (auto& [k, v] : c.bindings) param(c, k, v);
  if (c.cap == 0 || c.budget_dim == 0) throw ConfigParseError("caps must be positive");
  if (c.n < 1) throw ConfigParseError("--n must be positive");
}

Json config_echo(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["n"] = c.n;
  if (c.command == "verify") j["family"] = c.family;
  if (c.command == "extend") {
    j["rep"] = c.rep;
    j["mode"] = c.mode;
    j["branch"] = c.branch;
  }
  if (c.command == "algebra") j["m"] = c.m;
  if (c.command == "closure") j["bvs"] = c.bvs;
  if (c.command == "algebra" || c.command == "zeta") j["check"] = c.check;
  for (auto& [k, v] : c.bindings) j["params"][k] = v;
  j["cap"] = c.cap;
  j["budget_dim"] = c.budget_dim;
  j["seed"] = c.seed;
  j["jobs"] = c.jobs;
  return j;
}

Json verify_json(const VerifyReport& r) { return Json::parse(r.to_json()); }
Json identity_json(const IdentityReport& r) { return Json::parse(r.to_json()); }

BVS load_bvs(const RunConfig& c) {
  if (c.bvs == "ising" || c.bvs == "flip" || c.bvs == "identity") return bvs_catalog(c.bvs);
  return bvs_from_file(c.bvs);
}

NecklaceExtension build_extension(const RunConfig& c, const std::string& rep) {
  int n = c.n;
  if (rep == "symmetric") return symmetric_model(n);
  if (rep == "standard") {
    if (c.mode == "nonstandard") return nonstandard_block_tau(n, param(c, "z", "z"), param(c, "s", "s"));
    return standard_extension(standard_rep(n, param(c, "z", "z")), c.branch);
  }
  if (rep == "burau") return standard_extension(burau_reduced(n, param(c, "t", "t")), c.branch);
  if (rep == "burau-unreduced") return unreduced_burau_extension(n, param(c, "t", "t"), param(c, "a", "a"), nullptr, c.seed);
  if (rep == "lkb") {
    Scalar q = param(c, "q", "q"), t = param(c, "t", "t");
    if (c.mode == "nonstandard") return lkb_nonstandard_tau(n, q, t, c.branch);
    return standard_extension(lkb(n, q, t), c.branch);
  }
  if (rep == "ising" || rep == "local") return local_necklace_rep(load_bvs(c), n, c.budget_dim);
  throw ConfigParseError("unknown representation \"" + rep + "\"");
}

Status verify_cmd(const RunConfig& c, Json& out) {
  int n = c.n;
  const std::string& f = c.family;
  VerifyReport rep;
  if (f == "gaussian") {
    auto model = nes_matrix_model(c.m, n);
    rep = verify(model.local_rep(), necklace_relations_full(n));
  } else if (f == "quat") {
    rep = verify(quat_xi(n), necklace_relations_full(n));
  } else if (f == "nes") {
    rep = verify(nes_phi_hat(c.m, n), necklace_relations_full(n));
  } else if (f == "zeta") {
    rep = verify(zeta(n), necklace_relations_full(n));
  } else if (f == "loop") {
    rep = lb_check(n);
  } else if (f == "seamed") {
    Scalar t = param(c, "t", "t"), a = param(c, "a", "a");
    auto s = build_seam(build_chain(n, t), a);
    out["results"].push_back(verify_json(s.circular));
    if (t.is_constant() && a.is_constant()) {
      rep = seamed_standard_extension(s, c.branch).verify_full();
    } else {
      auto cert = seamed_nb_certificate(s);
      out["results"].push_back(Json::parse(cert.to_json()));
      return cert.all_pass() ? Pass : Fail;
    }
  } else {
    auto ext = build_extension(c, f);
    rep = ext.verify_full();
    auto suff = reduced_set_sufficiency_check(ext.assignment());
    out["reduced_set_equivalent"] = suff.equivalent;
  }
  out["results"].push_back(verify_json(rep));
  return rep.all_pass() ? Pass : Fail;
}

Status extend_cmd(const RunConfig& c, Json& out) {
  auto ext = build_extension(c, c.rep);
  auto rep = ext.verify_full();
  Json e;
  e["name"] = ext.name;
  e["kind"] = ext.kind;
  e["relations"] = verify_json(rep);
  e["flags"] = ext.flags;
  e["flags"]["standard"] = ext.kind == "standard";
  e["values"] = ext.values;
  e["notes"] = ext.notes;
  e["matrices"]["tau"] = matrix_to_json(ext.tau);
  for (size_t i = 0; i < ext.base.sigma.size(); ++i) e["matrices"]["sigma" + std::to_string(i + 1)] = matrix_to_json(ext.base.sigma[i]);
  e["matrices"]["sigma" + std::to_string(ext.n())] = matrix_to_json(ext.sigma_n);
  if (ext.D) e["matrices"]["D"] = matrix_to_json(*ext.D);
  out["results"].push_back(e);
  return rep.all_pass() ? Pass : Fail;
}

Status closure_cmd(const RunConfig& c, Json& out) {
  ClosureOptions opts;
  opts.cap = c.cap;
  opts.jobs = c.jobs;
  opts.checkpoint = c.checkpoint;
  auto r = conjecture_ratio(load_bvs(c), c.n, opts);
  out["results"].push_back(Json::parse(r.to_json()));
  return r.verdict ? Pass : Fail;
}

Status spectrum_cmd(const RunConfig& c, Json& out) {
  auto tab = gamma_spectrum_table(2, c.n, param(c, "t", "t"));
  out["results"].push_back(Json::parse(tab.to_json()));
  return tab.all_match() ? Pass : Fail;
}

Status seam_cmd(const RunConfig& c, Json& out) {
  auto s = build_seam(build_chain(c.n, param(c, "t", "t")), param(c, "a", "a"));
  Json j = identity_json(s.checks);
  j["y_f"] = s.y_f.str();
  j["x"] = s.x.str();
  j["circular"] = verify_json(s.circular);
  Status st = s.checks.all_pass() ? Pass : Fail;
  bool symbolic = !(s.base.t.is_constant() && s.a.is_constant());
  if (c.mode == "certificate" || (c.mode == "extend" && symbolic)) {
    auto cert = seamed_nb_certificate(s);
    j["nb_certificate"] = Json::parse(cert.to_json());
    if (!cert.all_pass()) st = Fail;
  } else if (c.mode == "extend") {
    try {
      auto ext = seamed_standard_extension(s, c.branch);
      auto rep = ext.verify_full();
      j["extension"]["resolved"] = true;
      j["extension"]["relations"] = verify_json(rep);
      j["extension"]["values"] = ext.values;
      if (!rep.all_pass()) st = Fail;
    } catch (const SpectrumNotResolved& e) {
      j["extension"]["resolved"] = false;
      j["extension"]["reason"] = e.what();
      if (st == Pass) st = Unresolved;
    } catch (const NotDiagonalizable& e) {
      j["extension"]["resolved"] = false;
      j["extension"]["reason"] = e.what();
      if (st == Pass) st = Unresolved;
    }
  }
  out["results"].push_back(j);
  return st;
}

Status algebra_cmd(const RunConfig& c, Json& out) {
  bool all = c.check == "all", ok = true;
  auto push = [&](const IdentityReport& r) {
    out["results"].push_back(identity_json(r));
    ok = ok && r.all_pass();
  };
  auto pushv = [&](const VerifyReport& r) {
    out["results"].push_back(verify_json(r));
    ok = ok && r.all_pass();
  };
  bool known = false;
  if (all || c.check == "nes") {
    known = true;
    push(nes_mod_n_closure_check(c.m, c.n));
    pushv(verify(nes_phi_hat(c.m, c.n), necklace_relations_full(c.n)));
  }
  if (all || c.check == "conj") {
    known = true;
    for (int i = 1; i <= c.n; ++i) push(nes_conjugation_identities(c.m, c.n, i));
    push(nes_monomiality(c.m, c.n));
  }
  if (all || c.check == "psi") {
    known = true;
    auto model = nes_matrix_model(c.m, c.n);
    push(model.checks);
    if (model.X.dim() <= c.budget_dim) pushv(verify(model.local_rep(), necklace_relations_full(c.n)));
  }
  if (all || c.check == "quat") {
    known = true;
    push(quat_hom_check(c.n));
    for (int i = 1; i <= c.n; ++i) push(quat_conjugation_table(c.n, i));
    push(quat_monomiality(c.n));
  }
  if (!known) throw ConfigParseError("unknown --check \"" + c.check + "\" (nes | conj | psi | quat | all)");
  return ok ? Pass : Fail;
}

Status zeta_cmd(const RunConfig& c, Json& out) {
  bool all = c.check == "all", ok = true, known = false;
  auto push = [&](const IdentityReport& r) {
    out["results"].push_back(identity_json(r));
    ok = ok && r.all_pass();
  };
  if (all || c.check == "suite") {
    known = true;
    push(zeta_suite(c.n));
  }
  if (all || c.check == "kernel") {
    known = true;
    push(zeta_kernel_check(c.n));
  }
  if (!known) throw ConfigParseError("unknown --check \"" + c.check + "\" (suite | kernel | all)");
  auto z = zeta(c.n);
  Json imgs;
  for (auto g : z.generators()) imgs[g.str()] = z.image(g).str();
  out["automorphisms"] = imgs;
  return ok ? Pass : Fail;
}

Status report_cmd(const RunConfig& c, Json& out) {
  std::ifstream f(c.in);
  if (!f) throw ConfigParseError("cannot read report " + c.in);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigParseError(std::string("report JSON: ") + e.what());
  }
  if (!j.contains("status") || !j.contains("results")) throw ConfigParseError("not a necklace report");
  out["source"] = c.in;
  out["source_command"] = j.value("config", Json::object()).value("command", "");
  out["results"] = j["results"];
  std::string st = j["status"];
  return st == "pass" ? Pass : st == "fail" ? Fail : Unresolved;
}

const char* status_name(Status s) { return s == Pass ? "pass" : s == Fail ? "fail" : "unresolved"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Necklace braid group representation toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* s) {
    s->add_option("--n", cfg.n, "number of strands / sites");
    s->add_option("--param", cfg.params, "parameter binding name=value (repeatable)");
    s->add_option("--cap", cfg.cap, "closure element cap");
    s->add_option("--budget-dim", cfg.budget_dim, "largest dense dimension");
    s->add_option("--out", cfg.out, "write the JSON report here");
    s->add_option("--checkpoint", cfg.checkpoint, "closure checkpoint path");
    s->add_option("--seed", cfg.seed, "seed for parameter sampling");
    s->add_option("--jobs", cfg.jobs, "closure worker threads");
    s->add_option("--q", cfg.q, "q parameter");
    s->add_option("--t", cfg.t, "t parameter");
    s->add_option("--a", cfg.a, "a parameter");
    s->add_option("--branch", cfg.branch, "root branch");
    s->add_option("--m", cfg.m, "NES modulus m");
  };
  auto* verify_s = app.add_subcommand("verify", "run the NB_n relation suite on a representation");
  common(verify_s);
  verify_s->add_option("--family", cfg.family,
                       "symmetric | standard | burau | burau-unreduced | lkb | ising | local | gaussian | nes | quat | seamed | zeta | loop");
  verify_s->add_option("--mode", cfg.mode, "standard | nonstandard");
  verify_s->add_option("--bvs", cfg.bvs, "ising | flip | identity | path to BVS JSON");
  auto* extend_s = app.add_subcommand("extend", "build an extension and report flags and matrices");
  common(extend_s);
  extend_s->add_option("--rep", cfg.rep, "symmetric | standard | burau | burau-unreduced | lkb | ising | local");
  extend_s->add_option("--mode", cfg.mode, "standard | nonstandard");
  extend_s->add_option("--bvs", cfg.bvs, "ising | flip | identity | path to BVS JSON");
  auto* closure_s = app.add_subcommand("closure", "closure orders for the cyclic-shift conjecture");
  common(closure_s);
  closure_s->add_option("--bvs", cfg.bvs, "ising | flip | identity | path to BVS JSON");
  auto* spectrum_s = app.add_subcommand("spectrum", "gamma^n spectrum of the XXZ chain by charge sector");
  common(spectrum_s);
  auto* seam_s = app.add_subcommand("seam", "seamed braid translator checks");
  common(seam_s);
  seam_s->add_option("--mode", cfg.mode, "check | extend | certificate");
  auto* algebra_s = app.add_subcommand("algebra", "NES(m,n) and Q_n identity suites");
  common(algebra_s);
  algebra_s->add_option("--check", cfg.check, "nes | conj | psi | quat | all");
  auto* zeta_s = app.add_subcommand("zeta", "free-group automorphism suite and the map to LB_n");
  common(zeta_s);
  zeta_s->add_option("--check", cfg.check, "suite | kernel | all");
  auto* report_s = app.add_subcommand("report", "re-read a JSON report and re-emit its status");
  report_s->add_option("--in", cfg.in, "report path")->required();
  report_s->add_option("--out", cfg.out, "write the JSON report here");
  seam_s->callback([&] {
    if (cfg.mode == "standard") cfg.mode = "check";
  });

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  Json out;
  out["version"] = kVersion;
  Status st = Pass;
  auto t0 = std::chrono::steady_clock::now();
  try {
    bind(cfg);
    out["config"] = config_echo(cfg);
    out["results"] = Json::array();
    const auto& cmd = cfg.command;
    if (cmd == "verify") st = verify_cmd(cfg, out);
    else if (cmd == "extend") st = extend_cmd(cfg, out);
    else if (cmd == "closure") st = closure_cmd(cfg, out);
    else if (cmd == "spectrum") st = spectrum_cmd(cfg, out);
    else if (cmd == "seam") st = seam_cmd(cfg, out);
    else if (cmd == "algebra") st = algebra_cmd(cfg, out);
    else if (cmd == "zeta") st = zeta_cmd(cfg, out);
    else st = report_cmd(cfg, out);
  } catch (const ConfigParseError& e) {
    std::cerr << e.what() << "\n";
    return Unresolved;
  } catch (const SpectrumNotResolved& e) {
    out["error"] = e.what();
    st = Unresolved;
  } catch (const NotDiagonalizable& e) {
    out["error"] = e.what();
    st = Unresolved;
  } catch (const CapExceeded& e) {
    out["error"] = e.what();
    st = Unresolved;
  } catch (const Error& e) {
    std::cerr << cfg.command << ": " << e.what() << "\n";
    return Unresolved;
  } catch (const std::invalid_argument& e) {
    std::cerr << cfg.command << ": " << e.what() << "\n";
    return Unresolved;
  }
  out["status"] = status_name(st);
  out["timings"]["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string text = out.dump(2);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    f << text << "\n";
  }
  std::cout << text << "\n";
  return st;
}
