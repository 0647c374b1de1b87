// lamptree: command-line front end for the automaton-group and lamplighter
// toolkit.  Exit codes: 0 success, 1 usage or input error, 2 refuted
// assertion (identity false, witness found, automorphism check failed,
// depth violations, verification failures), 3 exhausted exploration budget.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lamptree/errors.hpp"
#include "lamptree/explorer.hpp"
#include "lamptree/lamp.hpp"
#include "lamptree/lamp_aut.hpp"
#include "lamptree/mealy.hpp"
#include "lamptree/modular.hpp"
#include "lamptree/verify.hpp"

namespace lt = lamptree;

namespace {

constexpr int kExitRefuted = 2;
constexpr int kExitBudget = 3;

int exit_code_for(const lt::error& e) {
  switch (e.code()) {
    case lt::errc::state_budget_exceeded:
    case lt::errc::budget_exceeded:
    case lt::errc::iteration_budget_exceeded:
      return kExitBudget;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) lt::fail(lt::errc::invalid_parameter, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

lt::MealyMachine load_machine(const std::string& path) {
  try {
    return lt::MealyMachine::parse(read_file(path));
  } catch (const lt::error& e) {
    lt::fail(e.code(), path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Generator word syntax: dot-separated state names, each with an optional -1
// suffix ("p", "p.q-1.p").
lt::StateWord parse_word_arg(const lt::MealyMachine& m, std::string arg) {
  for (char& c : arg) {
    if (c == '.') c = ',';
  }
  return lt::parse_state_word(m, arg);
}

struct GeneratorSet {
  std::vector<lt::StateWord> words;
  std::vector<std::string> names;
};

GeneratorSet resolve_generators(const lt::MealyMachine& m, const std::string& gens_csv) {
  GeneratorSet out;
  if (gens_csv.empty()) {
    for (int q = 0; q < m.state_count(); ++q) {
      out.words.push_back({{q, 1}});
      out.names.push_back(m.states()[static_cast<std::size_t>(q)]);
    }
    return out;
  }
  for (const auto& gen : split(gens_csv, ',')) {
    if (gen.empty()) lt::fail(lt::errc::invalid_parameter, "empty generator in --gens");
    out.words.push_back(parse_word_arg(m, gen));
    out.names.push_back(gen);
  }
  return out;
}

// --- machine ---------------------------------------------------------------

struct MachineOpts {
  std::string file, file2, word, input, out;
  std::size_t budget = 1000000;
  bool dot = false;
};

int run_machine_info(const MachineOpts& o) {
  auto m = load_machine(o.file);
  if (o.dot) {
    std::cout << m.to_dot();
    return 0;
  }
  std::cout << m.to_text();
  std::cout << "invertible: " << (m.is_invertible() ? "true" : "false") << "\n";
  return 0;
}

int run_machine_act(const MachineOpts& o) {
  auto m = load_machine(o.file);
  auto w = parse_word_arg(m, o.word);
  auto image = lt::act(m, w, lt::parse_input_word(m, o.input));
  std::cout << lt::format_word(m, image) << "\n";
  return 0;
}

int run_machine_product(const MachineOpts& o) {
  auto a = load_machine(o.file);
  auto b = load_machine(o.file2);
  lt::ProductRenaming renaming;
  auto prod = lt::direct_product(a, b, &renaming);
  std::ostringstream text;
  for (const auto& [from, to] : renaming.symbols)
    text << "# renamed symbol " << from << " -> " << to << "\n";
  for (const auto& [from, to] : renaming.states)
    text << "# renamed state " << from << " -> " << to << "\n";
  text << prod.to_text();
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) lt::fail(lt::errc::invalid_parameter, "cannot write '" + o.out + "'");
    f << text.str();
  }
  return 0;
}

int run_machine_identity(const MachineOpts& o) {
  auto m = load_machine(o.file);
  auto w = parse_word_arg(m, o.word);
  bool id = lt::word_is_identity(m, w, o.budget);
  std::cout << "identity: " << (id ? "true" : "false") << "\n";
  return id ? 0 : kExitRefuted;
}

// --- group -----------------------------------------------------------------

struct GroupOpts {
  std::string file, gens, map;
  int level = 1, n = 1, m = 1, radius = 8;
  std::size_t budget = 10000000;
};

int run_group_quotient(const GroupOpts& o) {
  auto m = load_machine(o.file);
  auto gens = resolve_generators(m, o.gens);
  auto q = lt::level_quotient(m, gens.words, o.level, o.budget);
  std::cout << "order: " << q.order() << "\n";
  return 0;
}

int run_group_falsify(const GroupOpts& o) {
  auto m = load_machine(o.file);
  auto gens = resolve_generators(m, o.gens);
  std::map<std::string, lt::StateWord> mapped;
  for (const auto& entry : split(o.map, ',')) {
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      lt::fail(lt::errc::invalid_parameter, "--map entries look like name:image");
    mapped[entry.substr(0, colon)] = parse_word_arg(m, entry.substr(colon + 1));
  }
  std::vector<lt::StateWord> images;
  for (std::size_t i = 0; i < gens.names.size(); ++i) {
    auto it = mapped.find(gens.names[i]);
    images.push_back(it != mapped.end() ? it->second : gens.words[i]);
  }
  auto res = lt::uc_falsify(m, gens.words, gens.names, images, o.n, o.m, o.radius, o.budget);
  if (res.found) {
    std::cout << "witness: " << res.witness_text << "\n";
    return kExitRefuted;
  }
  std::cout << "no witness within radius " << o.radius << "\n";
  return 0;
}

// --- lamp ------------------------------------------------------------------

struct LampOpts {
  long long k = 2;
  std::string elem, endo, endo2;
  long long allowance = 0, lmax = 12;
  int samples = 500;
  uint64_t seed = 1;
};

int run_lamp_eval(const LampOpts& o) {
  std::cout << lt::parse_lamp(o.k, o.elem).to_string() << "\n";
  return 0;
}

int run_lamp_order(const LampOpts& o) {
  auto ord = lt::lamp_order(lt::parse_lamp(o.k, o.elem));
  if (ord)
    std::cout << *ord << "\n";
  else
    std::cout << "infinite\n";
  return 0;
}

int run_lamp_stabdepth(const LampOpts& o) {
  auto depth = lt::stab_length(lt::parse_lamp(o.k, o.elem));
  if (depth)
    std::cout << *depth << "\n";
  else
    std::cout << "infinite\n";
  return 0;
}

int run_endo_apply(const LampOpts& o) {
  auto e = lt::parse_endo(o.k, o.endo);
  auto g = lt::parse_lamp(o.k, o.elem);
  std::cout << lt::endo_apply(e, g).to_string() << "\n";
  return 0;
}

int run_endo_compose(const LampOpts& o) {
  auto e1 = lt::parse_endo(o.k, o.endo);
  auto e2 = lt::parse_endo(o.k, o.endo2);
  std::cout << lt::endo_compose(e1, e2).to_string() << "\n";
  return 0;
}

int run_endo_check(const LampOpts& o) {
  auto res = lt::is_automorphism(lt::parse_endo(o.k, o.endo));
  if (res.ok) {
    std::cout << "automorphism: true\n";
    return 0;
  }
  std::cout << "automorphism: false (" << res.reason << ")\n";
  return kExitRefuted;
}

int run_endo_invert(const LampOpts& o) {
  std::cout << lt::endo_invert(lt::parse_endo(o.k, o.endo)).to_string() << "\n";
  return 0;
}

int run_lamp_decompose(const LampOpts& o) {
  auto e = lt::parse_endo(o.k, o.endo);
  long long p = 0;
  int s = 0;
  if (lt::is_prime(o.k)) {
    auto dec = lt::decompose_stab_prime(e);
    std::cout << "gamma(" << dec.m << "," << dec.j << ")\n";
    return 0;
  }
  if (lt::is_prime_power(o.k, p, s)) {
    auto word = lt::decompose_stab_prime_power(e);
    if (word.empty()) {
      std::cout << "identity\n";
      return 0;
    }
    for (std::size_t i = 0; i < word.size(); ++i)
      std::cout << (i ? "*" : "") << word[i].to_string();
    std::cout << "\n";
    return 0;
  }
  if (lt::is_squarefree(o.k)) {
    auto dec = lt::decompose_stab_squarefree(e);
    std::vector<std::string> parts;
    if (dec.j != 1) parts.push_back("eta(" + std::to_string(dec.j) + ")");
    for (std::size_t l = 0; l < dec.primes.size(); ++l) {
      long long m = dec.rho_exponents[l];
      if (m == 0) continue;
      std::string part = "rho(" + std::to_string(l + 1) + ")";
      if (m != 1) part += "^" + std::to_string(m);
      parts.push_back(part);
    }
    if (parts.empty()) {
      std::cout << "identity\n";
      return 0;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "*" : "") << parts[i];
    std::cout << "\n";
    return 0;
  }
  lt::fail(lt::errc::invalid_parameter,
           "decomposition supports prime, prime-power and squarefree moduli; " +
               std::to_string(o.k) + " is neither");
}

int run_lamp_luc(const LampOpts& o) {
  auto e = lt::parse_endo(o.k, o.endo);
  auto rep = lt::check_depth_preservation(e, o.allowance, o.samples, o.lmax, o.seed);
  std::cout << "samples: " << rep.samples << "\n";
  std::cout << "violations: " << rep.violations << "\n";
  for (const auto& d : rep.details) std::cout << "violation: " << d << "\n";
  return rep.violations == 0 ? 0 : kExitRefuted;
}

// --- verify-paper ----------------------------------------------------------

struct VerifyOpts {
  uint64_t seed = 1;
  std::string only, format = "text";
  bool list = false;
};

std::string resolve_block(const std::string& only) {
  auto names = lt::verify_block_names();
  for (const auto& n : names)
    if (n == only) return n;
  std::vector<std::string> hits;
  for (const auto& n : names)
    if (n.find(only) != std::string::npos) hits.push_back(n);
  if (hits.size() == 1) return hits[0];
  std::string msg = hits.empty() ? "no verification block matches '" + only + "'"
                                 : "ambiguous block '" + only + "': matches";
  for (const auto& h : hits) msg += " " + h;
  lt::fail(lt::errc::invalid_parameter, msg);
}

int run_verify_paper(const VerifyOpts& o) {
  if (o.list) {
    for (const auto& n : lt::verify_block_names()) std::cout << n << "\n";
    return 0;
  }
  std::string only = o.only.empty() ? "" : resolve_block(o.only);
  auto blocks = lt::run_verify(o.seed, only);
  std::size_t total = 0, passed = 0;
  const bool jsonl = o.format == "jsonl";
  if (!jsonl) std::cout << "verify-paper seed=" << o.seed << "\n";
  for (const auto& block : blocks) {
    for (const auto& check : block.checks) {
      ++total;
      if (check.pass) ++passed;
      if (jsonl) {
        nlohmann::ordered_json j;
        j["name"] = block.block + "/" + check.name;
        j["anchor"] = check.anchor;
        j["status"] = check.pass ? "pass" : "fail";
        j["elapsed_ms"] = check.elapsed_ms;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (check.pass ? "PASS " : "FAIL ") << block.block << "/" << check.name << " ["
                  << check.anchor << "]";
        if (!check.detail.empty()) std::cout << " " << check.detail;
        std::cout << "\n";
      }
    }
  }
  if (!jsonl)
    std::cout << "checks: " << total << " passed: " << passed << " failed: " << (total - passed)
              << "\n";
  return passed == total ? 0 : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for automaton groups and lamplighter automorphisms"};
  app.require_subcommand(1);
  int rc = 0;

  // machine
  auto machine_opts = std::make_shared<MachineOpts>();
  auto* machine = app.add_subcommand("machine", "Mealy machine operations");
  machine->require_subcommand(1);
  auto* minfo = machine->add_subcommand("info", "print a machine with an invertibility verdict");
  minfo->add_option("--file", machine_opts->file, "machine file")->required();
  minfo->add_flag("--dot", machine_opts->dot, "emit DOT graph instead of text");
  minfo->callback([machine_opts, &rc] { rc = run_machine_info(*machine_opts); });
  auto* mact = machine->add_subcommand("act", "apply a state word to an input word");
  mact->add_option("--file", machine_opts->file, "machine file")->required();
  mact->add_option("--word", machine_opts->word, "state word, e.g. p or p.q-1")->required();
  mact->add_option("--input", machine_opts->input, "input word over the alphabet")->required();
  mact->callback([machine_opts, &rc] { rc = run_machine_act(*machine_opts); });
  auto* mprod = machine->add_subcommand("product", "direct product of two machines");
  mprod->add_option("--file", machine_opts->file, "first machine file")->required();
  mprod->add_option("--file2", machine_opts->file2, "second machine file")->required();
  mprod->add_option("--out", machine_opts->out, "output path (default stdout)");
  mprod->callback([machine_opts, &rc] { rc = run_machine_product(*machine_opts); });
  auto* mid = machine->add_subcommand("identity", "decide whether a state word acts trivially");
  mid->add_option("--file", machine_opts->file, "machine file")->required();
  mid->add_option("--word", machine_opts->word, "state word")->required();
  mid->add_option("--budget", machine_opts->budget, "composite-state budget");
  mid->callback([machine_opts, &rc] { rc = run_machine_identity(*machine_opts); });

  // group
  auto group_opts = std::make_shared<GroupOpts>();
  auto* group = app.add_subcommand("group", "finite level quotients and witness search");
  group->require_subcommand(1);
  auto* gquot = group->add_subcommand("quotient", "order of the level-n action");
  gquot->add_option("--file", group_opts->file, "machine file")->required();
  gquot->add_option("--gens", group_opts->gens, "generators (default: every state)");
  gquot->add_option("--level", group_opts->level, "level n")->required();
  gquot->add_option("--budget", group_opts->budget, "element budget");
  gquot->callback([group_opts, &rc] { rc = run_group_quotient(*group_opts); });
  auto* gfals = group->add_subcommand(
      "falsify", "search for a word separating level-n triviality from its image");
  gfals->add_option("--file", group_opts->file, "machine file")->required();
  gfals->add_option("--gens", group_opts->gens, "generators (default: every state)");
  gfals->add_option("--map", group_opts->map, "substitution, e.g. p:r,r:p")->required();
  gfals->add_option("--n", group_opts->n, "source level")->required();
  gfals->add_option("--m", group_opts->m, "image level")->required();
  gfals->add_option("--radius", group_opts->radius, "maximum word length");
  gfals->add_option("--budget", group_opts->budget, "table-pair budget");
  gfals->callback([group_opts, &rc] { rc = run_group_falsify(*group_opts); });

  // lamp
  auto lamp_opts = std::make_shared<LampOpts>();
  auto* lamp = app.add_subcommand("lamp", "lamplighter elements and automorphisms");
  lamp->require_subcommand(1);
  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", lamp_opts->k, "lamp modulus k")->required();
  };
  auto* leval = lamp->add_subcommand("eval", "normal form of an element expression");
  add_k(leval);
  leval->add_option("--elem", lamp_opts->elem, "element expression")->required();
  leval->callback([lamp_opts, &rc] { rc = run_lamp_eval(*lamp_opts); });
  auto* lorder = lamp->add_subcommand("order", "order of an element");
  add_k(lorder);
  lorder->add_option("--elem", lamp_opts->elem, "element expression")->required();
  lorder->callback([lamp_opts, &rc] { rc = run_lamp_order(*lamp_opts); });
  auto* lstab = lamp->add_subcommand("stabdepth", "largest fully fixed word length");
  add_k(lstab);
  lstab->add_option("--elem", lamp_opts->elem, "element expression")->required();
  lstab->callback([lamp_opts, &rc] { rc = run_lamp_stabdepth(*lamp_opts); });
  auto* lendo = lamp->add_subcommand("endo", "endomorphism operations");
  lendo->require_subcommand(1);
  auto* eapply = lendo->add_subcommand("apply", "image of an element");
  add_k(eapply);
  eapply->add_option("--endo", lamp_opts->endo, "endomorphism expression")->required();
  eapply->add_option("--elem", lamp_opts->elem, "element expression")->required();
  eapply->callback([lamp_opts, &rc] { rc = run_endo_apply(*lamp_opts); });
  auto* ecomp = lendo->add_subcommand("compose", "apply the first, then the second");
  add_k(ecomp);
  ecomp->add_option("--endo", lamp_opts->endo, "first endomorphism")->required();
  ecomp->add_option("--endo2", lamp_opts->endo2, "second endomorphism")->required();
  ecomp->callback([lamp_opts, &rc] { rc = run_endo_compose(*lamp_opts); });
  auto* echeck = lendo->add_subcommand("check", "decide whether an endomorphism is invertible");
  add_k(echeck);
  echeck->add_option("--endo", lamp_opts->endo, "endomorphism expression")->required();
  echeck->callback([lamp_opts, &rc] { rc = run_endo_check(*lamp_opts); });
  auto* einv = lendo->add_subcommand("invert", "inverse automorphism");
  add_k(einv);
  einv->add_option("--endo", lamp_opts->endo, "endomorphism expression")->required();
  einv->callback([lamp_opts, &rc] { rc = run_endo_invert(*lamp_opts); });
  auto* ldec = lamp->add_subcommand("decompose", "generator word for an x-fixing automorphism");
  add_k(ldec);
  ldec->add_option("--endo", lamp_opts->endo, "endomorphism expression")->required();
  ldec->callback([lamp_opts, &rc] { rc = run_lamp_decompose(*lamp_opts); });
  auto* lluc = lamp->add_subcommand("luc", "sample depth preservation of an automorphism");
  add_k(lluc);
  lluc->add_option("--endo", lamp_opts->endo, "endomorphism expression")->required();
  lluc->add_option("--allowance", lamp_opts->allowance, "allowed depth loss (default 0)");
  lluc->add_option("--samples", lamp_opts->samples, "sample count");
  lluc->add_option("--lmax", lamp_opts->lmax, "maximum sampled stab depth");
  lluc->add_option("--seed", lamp_opts->seed, "random seed");
  lluc->callback([lamp_opts, &rc] { rc = run_lamp_luc(*lamp_opts); });

  // verify-paper
  auto verify_opts = std::make_shared<VerifyOpts>();
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  verify->add_option("--seed", verify_opts->seed, "seed for all randomized checks");
  verify->add_option("--only", verify_opts->only, "run a single block (name or substring)");
  verify->add_option("--format", verify_opts->format, "text or jsonl")
      ->check(CLI::IsMember({"text", "jsonl"}));
  verify->add_flag("--list", verify_opts->list, "list block names and exit");
  verify->callback([verify_opts, &rc] { rc = run_verify_paper(*verify_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const lt::error& e) {
    std::cerr << "error: " << e.what() << " [" << lt::errc_name(e.code()) << "]\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
