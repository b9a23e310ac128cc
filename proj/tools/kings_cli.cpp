// Command-line surface over the king-poset library: enumeration, pattern
// queries, deletion operators, inflation, downsets, Möbius values, and the
// theorem verification harness.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kings/deletion.hpp"
#include "kings/inflation.hpp"
#include "kings/kingdom.hpp"
#include "kings/mobius.hpp"
#include "kings/patterns.hpp"
#include "kings/permutation.hpp"
#include "kings/poset.hpp"
#include "kings/verify.hpp"

namespace {

using nlohmann::json;
using namespace kings;

json perm_json(const Permutation& p) { return json(p.values()); }

json separator_json(const SeparatorReport& r) {
  json kinds = json::array();
  if (r.vertical) kinds.push_back("vertical");
  if (r.horizontal) kinds.push_back("horizontal");
  json out{{"value", r.value}, {"kinds", kinds}};
  out["vertical_witness"] =
      r.vertical_witness ? json((*r.vertical_witness)) : json(nullptr);
  out["horizontal_witness"] =
      r.horizontal_witness ? json((*r.horizontal_witness)) : json(nullptr);
  return out;
}

json decomposition_json(const InflationDecomposition& d) {
  json comps = json::array();
  for (const Permutation& c : d.components) comps.push_back(perm_json(c));
  return json{{"skeleton", perm_json(d.skeleton)},
              {"components", comps},
              {"offsets", d.offsets}};
}

json report_json(const VerificationReport& rep) {
  return json{{"theorem_id", rep.theorem_id}, {"range", rep.range},
              {"checked", rep.checked},       {"failures", rep.failures},
              {"elapsed_seconds", rep.elapsed_seconds}, {"ok", rep.ok()}};
}

void print_report(const VerificationReport& rep) {
  std::cout << rep.theorem_id << ": checked " << rep.checked << " instances over " << rep.range
            << " in " << rep.elapsed_seconds << " s — " << (rep.ok() ? "ok" : "FAILED") << "\n";
  std::size_t shown = 0;
  for (const std::string& f : rep.failures) {
    if (++shown > 10) {
      std::cout << "  ... " << rep.failures.size() - 10 << " more failures\n";
      break;
    }
    std::cout << "  counterexample: " << f << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"king permutation poset toolkit"};
  app.require_subcommand(1);

  // enumerate
  int enum_n = 0;
  bool enum_list = false;
  int enum_jobs = 1;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "count (or list) the kings of S_n");
  cmd_enumerate->add_option("n", enum_n, "permutation size")->required()->check(CLI::PositiveNumber);
  cmd_enumerate->add_flag("--list", enum_list, "print every king, one per line");
  cmd_enumerate->add_option("--jobs", enum_jobs, "worker threads for counting");

  // contains / occurrences
  std::string host_text, pat_text;
  bool contains_json = false;
  auto* cmd_contains = app.add_subcommand("contains", "does <host> contain <pattern>?");
  cmd_contains->add_option("host", host_text)->required();
  cmd_contains->add_option("pattern", pat_text)->required();
  cmd_contains->add_flag("--json", contains_json);
  auto* cmd_occurrences = app.add_subcommand("occurrences", "all occurrences of <pattern> in <host>");
  cmd_occurrences->add_option("host", host_text)->required();
  cmd_occurrences->add_option("pattern", pat_text)->required();

  // separators
  std::string sep_text;
  auto* cmd_separators = app.add_subcommand("separators", "separator values with kinds and witnesses");
  cmd_separators->add_option("perm", sep_text)->required();

  // nabla
  std::string nabla_text;
  int nabla_pos = 0;
  std::vector<int> nabla_values;
  bool nabla_json = false;
  auto* cmd_nabla = app.add_subcommand("nabla", "delete by position or by value(s)");
  cmd_nabla->add_option("perm", nabla_text)->required();
  auto* opt_pos = cmd_nabla->add_option("--pos", nabla_pos, "position to delete");
  auto* opt_val = cmd_nabla->add_option("--value", nabla_values,
                                        "value to delete; repeat for a sequence");
  opt_pos->excludes(opt_val);
  cmd_nabla->add_flag("--json", nabla_json);

  // inflate / decompose
  std::string skel_text;
  std::vector<std::string> comp_texts;
  auto* cmd_inflate = app.add_subcommand("inflate", "inflate a skeleton by components");
  cmd_inflate->add_option("skeleton", skel_text)->required();
  cmd_inflate->add_option("components", comp_texts)->required()->expected(-1);
  std::string decomp_text;
  auto* cmd_decompose = app.add_subcommand("decompose", "quad-block decomposition, if any");
  cmd_decompose->add_option("perm", decomp_text)->required();

  // princes
  std::string princes_text;
  bool princes_json = false;
  auto* cmd_princes = app.add_subcommand("princes", "kings reachable by one value deletion");
  cmd_princes->add_option("perm", princes_text)->required();
  cmd_princes->add_flag("--json", princes_json);

  // downset
  std::string downset_text;
  bool downset_dot = false, downset_mobius = false, downset_json = false;
  int downset_cap = kDefaultDownsetCap;
  auto* cmd_downset = app.add_subcommand("downset", "king downset with cover edges");
  cmd_downset->add_option("perm", downset_text)->required();
  cmd_downset->add_flag("--dot", downset_dot, "emit a DOT digraph");
  cmd_downset->add_flag("--mobius", downset_mobius, "label nodes with mu values");
  cmd_downset->add_flag("--json", downset_json);
  cmd_downset->add_option("--cap-override", downset_cap, "raise the root size cap");

  // mobius
  std::string mob_sigma, mob_tau;
  int mob_cap = kDefaultDownsetCap;
  auto* cmd_mobius = app.add_subcommand("mobius", "mu(tau, sigma); tau defaults to [1]");
  cmd_mobius->add_option("sigma", mob_sigma)->required();
  cmd_mobius->add_option("tau", mob_tau);
  cmd_mobius->add_option("--cap-override", mob_cap, "raise the size cap");

  // chain
  std::string chain_lo, chain_hi;
  auto* cmd_chain = app.add_subcommand("chain", "a king chain from pi to sigma with gaps in {1,3}");
  cmd_chain->add_option("pi", chain_lo)->required();
  cmd_chain->add_option("sigma", chain_hi)->required();

  // plot
  std::string plot_text;
  auto* cmd_plot = app.add_subcommand("plot", "ASCII grid plot");
  cmd_plot->add_option("perm", plot_text)->required();

  // verify
  std::string verify_id;
  VerifyOptions vopts;
  bool verify_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem check ('all' runs every one)");
  cmd_verify->add_option("id", verify_id, "theorem id or 'all'")->required();
  cmd_verify->add_option("--max-n", vopts.max_n, "largest size to sweep");
  cmd_verify->add_option("--jobs", vopts.jobs, "worker threads");
  cmd_verify->add_option("--seed", vopts.seed, "seed for randomized checks");
  cmd_verify->add_flag("--full-filter", vopts.full_filter,
                       "exhaustively filter prince-less kings past n = 8 (slow)");
  cmd_verify->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);

    if (*cmd_enumerate) {
      const int n = enum_n;
      if (enum_list) {
        std::uint64_t count = 0;
        generate_kings(n, [&](const Permutation& p) {
          std::cout << p.bracket_string() << "\n";
          ++count;
          return true;
        });
        std::cout << count << "\n";
      } else {
        std::cout << count_kings(n, enum_jobs) << "\n";
      }
      return 0;
    }

    if (*cmd_contains) {
      const Permutation host = Permutation::parse(host_text);
      const Permutation pat = Permutation::parse(pat_text);
      const auto occ = occurrences(host, pat);
      if (contains_json) {
        std::cout << json{{"contains", !occ.empty()}, {"count", occ.size()}}.dump() << "\n";
      } else {
        std::cout << occ.size() << "\n";
      }
      return occ.empty() ? 1 : 0;
    }

    if (*cmd_occurrences) {
      const Permutation host = Permutation::parse(host_text);
      const Permutation pat = Permutation::parse(pat_text);
      json arr = json::array();
      for (const PatternOccurrence& o : occurrences(host, pat)) arr.push_back(o.positions);
      std::cout << arr.dump() << "\n";
      return 0;
    }

    if (*cmd_separators) {
      json arr = json::array();
      for (const SeparatorReport& r : separators(Permutation::parse(sep_text))) {
        arr.push_back(separator_json(r));
      }
      std::cout << arr.dump() << "\n";
      return 0;
    }

    if (*cmd_nabla) {
      const Permutation p = Permutation::parse(nabla_text);
      std::vector<Permutation> steps;
      if (opt_pos->count() > 0) {
        steps.push_back(delete_position(p, nabla_pos));
      } else if (!nabla_values.empty()) {
        steps = delete_values_trace(p, nabla_values);
      } else {
        throw CLI::RequiredError("one of --pos / --value");
      }
      if (nabla_json) {
        json arr = json::array();
        for (const Permutation& q : steps) arr.push_back(perm_json(q));
        std::cout << arr.dump() << "\n";
      } else {
        for (const Permutation& q : steps) std::cout << q.display_string() << "\n";
      }
      return 0;
    }

    if (*cmd_inflate) {
      const Permutation skel = Permutation::parse(skel_text);
      std::vector<Permutation> comps;
      for (const std::string& t : comp_texts) comps.push_back(Permutation::parse(t));
      std::cout << inflate(skel, comps).display_string() << "\n";
      return 0;
    }

    if (*cmd_decompose) {
      const auto d = quadblock_decompose(Permutation::parse(decomp_text));
      std::cout << (d ? decomposition_json(*d) : json(nullptr)).dump() << "\n";
      return 0;
    }

    if (*cmd_princes) {
      const auto ps = princes(Permutation::parse(princes_text));
      if (princes_json) {
        json arr = json::array();
        for (const Permutation& q : ps) arr.push_back(perm_json(q));
        std::cout << arr.dump() << "\n";
      } else {
        for (const Permutation& q : ps) std::cout << q.bracket_string() << "\n";
        std::cout << ps.size() << "\n";
      }
      return 0;
    }

    if (*cmd_downset) {
      const KingDownset d = downset(Permutation::parse(downset_text), downset_cap);
      if (downset_dot) {
        std::cout << hasse_dot(d, downset_mobius);
      } else if (downset_json) {
        json nodes = json::array();
        json edges = json::array();
        for (const Permutation& p : d.nodes) nodes.push_back(perm_json(p));
        for (const auto& [lo, hi] : d.cover_edges) {
          edges.push_back(json::array({perm_json(lo), perm_json(hi)}));
        }
        json out{{"root", perm_json(d.root)}, {"nodes", nodes}, {"cover_edges", edges}};
        if (downset_mobius) {
          json mus = json::object();
          for (const auto& [p, mu] : mobius_downset_labels(d)) mus[p.bracket_string()] = mu;
          out["mobius"] = mus;
        }
        std::cout << out.dump() << "\n";
      } else {
        std::map<Permutation, long long> labels;
        if (downset_mobius) labels = mobius_downset_labels(d);
        for (const Permutation& p : d.nodes) {
          std::cout << p.bracket_string();
          if (downset_mobius) std::cout << " mu=" << labels.at(p);
          std::cout << "\n";
        }
        std::cout << d.nodes.size() << " nodes, " << d.cover_edges.size() << " edges\n";
      }
      return 0;
    }

    if (*cmd_mobius) {
      const Permutation sigma = Permutation::parse(mob_sigma);
      const Permutation tau = mob_tau.empty() ? Permutation({1}) : Permutation::parse(mob_tau);
      std::cout << mobius(tau, sigma, mob_cap) << "\n";
      return 0;
    }

    if (*cmd_chain) {
      const Chain c = find_chain(Permutation::parse(chain_lo), Permutation::parse(chain_hi));
      for (const Permutation& p : c.elements) std::cout << p.display_string() << "\n";
      return 0;
    }

    if (*cmd_plot) {
      std::cout << ascii_plot(Permutation::parse(plot_text));
      return 0;
    }

    if (*cmd_verify) {
      std::vector<std::string> ids;
      if (verify_id == "all") {
        ids = verification_ids();
      } else {
        ids.push_back(verify_id);
      }
      bool all_ok = true;
      json arr = json::array();
      for (const std::string& id : ids) {
        const VerificationReport rep = run_verification(id, vopts);
        all_ok = all_ok && rep.ok();
        if (verify_json) {
          arr.push_back(report_json(rep));
        } else {
          print_report(rep);
        }
      }
      if (verify_json) std::cout << arr.dump() << "\n";
      return all_ok ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
