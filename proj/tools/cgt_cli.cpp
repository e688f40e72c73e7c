#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cgt/category.hpp"
#include "cgt/compare.hpp"
#include "cgt/lattice.hpp"
#include "cgt/lpg.hpp"
#include "cgt/notation.hpp"
#include "cgt/universe.hpp"

namespace {

using namespace cgt;

NotationMode mode_for(const Universe& u) {
  return u.adorn_kind() == AdornKind::kRational ? NotationMode::kScoring
                                                : NotationMode::kTrivial;
}

std::string outcome_text(const Universe& u, const OutcomePair& o) {
  return to_string(o, u.convention() == Convention::kScoringPlay);
}

void print_direction(const Universe& u, const CompareReport& r, bool forward) {
  const char* gh = forward ? "(G,H)" : "(H,G)";
  bool proviso = forward ? r.proviso_gh : r.proviso_hg;
  bool maintains = forward ? r.maintain_gh : r.maintain_hg;
  const OutcomePair& first = forward ? r.outcome_g : r.outcome_h;
  const OutcomePair& second = forward ? r.outcome_h : r.outcome_g;
  std::cout << "Proviso" << gh << ": " << (proviso ? "holds" : "fails");
  if (!proviso) {
    std::cout << " (o(" << (forward ? 'G' : 'H') << ") = " << outcome_text(u, first)
              << " is not >= o(" << (forward ? 'H' : 'G') << ") = " << outcome_text(u, second)
              << ")";
  }
  std::cout << "\n";
  std::cout << "Maintenance" << gh << ": " << (maintains ? "holds" : "fails") << "\n";
  std::cout << "provisional game " << (forward ? "[G,H]" : "[H,G]") << " = "
            << to_string(forward ? r.lpg_gh : r.lpg_hg) << "\n";
}

int run_compare(const Universe& u, const std::string& g_text, const std::string& h_text,
                bool explain, bool oracle) {
  Game g = parse_game(g_text, mode_for(u));
  Game h = parse_game(h_text, mode_for(u));
  Relation rel;
  if (explain) {
    CompareReport r = compare_report(u, g, h);
    std::cout << "o(G) = " << outcome_text(u, r.outcome_g) << "\n";
    std::cout << "o(H) = " << outcome_text(u, r.outcome_h) << "\n";
    print_direction(u, r, true);
    print_direction(u, r, false);
    rel = r.relation;
  } else {
    rel = relation(u, g, h);
  }
  if (oracle) {
    bool ge = geq(u, g, h);
    bool le = geq(u, h, g);
    bool cnp_ge = geq_cnp_oracle(u, g, h);
    bool cnp_le = geq_cnp_oracle(u, h, g);
    if (ge == cnp_ge && le == cnp_le) {
      std::cout << "second-path oracle: agrees\n";
    } else {
      std::cout << "second-path oracle: DISAGREES (G>=H " << cnp_ge << ", H>=G " << cnp_le
                << ")\n";
    }
    try {
      std::optional<Game> wg = distinguish(u, g, h, 2);
      std::optional<Game> wh = distinguish(u, h, g, 2);
      auto describe = [&](const char* dir, bool holds, const std::optional<Game>& w) {
        std::cout << "distinguish rank<=2 " << dir << ": ";
        if (w) {
          std::cout << "witness X = " << format_game(*w)
                    << (holds ? " CONTRADICTS the verdict" : " refutes it") << "\n";
        } else {
          std::cout << "no witness" << (holds ? "" : " at this rank") << "\n";
        }
      };
      describe("G>=H", ge, wg);
      describe("H>=G", le, wh);
    } catch (const std::invalid_argument&) {
      std::cout << "distinguish: unavailable (no finite census of members)\n";
    }
  }
  std::cout << relation_string(rel) << "\n";
  return 0;
}

int run_batch(const Universe& u) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      std::cerr << "batch line " << line_no << ": expected G<TAB>H\n";
      return 2;
    }
    Game g = parse_game(std::string_view(line).substr(0, tab), mode_for(u));
    Game h = parse_game(std::string_view(line).substr(tab + 1), mode_for(u));
    std::cout << relation_string(relation(u, g, h)) << "\n";
  }
  return 0;
}

int run_outcome(const Universe& u, const std::string& g_text) {
  Game g = parse_game(g_text, mode_for(u));
  std::cout << outcome_text(u, outcome(u, g)) << "\n";
  return 0;
}

int run_lpg(const Universe& u, const std::string& g_text, const std::string& h_text,
            bool canonical, const std::string& tree) {
  Game g = parse_game(g_text, mode_for(u));
  Game h = parse_game(h_text, mode_for(u));
  LpgPosition p = make_lpg(u, g, h);
  if (tree == "dot") {
    std::cout << lpg_tree_dot(p);
    return 0;
  }
  NormalGame value = unfold(p);
  if (canonical) value = canonical_form(value);
  std::cout << to_string(value) << "\n";
  return 0;
}

int run_hasse(const Universe& u, unsigned max_rank, const std::string& format) {
  HasseDiagram diagram = hasse(u, max_rank);
  std::cout << (format == "json" ? hasse_json(u, diagram) : hasse_dot(u, diagram));
  return 0;
}

int run_category(const Universe& u, bool verify_laws, unsigned max_rank,
                 const std::vector<std::string>& witness) {
  if (!witness.empty()) {
    Game g = parse_game(witness[0], mode_for(u));
    Game j = parse_game(witness[1], mode_for(u));
    Game h = parse_game(witness[2], mode_for(u));
    std::optional<MaintenanceStrategy> outer = extract_strategy(u, g, j);
    std::optional<MaintenanceStrategy> inner = extract_strategy(u, j, h);
    if (!outer || !inner) {
      std::cerr << "no maintenance strategy for "
                << (outer ? witness[1] + " >= " + witness[2]
                          : witness[0] + " >= " + witness[1])
                << "\n";
      return 1;
    }
    std::cout << strategy_table_string(compose(*outer, *inner));
    return 0;
  }
  if (verify_laws) {
    LawReport report = verify_category_laws(u, max_rank);
    std::cout << law_report_string(report);
    return report.ok() ? 0 : 1;
  }
  std::cerr << "category needs --verify-laws or --witness G J H\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comparison calculator for games in absolute universes"};
  app.require_subcommand(1);

  std::string universe_name = "dicot-misere";
  const std::string universe_help = "normal | dicot-misere | free-misere | dicot-scoring";
  std::string g_text, h_text;
  bool explain = false, oracle = false, batch = false, canonical = false, verify_laws = false;
  std::string tree, format = "dot";
  unsigned max_rank = 2;
  std::vector<std::string> witness;

  CLI::App* cmd_compare = app.add_subcommand("compare", "decide how two games are ordered");
  cmd_compare->add_option("-u,--universe", universe_name, universe_help);
  cmd_compare->add_option("G", g_text, "first game");
  cmd_compare->add_option("H", h_text, "second game");
  cmd_compare->add_flag("--explain", explain, "show proviso, maintenance and unfolded values");
  cmd_compare->add_flag("--oracle", oracle, "cross-check with the independent order oracles");
  cmd_compare->add_flag("--batch", batch, "read G<TAB>H lines from stdin");

  CLI::App* cmd_outcome = app.add_subcommand("outcome", "optimal-play outcome of a game");
  cmd_outcome->add_option("-u,--universe", universe_name, universe_help);
  cmd_outcome->add_option("G", g_text, "game")->required();

  CLI::App* cmd_lpg = app.add_subcommand("lpg", "unfold the provisional comparison game");
  cmd_lpg->add_option("-u,--universe", universe_name, universe_help);
  cmd_lpg->add_option("G", g_text, "first game")->required();
  cmd_lpg->add_option("H", h_text, "second game")->required();
  cmd_lpg->add_flag("--canonical", canonical, "print the canonical normal-play value");
  cmd_lpg->add_option("--tree", tree, "emit the full game tree (dot)")
      ->check(CLI::IsMember({"dot"}));

  CLI::App* cmd_hasse = app.add_subcommand("hasse", "order diagram of all members up to a rank");
  cmd_hasse->add_option("-u,--universe", universe_name, universe_help);
  cmd_hasse->add_option("--max-rank", max_rank, "enumeration depth");
  cmd_hasse->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  CLI::App* cmd_category = app.add_subcommand("category", "maintenance strategies as morphisms");
  cmd_category->add_option("-u,--universe", universe_name, universe_help);
  cmd_category->add_flag("--verify-laws", verify_laws, "check composition, associativity, identity");
  cmd_category->add_option("--max-rank", max_rank, "poset enumeration depth");
  cmd_category->add_option("--witness", witness, "compose strategies for G >= J >= H")
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Universe* u = find_universe(universe_name);
  if (u == nullptr) {
    std::cerr << "unknown universe '" << universe_name << "' (" << universe_help << ")\n";
    return 2;
  }

  try {
    if (cmd_compare->parsed()) {
      if (batch) return run_batch(*u);
      if (g_text.empty() || h_text.empty()) {
        std::cerr << "compare needs two games (or --batch)\n";
        return 2;
      }
      return run_compare(*u, g_text, h_text, explain, oracle);
    }
    if (cmd_outcome->parsed()) return run_outcome(*u, g_text);
    if (cmd_lpg->parsed()) return run_lpg(*u, g_text, h_text, canonical, tree);
    if (cmd_hasse->parsed()) return run_hasse(*u, max_rank, format);
    if (cmd_category->parsed()) return run_category(*u, verify_laws, max_rank, witness);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const NonMemberError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
