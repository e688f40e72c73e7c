#include "cgt/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cgt/compare.hpp"
#include "cgt/lpg.hpp"
#include "cgt/notation.hpp"
#include "json.hpp"

namespace cgt {

namespace {

struct SideChoice {
  bool atom;
  std::vector<Game> options;
  bool fresh;  // uses at least one form of the previous rank
};

// All admissible side payloads over pool[0..pool_size), ascending in the
// side order (atom first, then option sets lexicographically). Ascending
// index sequences over an ascending pool read off in lexicographic order
// visit the subsets exactly in that order.
std::vector<SideChoice> side_choices(const std::vector<Game>& pool, std::size_t fresh_from,
                                     std::size_t choice_guard, std::size_t max_subset_size) {
  std::vector<SideChoice> sides;
  sides.push_back(SideChoice{true, {}, false});
  if (pool.empty()) return sides;
  std::vector<std::size_t> seq{0};
  while (!seq.empty()) {
    if (sides.size() >= choice_guard) {
      throw std::length_error("enumeration exceeds the configured form limit");
    }
    std::vector<Game> options;
    options.reserve(seq.size());
    for (std::size_t i : seq) options.push_back(pool[i]);
    sides.push_back(SideChoice{false, std::move(options), seq.back() >= fresh_from});

    if (seq.back() + 1 < pool.size() &&
        (max_subset_size == 0 || seq.size() < max_subset_size)) {
      seq.push_back(seq.back() + 1);
    } else {
      while (!seq.empty()) {
        if (++seq.back() < pool.size()) break;
        seq.pop_back();
      }
    }
  }
  return sides;
}

}  // namespace

std::vector<Game> enumerate_members(const Universe& u, unsigned max_rank,
                                    const EnumerationLimits& limits) {
  if (u.adorn_kind() != AdornKind::kTrivial) {
    throw std::invalid_argument("universe " + u.id() +
                                " adorns with rationals; its member set has no finite census");
  }
  if (max_rank > limits.max_rank_cap) {
    throw std::invalid_argument("enumeration rank exceeds the configured cap");
  }

  std::vector<Game> all;
  Game zero = zero_game(AdornKind::kTrivial);
  if (u.member(zero)) all.push_back(zero);

  Side atom_side = Side::atom(make_adorn(AdornKind::kTrivial, 0));
  std::size_t fresh_from = 0;
  for (unsigned r = 1; r <= max_rank; ++r) {
    if (fresh_from == all.size()) break;  // previous rank added nothing
    std::size_t pool_size = all.size();
    std::vector<SideChoice> sides =
        side_choices(all, fresh_from, limits.max_forms, limits.max_subset_size);
    fresh_from = pool_size;
    for (const SideChoice& ls : sides) {
      for (const SideChoice& rs : sides) {
        if (!ls.fresh && !rs.fresh) continue;
        Side left = ls.atom ? atom_side : Side::with_options(ls.options);
        Side right = rs.atom ? atom_side : Side::with_options(rs.options);
        Game candidate = make_game(std::move(left), std::move(right));
        if (!u.member(candidate)) continue;
        all.push_back(candidate);
        if (all.size() > limits.max_forms) {
          throw std::length_error("enumeration exceeds the configured form limit");
        }
      }
    }
  }
  return all;
}

std::vector<EquivalenceClass> quotient(const Universe& u, const std::vector<Game>& forms) {
  std::vector<Game> sorted = forms;
  std::sort(sorted.begin(), sorted.end(), form_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<EquivalenceClass> classes;
  for (Game g : sorted) {
    bool placed = false;
    for (EquivalenceClass& c : classes) {
      if (geq(u, g, c.representative) && geq(u, c.representative, g)) {
        c.members.push_back(g);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(EquivalenceClass{g, {g}});
  }
  return classes;
}

HasseDiagram hasse(const Universe& u, unsigned max_rank, const EnumerationLimits& limits) {
  HasseDiagram diagram;
  diagram.classes = quotient(u, enumerate_members(u, max_rank, limits));
  const std::size_t n = diagram.classes.size();

  std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      above[i][j] = geq(u, diagram.classes[i].representative, diagram.classes[j].representative);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!above[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k) {
        if (above[i][k] && above[k][j]) covering = false;
      }
      if (!covering) continue;
      Game upper = diagram.classes[i].representative;
      Game lower = diagram.classes[j].representative;
      NormalGame label = canonical_form(unfold(make_lpg(u, upper, lower)));
      diagram.edges.push_back(HasseEdge{upper, lower, label});
    }
  }
  return diagram;
}

std::string hasse_dot(const Universe& u, const HasseDiagram& diagram) {
  std::string out = "digraph hasse {\n  node [shape=ellipse];\n  edge [dir=none];\n";
  for (std::size_t i = 0; i < diagram.classes.size(); ++i) {
    out += "  c" + std::to_string(i) + " [label=\"" +
           display_name(u, diagram.classes[i].representative) + "\"];\n";
  }
  auto class_id = [&](Game g) {
    for (std::size_t i = 0; i < diagram.classes.size(); ++i) {
      if (diagram.classes[i].representative == g) return i;
    }
    return diagram.classes.size();
  };
  for (const HasseEdge& e : diagram.edges) {
    out += "  c" + std::to_string(class_id(e.upper)) + " -> c" +
           std::to_string(class_id(e.lower)) + " [label=\"" + to_string(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string hasse_json(const Universe& u, const HasseDiagram& diagram) {
  nlohmann::json j;
  j["universe"] = u.id();
  j["classes"] = nlohmann::json::array();
  for (const EquivalenceClass& c : diagram.classes) {
    nlohmann::json jc;
    jc["name"] = display_name(u, c.representative);
    jc["representative"] = format_game(c.representative);
    jc["members"] = nlohmann::json::array();
    for (Game m : c.members) jc["members"].push_back(format_game(m));
    j["classes"].push_back(std::move(jc));
  }
  j["edges"] = nlohmann::json::array();
  for (const HasseEdge& e : diagram.edges) {
    nlohmann::json je;
    je["upper"] = display_name(u, e.upper);
    je["lower"] = display_name(u, e.lower);
    je["label"] = to_string(e.label);
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

}  // namespace cgt
