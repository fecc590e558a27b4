// Command line surface for the trigonal diagram calculus.
//
// Exit codes: 0 success, 1 failures / negative predicate, 2 usage or parse
// error, 3 search budget exhausted.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigonal/generators.hpp"
#include "trigonal/search.hpp"
#include "trigonal/verify.hpp"

namespace {

using nlohmann::json;
using namespace trigonal;

int g_indent = -1;  // -1: compact

void emit(const json& j) { std::cout << j.dump(g_indent) << "\n"; }

Word arg_word(const std::string& text) { return parse_word(text); }

LinkClass arg_class(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("class must be written as ALPHA/BETA, e.g. 5/1");
  const std::int64_t alpha = std::stoll(text.substr(0, slash));
  const std::int64_t beta = std::stoll(text.substr(slash + 1));
  if (alpha <= 1) return {alpha, {}};
  std::int64_t r = beta % alpha;
  if (r < 0) r += alpha;
  const std::int64_t inv = mod_inverse(r, alpha);
  if (r == inv) return {alpha, {r}};
  return {alpha, {std::min(r, inv), std::max(r, inv)}};
}

json steps_to_json(const SimplifyPath& path) {
  json steps = json::array();
  for (const auto& s : path.steps)
    steps.push_back({{"rule", rule_name(s.move.rule)},
                     {"at", s.move.start},
                     {"neg", s.move.negated},
                     {"rev", s.move.reversed},
                     {"to", format_word(s.to)}});
  return steps;
}

void print_trace(const SimplifyPath& path) {
  Word cur = path.start;
  for (const auto& s : path.steps) {
    std::cout << trace_line(cur, s.move, s.to) << "\n";
    cur = s.to;
  }
}

int report_exit(const VerifyReport& rep) {
  if (rep.budget_hit()) return 3;
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trigonal - exact two-bridge diagram calculus"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string word_text, other_text, class_text, which;
  std::int64_t max_states = 200000, max_length_limit = 0;
  bool trace = false, dot = false, with_timing = false;
  std::int64_t max_crossings = 0, max_length = 0, entry_bound = 0, margin = 2, trials = 10000;
  std::uint64_t seed = 42;
  int steps = 0;

  auto* c_eval = app.add_subcommand("eval", "Schubert pair and link class of a word");
  c_eval->add_option("word", word_text)->required();

  auto* c_norm = app.add_subcommand("normalize", "canonical alternating form, C notation");
  c_norm->add_option("word", word_text)->required();

  auto* c_same = app.add_subcommand("same-link", "do two words describe the same link?");
  c_same->add_option("word", word_text)->required();
  c_same->add_option("other", other_text)->required();

  auto* c_moves = app.add_subcommand("moves", "applicable slide instances with deltas");
  c_moves->add_option("word", word_text)->required();

  auto* c_simp = app.add_subcommand("simplify", "search for a reachable alternating word");
  c_simp->add_option("word", word_text)->required();
  c_simp->add_option("--max-states", max_states);
  c_simp->add_option("--max-length", max_length_limit);
  c_simp->add_flag("--trace", trace, "print trace lines instead of JSON");

  auto* c_simple = app.add_subcommand("simple", "is the word catalog-simple?");
  c_simple->add_option("word", word_text)->required();
  c_simple->add_option("--max-states", max_states);

  auto* c_hard = app.add_subcommand("hard", "does the word satisfy the hard conditions?");
  c_hard->add_option("word", word_text)->required();

  auto* c_gen = app.add_subcommand("gen", "construct awkward / hard diagrams");
  c_gen->add_option("kind", which)->required()->check(CLI::IsMember({"awkward", "hard"}));
  c_gen->add_option("normal", word_text)->required();

  auto* c_scr = app.add_subcommand("scramble", "seeded class-preserving rewrites");
  c_scr->add_option("word", word_text)->required();
  c_scr->add_option("--steps", steps)->required();
  c_scr->add_option("--seed", seed);

  auto* c_enum = app.add_subcommand("enumerate", "zero-free words within bounds");
  c_enum->add_option("--max-crossings", max_crossings)->required();
  c_enum->add_option("--max-length", max_length);
  c_enum->add_option("--entry-bound", entry_bound);
  c_enum->add_option("--class", class_text);

  auto* c_verify = app.add_subcommand("verify", "run a verification harness");
  c_verify->add_option("harness", which)
      ->required()
      ->check(CLI::IsMember({"thm1", "prop", "lemma", "moves", "gen"}));
  c_verify->add_option("--class", class_text, "thm1: restrict to one class ALPHA/BETA");
  c_verify->add_option("--max-crossings", max_crossings);
  c_verify->add_option("--max-length", max_length);
  c_verify->add_option("--entry-bound", entry_bound);
  c_verify->add_option("--margin", margin, "thm1: crossings margin over the normal form");
  c_verify->add_option("--trials", trials);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--max-states", max_states);
  c_verify->add_flag("--timing", with_timing, "include elapsed_ms in the report");

  auto* c_graph = app.add_subcommand("graph", "closure graph of a word");
  c_graph->add_option("word", word_text)->required();
  c_graph->add_flag("--dot", dot, "emit DOT (the only format)");
  c_graph->add_option("--max-states", max_states);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }
  g_indent = pretty ? 2 : -1;

  try {
    if (*c_eval) {
      const Word w = arg_word(word_text);
      const SchubertPair f = eval_word(w);
      const LinkClass c = link_class(w);
      emit({{"alpha", f.alpha}, {"beta", f.beta}, {"residues", c.residues}});
      return 0;
    }
    if (*c_norm) {
      const Word w = arg_word(word_text);
      std::cout << format_word(normal_form(link_class(w)), Notation::C) << "\n";
      return 0;
    }
    if (*c_same) {
      const LinkClass a = link_class(arg_word(word_text));
      const LinkClass b = link_class(arg_word(other_text));
      emit({{"same", a == b}, {"left", class_to_json(a)}, {"right", class_to_json(b)}});
      return a == b ? 0 : 1;
    }
    if (*c_moves) {
      const Word w = arg_word(word_text);
      json arr = json::array();
      for (const MoveInstance& inst : enumerate_moves(w)) {
        const auto [dc, dx] = move_deltas(w, inst);
        arr.push_back({{"rule", rule_name(inst.rule)},
                       {"at", inst.start},
                       {"neg", inst.negated},
                       {"rev", inst.reversed},
                       {"to", format_word(apply_move(w, inst))},
                       {"crossing_delta", dc},
                       {"complexity_delta", dx}});
      }
      emit(arr);
      return 0;
    }
    if (*c_simp) {
      const Word w = arg_word(word_text);
      const SearchLimits lim{static_cast<std::size_t>(max_states),
                             static_cast<std::size_t>(max_length_limit)};
      const SimplifyResult res = simplify_to_alternating(w, lim);
      const bool reached = res.kind == SimplifyResult::Kind::Reached;
      if (trace) {
        if (reached) {
          print_trace(res.path);
        } else {
          std::cout << "not reached; minimal reachable words:\n";
          for (const Word& u : res.minima) std::cout << "  " << format_word(u) << "\n";
        }
      } else {
        json j{{"start", format_word(w)},
               {"reached", reached},
               {"final", format_word(res.final_word())},
               {"steps", steps_to_json(res.path)}};
        if (!reached) {
          json minima = json::array();
          for (const Word& u : res.minima) minima.push_back(format_word(u));
          j["minima"] = minima;
        }
        emit(j);
      }
      if (res.kind == SimplifyResult::Kind::Budget) return 3;
      return reached ? 0 : 1;
    }
    if (*c_simple) {
      const Word w = arg_word(word_text);
      const auto verdict = is_catalog_simple(w, {static_cast<std::size_t>(max_states), 0});
      emit({{"word", format_word(w)}, {"simple", verdict == SimpleVerdict::Simple}});
      if (verdict == SimpleVerdict::Unknown) return 3;
      return verdict == SimpleVerdict::Simple ? 0 : 1;
    }
    if (*c_hard) {
      const Word w = arg_word(word_text);
      emit({{"word", format_word(w)}, {"hard", is_hard(w)}});
      return is_hard(w) ? 0 : 1;
    }
    if (*c_gen) {
      const Word w = arg_word(word_text);
      std::cout << format_word(which == "awkward" ? awkward_diagram(w) : hard_diagram(w)) << "\n";
      return 0;
    }
    if (*c_scr) {
      std::cout << format_word(scramble(arg_word(word_text), steps, seed)) << "\n";
      return 0;
    }
    if (*c_enum) {
      if (max_length == 0) max_length = max_crossings;
      if (entry_bound == 0) entry_bound = max_crossings;
      const EnumBounds b{max_crossings, max_length, entry_bound};
      std::optional<LinkClass> filter;
      if (!class_text.empty()) filter = arg_class(class_text);
      for_each_word(b, [&](const Word& w) {
        if (filter && link_class(w) != *filter) return;
        std::cout << format_word(w) << "\n";
      });
      return 0;
    }
    if (*c_verify) {
      const SearchLimits lim{static_cast<std::size_t>(max_states), 0};
      VerifyReport rep;
      if (which == "thm1") {
        if (max_length == 0) max_length = 7;
        if (entry_bound == 0) entry_bound = 10;
        if (!class_text.empty()) {
          const LinkClass c = arg_class(class_text);
          const std::int64_t cr =
              max_crossings ? max_crossings : crossing_count(normal_form(c)) + margin;
          rep = check_alternating_reachability(c, {cr, max_length, entry_bound}, lim);
        } else {
          rep = check_alternating_reachability_roster(margin, max_length, entry_bound, lim);
        }
      } else if (which == "prop") {
        rep = check_simple_diagram_conditions(
            {max_crossings ? max_crossings : 8, max_length ? max_length : 5,
             entry_bound ? entry_bound : 5},
            lim);
      } else if (which == "lemma") {
        const std::int64_t len = max_length ? max_length : 6;
        const std::int64_t ent = entry_bound ? entry_bound : 5;
        rep = check_fraction_bounds({max_crossings ? max_crossings : len * ent, len, ent});
      } else if (which == "moves") {
        rep = check_move_soundness(trials, seed);
      } else {
        rep = check_generators({max_crossings ? max_crossings : 20, max_length ? max_length : 5,
                                entry_bound ? entry_bound : 4},
                               lim);
      }
      emit(rep.to_json(with_timing));
      return report_exit(rep);
    }
    if (*c_graph) {
      const Word w = arg_word(word_text);
      const ClosureResult cl = closure(w, {static_cast<std::size_t>(max_states), 0});
      (void)dot;
      std::cout << "digraph closure {\n";
      for (const Word& u : cl.words) std::cout << "  \"" << format_word(u) << "\";\n";
      for (const Word& u : cl.words)
        for (const MoveInstance& inst : enumerate_moves(u)) {
          std::string label = rule_name(inst.rule);
          label += "@" + std::to_string(inst.start);
          if (inst.negated) label += "~neg";
          if (inst.reversed) label += "~rev";
          std::cout << "  \"" << format_word(u) << "\" -> \"" << format_word(apply_move(u, inst))
                    << "\" [label=\"" << label << "\"];\n";
        }
      std::cout << "}\n";
      return cl.status == SearchStatus::Complete ? 0 : 3;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
