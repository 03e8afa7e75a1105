#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpauto/serialize.hpp"

namespace {

using namespace fpauto;

// Exit codes: 0 success/equal/pass, 1 unequal/counterexample/violation,
// 2 input error, 3 resource cap exceeded.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kResourceError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file '" + path + "'");
  out << content;
}

MealyAutomaton load_automaton(const std::string& path) {
  return parse_automaton(read_file(path));
}

ChainHom parse_chain_hom(const std::string& text,
                         const std::vector<MealyAutomaton>& factors,
                         std::size_t source_index) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw input_error("chain hom '" + text + "' must look like 'j:src:tgt,...'");
  std::size_t target = 0;
  try {
    target = std::stoul(text.substr(0, colon));
  } catch (...) {
    throw input_error("chain hom '" + text + "' has no target factor index");
  }
  if (target < 1 || target > factors.size())
    throw input_error("chain hom target index " + std::to_string(target) +
                      " out of range");
  ChainHom hom;
  hom.target = target - 1;
  hom.map = parse_state_map(text.substr(colon + 1), factors[source_index],
                            factors[hom.target]);
  return hom;
}

int run(int argc, char** argv) {
  CLI::App app{"Free products of automaton semigroups: construction and "
               "desk-scale verification"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::size_t state_cap = 1'000'000;
  app.add_option("--state-cap", state_cap,
                 "Maximum explored product states in word-problem searches");

  int exit_code = kOk;

  // act
  auto* act = app.add_subcommand("act", "Apply a state word to an input string");
  std::string act_file, act_word_text, act_input;
  act->add_option("automaton", act_file)->required();
  act->add_option("word", act_word_text)->required();
  act->add_option("input", act_input)->required();
  act->callback([&] {
    MealyAutomaton aut = load_automaton(act_file);
    StateWord w = parse_word(aut, act_word_text);
    LetterString s = parse_letters(aut, act_input);
    std::cout << format_letters(aut, act_word(aut, w, s)) << "\n";
  });

  // eq
  auto* eq = app.add_subcommand("eq", "Decide whether two state words are "
                                      "equivalent");
  std::string eq_file, eq_w1, eq_w2;
  eq->add_option("automaton", eq_file)->required();
  eq->add_option("word1", eq_w1)->required();
  eq->add_option("word2", eq_w2)->required();
  eq->callback([&] {
    MealyAutomaton aut = load_automaton(eq_file);
    WpOptions wp{state_cap};
    auto sep = separating_input(aut, parse_word(aut, eq_w1),
                                parse_word(aut, eq_w2), wp);
    if (!sep) {
      std::cout << "equal\n";
    } else {
      std::cout << "unequal\nwitness: " << format_letters(aut, *sep) << "\n";
      exit_code = kNegative;
    }
  });

  // freeproduct
  auto* fprod = app.add_subcommand(
      "freeproduct", "Build the free-product automaton of two factors");
  std::string fp_left, fp_right, fp_map, fp_out;
  bool fp_rename = false;
  fprod->add_option("left", fp_left)->required();
  fprod->add_option("right", fp_right)->required();
  fprod->add_option("map", fp_map)->required();
  fprod->add_option("--out", fp_out, "Output file (default stdout)");
  fprod->add_flag("--rename-on-collision", fp_rename,
                  "Suffix .L/.R on state-name collision instead of failing");
  fprod->callback([&] {
    MealyAutomaton a1 = load_automaton(fp_left);
    MealyAutomaton a2 = load_automaton(fp_right);
    StateMap phi = parse_state_map(fp_map, a1, a2);
    BuildOptions opts;
    opts.rename_on_collision = fp_rename;
    opts.wp.state_cap = state_cap;
    write_output(fp_out, serialize_free_product(
                             build_free_product(a1, a2, phi, opts)));
  });

  // chain
  auto* chain = app.add_subcommand(
      "chain", "Build an iterated free product of several factors");
  std::vector<std::string> chain_files;
  std::vector<std::string> chain_homs;
  std::string chain_out;
  chain->add_option("factors", chain_files, "Factor automaton files")
      ->required()
      ->expected(2, -1);
  chain->add_option("--hom", chain_homs,
                    "Per factor i (in order, except the last): 'j:src:tgt,...' "
                    "mapping factor i into factor j (1-based, j > i)");
  chain->add_option("--out", chain_out, "Output file (default stdout)");
  chain->callback([&] {
    std::vector<MealyAutomaton> factors;
    for (const auto& f : chain_files) factors.push_back(load_automaton(f));
    if (chain_homs.size() != factors.size() - 1)
      throw input_error("need one --hom per factor except the last");
    std::vector<ChainHom> homs;
    for (std::size_t i = 0; i < chain_homs.size(); ++i) {
      homs.push_back(parse_chain_hom(chain_homs[i], factors, i));
      if (homs.back().target <= i)
        throw input_error("chain hom " + std::to_string(i + 1) +
                          " must target a later factor");
    }
    BuildOptions opts;
    opts.wp.state_cap = state_cap;
    write_output(chain_out,
                 serialize_free_product(build_chain(factors, homs, opts)));
  });

  // checkhom
  auto* checkhom = app.add_subcommand(
      "checkhom", "Bounded check that a state map extends to a homomorphism");
  std::string ch_source, ch_target, ch_map;
  std::size_t ch_bound = 4;
  checkhom->add_option("source", ch_source)->required();
  checkhom->add_option("target", ch_target)->required();
  checkhom->add_option("map", ch_map)->required();
  checkhom->add_option("--max-word-len", ch_bound, "Word-length bound");
  checkhom->callback([&] {
    MealyAutomaton a1 = load_automaton(ch_source);
    MealyAutomaton a2 = load_automaton(ch_target);
    StateMap phi = parse_state_map(ch_map, a1, a2);
    HomVerdict v =
        check_homomorphism_bounded(a1, a2, phi, ch_bound, WpOptions{state_cap});
    if (v.passed) {
      std::cout << "PASS (bound " << v.bound << ")\n";
    } else {
      std::cout << "COUNTEREXAMPLE (bound " << v.bound << "): "
                << format_word(a1, v.counterexample->first) << " ~ "
                << format_word(a1, v.counterexample->second)
                << " but images differ on " << format_letters(a2, v.witness)
                << "\n";
      exit_code = kNegative;
    }
  });

  // idempotents
  auto* idem = app.add_subcommand(
      "idempotents", "List idempotent class representatives up to a bound");
  std::string id_file;
  std::size_t id_bound = 2;
  idem->add_option("automaton", id_file)->required();
  idem->add_option("--max-word-len", id_bound, "Word-length bound");
  idem->callback([&] {
    MealyAutomaton aut = load_automaton(id_file);
    for (const StateWord& w :
         find_idempotents(aut, id_bound, WpOptions{state_cap}))
      std::cout << format_word(aut, w) << "\n";
  });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Faithfulness and restriction sweeps against the free-product "
                "oracle");
  std::string vf_product, vf_left, vf_right, vf_map, vf_out;
  std::size_t vf_bound = 3, vf_depth = 4;
  bool vf_rename = false;
  verify->add_option("product", vf_product,
                     "Product file written by freeproduct/chain");
  verify->add_option("--left", vf_left, "Left factor file");
  verify->add_option("--right", vf_right, "Right factor file");
  verify->add_option("--map", vf_map, "State map text (with --left/--right)");
  verify->add_option("--max-word-len", vf_bound, "Word-length bound");
  verify->add_option("--depth", vf_depth, "Input-string depth bound");
  verify->add_flag("--rename-on-collision", vf_rename,
                   "Rename factor states on collision");
  verify->add_option("--out", vf_out, "Report file (default stdout)");
  verify->callback([&] {
    FreeProductAutomaton fp;
    if (!vf_product.empty()) {
      fp = parse_free_product(read_file(vf_product));
    } else if (!vf_left.empty() && !vf_right.empty() && !vf_map.empty()) {
      MealyAutomaton a1 = load_automaton(vf_left);
      MealyAutomaton a2 = load_automaton(vf_right);
      BuildOptions opts;
      opts.rename_on_collision = vf_rename;
      opts.wp.state_cap = state_cap;
      fp = build_free_product(a1, a2, parse_state_map(vf_map, a1, a2), opts);
    } else {
      throw input_error(
          "verify needs a product file or --left/--right/--map");
    }
    WpOptions wp{state_cap};
    FaithReport faith = check_faithful(fp, vf_bound, wp);
    RestrictionReport restr = restriction_checks(fp, vf_bound, vf_depth);
    write_output(vf_out, serialize_report(fp, faith, restr, state_cap));
    if (!faith.passed() || !restr.passed()) exit_code = kNegative;
  });

  // growth
  auto* growth = app.add_subcommand(
      "growth", "Equivalence-class counts of words up to each length");
  std::string gr_file;
  std::size_t gr_bound = 3;
  growth->add_option("automaton", gr_file)->required();
  growth->add_option("--max-word-len", gr_bound, "Word-length bound");
  growth->callback([&] {
    MealyAutomaton aut = load_automaton(gr_file);
    auto classes = enumerate_classes(aut, gr_bound, WpOptions{state_cap});
    for (std::size_t l = 1; l <= gr_bound; ++l) {
      std::size_t count = 0;
      for (const auto& cls : classes)
        if (cls.front().size() <= l) ++count;
      std::cout << l << " " << count << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fpauto::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const fpauto::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
