#include "fpauto/verify.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace fpauto {

AltDecomposition decompose(const FreeProductAutomaton& fp, const StateWord& w) {
  fp.underlying.check_word(w);
  AltDecomposition d;
  for (StateId q : w) {
    const Side side = fp.is_left(q) ? Side::Left : Side::Right;
    const StateId local = fp.is_left(q) ? fp.to_left(q) : fp.to_right(q);
    if (d.blocks.empty() || d.blocks.back().side != side)
      d.blocks.push_back({side, {}});
    d.blocks.back().word.push_back(local);
  }
  return d;
}

StateWord recompose(const FreeProductAutomaton& fp, const AltDecomposition& d) {
  StateWord w;
  for (const AltBlock& b : d.blocks)
    for (StateId q : b.word)
      w.push_back(b.side == Side::Left ? fp.from_left(q) : fp.from_right(q));
  return w;
}

bool oracle_equal(const FreeProductAutomaton& fp, const StateWord& w1,
                  const StateWord& w2, const WpOptions& opts) {
  AltDecomposition d1 = decompose(fp, w1);
  AltDecomposition d2 = decompose(fp, w2);
  if (d1.blocks.size() != d2.blocks.size()) return false;
  for (std::size_t i = 0; i < d1.blocks.size(); ++i) {
    if (d1.blocks[i].side != d2.blocks[i].side) return false;
    const MealyAutomaton& factor = d1.blocks[i].side == Side::Left
                                       ? fp.left_factor
                                       : fp.right_factor;
    if (!words_equivalent(factor, d1.blocks[i].word, d2.blocks[i].word, opts))
      return false;
  }
  return true;
}

namespace {

// Oracle-side canonical key of a word: the tag sequence plus, per block, the
// block's equivalence-class id within its factor.
using OracleKey = std::vector<std::pair<int, std::size_t>>;

class FactorClassifier {
 public:
  FactorClassifier(const MealyAutomaton& aut, const WpOptions& opts)
      : aut_(aut), opts_(opts) {}

  std::size_t classify(const StateWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (words_equivalent(aut_, reps_[i], w, opts_)) {
        cache_.emplace(w, i);
        return i;
      }
    }
    reps_.push_back(w);
    cache_.emplace(w, reps_.size() - 1);
    return reps_.size() - 1;
  }

 private:
  const MealyAutomaton& aut_;
  WpOptions opts_;
  std::vector<StateWord> reps_;
  std::map<StateWord, std::size_t> cache_;
};

}  // namespace

FaithReport check_faithful(const FreeProductAutomaton& fp, std::size_t bound,
                           const WpOptions& opts) {
  if (bound < 1) throw input_error("length bound must be >= 1");
  FaithReport report;
  report.bound = bound;

  const std::vector<StateWord> words =
      all_words(fp.underlying.num_states(), bound);
  const std::size_t n = words.size();
  report.pairs_checked = static_cast<std::uint64_t>(n) * (n - 1) / 2;

  // Action-equivalence classes on the product automaton.
  std::vector<std::size_t> fp_class(n);
  std::vector<std::size_t> fp_rep;  // class -> index of first member
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < fp_rep.size(); ++c) {
      if (words_equivalent(fp.underlying, words[fp_rep[c]], words[i], opts)) {
        fp_class[i] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      fp_class[i] = fp_rep.size();
      fp_rep.push_back(i);
    }
  }

  // Oracle keys, independent of the product's transition table.
  FactorClassifier left(fp.left_factor, opts);
  FactorClassifier right(fp.right_factor, opts);
  std::vector<OracleKey> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const AltBlock& b : decompose(fp, words[i]).blocks) {
      const bool l = b.side == Side::Left;
      keys[i].push_back(
          {l ? 0 : 1, l ? left.classify(b.word) : right.classify(b.word)});
    }
  }

  // Collapse: same action class but oracle-distinct from the class rep.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = fp_rep[fp_class[i]];
    if (r != i && keys[r] != keys[i])
      report.violations.push_back(
          {words[r], words[i], "collapse", {}});
  }

  // Separation failure: oracle-equal to an earlier word but in a different
  // action class.
  std::map<OracleKey, std::size_t> first_by_key;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = first_by_key.emplace(keys[i], i);
    if (fresh) continue;
    const std::size_t j = it->second;
    if (fp_class[j] != fp_class[i]) {
      auto sep = separating_input(fp.underlying, words[j], words[i], opts);
      report.violations.push_back({words[j], words[i], "separation-failure",
                                   sep ? *sep : LetterString{}});
    }
  }
  return report;
}

namespace {

// (v0, [(u_1, v_1), ..., (u_n, v_n)]) view of a decomposition; v_n may be
// empty, interior v_i are nonempty by maximality of the blocks.
struct AltShape {
  StateWord v0;
  std::vector<StateWord> u, v;  // parallel, size n

  std::size_t n() const { return u.size(); }
};

AltShape to_shape(const AltDecomposition& d) {
  AltShape s;
  std::size_t i = 0;
  if (i < d.blocks.size() && d.blocks[i].side == Side::Right)
    s.v0 = d.blocks[i++].word;
  while (i < d.blocks.size()) {
    // alternation guarantees this block is a left one
    s.u.push_back(d.blocks[i++].word);
    if (i < d.blocks.size() && d.blocks[i].side == Side::Right)
      s.v.push_back(d.blocks[i++].word);
    else
      s.v.push_back({});
  }
  return s;
}

}  // namespace

bool gamma_formula_check(const FreeProductAutomaton& fp,
                         const AltDecomposition& d,
                         const std::vector<LetterString>& alphas,
                         const std::vector<LetterString>& betas) {
  for (std::size_t i = 1; i < d.blocks.size(); ++i)
    if (d.blocks[i].side == d.blocks[i - 1].side)
      throw input_error("decomposition blocks must alternate");
  for (const AltBlock& b : d.blocks)
    if (b.word.empty()) throw input_error("decomposition blocks must be nonempty");

  const AltShape shape = to_shape(d);
  const std::size_t n = shape.n();
  if (n < 1) throw input_error("decomposition needs at least one left block");
  if (alphas.size() != n || betas.size() != n)
    throw input_error("need one alpha/beta string per left block");
  for (std::size_t i = 0; i < n; ++i) {
    if (alphas[i].size() != betas[i].size())
      throw input_error("alpha/beta lengths must match blockwise");
    fp.left_factor.check_string(alphas[i]);
    fp.right_factor.check_string(betas[i]);
  }

  LetterString gamma;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) gamma.push_back(fp.gate_id(GateKind::Closed));
    for (std::size_t j = 0; j < alphas[i].size(); ++j)
      gamma.push_back(fp.domino_id(Mark::Unmarked, alphas[i][j], betas[i][j]));
  }

  const LetterString actual =
      act_word(fp.underlying, recompose(fp, d), gamma);

  LetterString expected;
  for (std::size_t i = 0; i < n; ++i) {
    const LetterString alpha_img =
        act_word(fp.left_factor, shape.u[i], alphas[i]);
    const LetterString beta_img =
        shape.v[i].empty() ? betas[i]
                           : act_word(fp.right_factor, shape.v[i], betas[i]);
    const bool last = i + 1 == n;
    const Mark mark =
        !last ? Mark::Circled : (shape.v[i].empty() ? Mark::S : Mark::T);
    if (i)
      expected.push_back(fp.gate_id(
          shape.v[i - 1].empty() ? GateKind::HalfOpen : GateKind::Open));
    for (std::size_t j = 0; j < alpha_img.size(); ++j)
      expected.push_back(fp.domino_id(mark, alpha_img[j], beta_img[j]));
  }
  return actual == expected;
}

namespace {

// Input on which the word fails to act as the identity, or nullopt.
std::optional<LetterString> separator_from_identity(const MealyAutomaton& aut,
                                                    const StateWord& w,
                                                    const WpOptions& opts) {
  struct Node {
    ProductState p;
    std::size_t parent;
    LetterId via;
  };
  std::vector<Node> nodes;
  std::map<std::vector<StateId>, bool> seen;
  nodes.push_back({ProductState{w}, SIZE_MAX, 0});
  seen[w] = true;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (LetterId c = 0; c < aut.num_letters(); ++c) {
      ProductState p = nodes[i].p;
      auto [next, out] = step_product(aut, p, c);
      if (out != c) {
        LetterString witness{c};
        for (std::size_t j = i; nodes[j].parent != SIZE_MAX; j = nodes[j].parent)
          witness.push_back(nodes[j].via);
        std::reverse(witness.begin(), witness.end());
        return witness;
      }
      if (!seen.count(next.tuple)) {
        if (seen.size() + 1 > opts.state_cap)
          throw resource_error("identity-separator search exceeded cap",
                               opts.state_cap);
        seen[next.tuple] = true;
        nodes.push_back({std::move(next), i, c});
      }
    }
  }
  return std::nullopt;
}

// Separating input for two factor words, either of which may be empty (the
// empty word acts as the identity).  nullopt when no separator exists.
std::optional<LetterString> factor_separator(const MealyAutomaton& aut,
                                             const StateWord& w1,
                                             const StateWord& w2,
                                             const WpOptions& opts) {
  if (w1.empty() && w2.empty()) return std::nullopt;
  if (w1.empty()) return separator_from_identity(aut, w2, opts);
  if (w2.empty()) return separator_from_identity(aut, w1, opts);
  return separating_input(aut, w1, w2, opts);
}

// Free-product inequality of blocks: the empty block equals only itself.
bool blocks_equal(const MealyAutomaton& aut, const StateWord& w1,
                  const StateWord& w2, const WpOptions& opts) {
  if (w1.empty() || w2.empty()) return w1.empty() && w2.empty();
  return words_equivalent(aut, w1, w2, opts);
}

void pad_to(LetterString& s, std::size_t len) {
  while (s.size() < len) s.push_back(0);
}

}  // namespace

LetterString distinguishing_string(const FreeProductAutomaton& fp,
                                   const StateWord& w1, const StateWord& w2,
                                   const WpOptions& opts) {
  if (oracle_equal(fp, w1, w2, opts))
    throw input_error("distinguishing_string requires oracle-distinct words");

  AltShape a = to_shape(decompose(fp, w1));
  AltShape b = to_shape(decompose(fp, w2));
  if (a.n() < b.n()) std::swap(a, b);
  while (b.n() < a.n()) {
    b.u.push_back({});
    b.v.push_back({});
  }

  auto simulate_differs = [&](const LetterString& gamma) {
    return act_word(fp.underlying, w1, gamma) !=
           act_word(fp.underlying, w2, gamma);
  };

  std::optional<LetterString> candidate;
  if (!blocks_equal(fp.right_factor, a.v0, b.v0, opts)) {
    // k = 0: a run of T-marked dominoes whose beta part separates v0, v0'.
    if (auto beta = factor_separator(fp.right_factor, a.v0, b.v0, opts)) {
      LetterString gamma;
      for (LetterId bl : *beta)
        gamma.push_back(fp.domino_id(Mark::T, 0, bl));
      candidate = std::move(gamma);
    }
  } else {
    for (std::size_t k = 1; k <= a.n(); ++k) {
      const StateWord& uk = a.u[k - 1];
      const StateWord& uk2 = b.u[k - 1];
      const StateWord& vk = a.v[k - 1];
      const StateWord& vk2 = b.v[k - 1];
      const bool u_diff = !blocks_equal(fp.left_factor, uk, uk2, opts);
      const bool v_diff = !blocks_equal(fp.right_factor, vk, vk2, opts);
      if (!u_diff && !v_diff) continue;

      std::optional<LetterString> alpha, beta;
      if (u_diff) alpha = factor_separator(fp.left_factor, uk, uk2, opts);
      if (v_diff) beta = factor_separator(fp.right_factor, vk, vk2, opts);
      if (alpha || beta) {
        LetterString al = alpha.value_or(LetterString{});
        LetterString be = beta.value_or(LetterString{});
        const std::size_t len = std::max(al.size(), be.size());
        pad_to(al, len);
        pad_to(be, len);
        LetterString gamma(k - 1, fp.gate_id(GateKind::Closed));
        for (std::size_t j = 0; j < len; ++j)
          gamma.push_back(fp.domino_id(Mark::Unmarked, al[j], be[j]));
        candidate = std::move(gamma);
      }
      break;
    }
  }

  if (candidate && simulate_differs(*candidate)) return *candidate;

  // Edge cases (blocks empty on one side, identity-acting elements) fall
  // back to breadth-first search over the product alphabet.
  if (auto sep = separating_input(fp.underlying, w1, w2, opts)) return *sep;
  throw std::runtime_error(
      "oracle-distinct words act identically on the product automaton");
}

RestrictionReport restriction_checks(const FreeProductAutomaton& fp,
                                     std::size_t word_bound,
                                     std::size_t depth_bound) {
  if (word_bound < 1 || depth_bound < 1)
    throw input_error("restriction bounds must be >= 1");
  RestrictionReport report;
  report.word_bound = word_bound;
  report.depth_bound = depth_bound;

  const std::size_t na = fp.left_factor.num_letters();
  const std::size_t nb = fp.right_factor.num_letters();

  const std::vector<StateWord> left_words =
      all_words(fp.left_factor.num_states(), word_bound);
  const std::vector<StateWord> right_words =
      all_words(fp.right_factor.num_states(), word_bound);
  const std::vector<LetterString> pair_seqs =
      all_strings(na * nb, 1, depth_bound);

  auto lift = [&](const StateWord& w, bool is_left) {
    StateWord out;
    for (StateId q : w)
      out.push_back(is_left ? fp.from_left(q) : fp.from_right(q));
    return out;
  };
  auto record = [&](const char* check, const StateWord& w,
                    const LetterString& input, const LetterString& expected,
                    const LetterString& actual) {
    ++report.cases_checked;
    if (expected != actual)
      report.violations.push_back({check, w, input, expected, actual});
  };

  // (i) right words on T-marked runs act as A2 on the second components.
  // (iii-part) and (ii)/(iv) analogously; see header.
  for (const StateWord& w : right_words) {
    const StateWord fpw = lift(w, false);
    for (const LetterString& seq : pair_seqs) {
      LetterString input, beta;
      for (LetterId p : seq) {
        input.push_back(fp.domino_id(Mark::T, p / nb, p % nb));
        beta.push_back(p % nb);
      }
      const LetterString beta_img = act_word(fp.right_factor, w, beta);
      LetterString expected;
      for (std::size_t j = 0; j < seq.size(); ++j)
        expected.push_back(fp.domino_id(Mark::T, seq[j] / nb, beta_img[j]));
      record("right-on-T", w, input, expected,
             act_word(fp.underlying, fpw, input));
    }
  }

  // (ii) left words on S-marked runs act as A1 on the first components.
  // (iv) left words S-mark unmarked runs with the same component action.
  for (const StateWord& w : left_words) {
    const StateWord fpw = lift(w, true);
    for (const LetterString& seq : pair_seqs) {
      LetterString alpha;
      for (LetterId p : seq) alpha.push_back(p / nb);
      const LetterString alpha_img = act_word(fp.left_factor, w, alpha);
      LetterString expected;
      for (std::size_t j = 0; j < seq.size(); ++j)
        expected.push_back(fp.domino_id(Mark::S, alpha_img[j], seq[j] % nb));

      LetterString input_s, input_u;
      for (LetterId p : seq) {
        input_s.push_back(fp.domino_id(Mark::S, p / nb, p % nb));
        input_u.push_back(fp.domino_id(Mark::Unmarked, p / nb, p % nb));
      }
      record("left-on-S", w, input_s, expected,
             act_word(fp.underlying, fpw, input_s));
      record("left-marks", w, input_u, expected,
             act_word(fp.underlying, fpw, input_u));
    }
  }

  // (iii) right words fix strings of unmarked dominoes and closed gates.
  const std::vector<LetterString> inert_seqs =
      all_strings(na * nb + 1, 1, depth_bound);
  for (const StateWord& w : right_words) {
    const StateWord fpw = lift(w, false);
    for (const LetterString& seq : inert_seqs) {
      LetterString input;
      for (LetterId p : seq)
        input.push_back(p == na * nb
                            ? fp.gate_id(GateKind::Closed)
                            : fp.domino_id(Mark::Unmarked, p / nb, p % nb));
      record("right-inert", w, input, input,
             act_word(fp.underlying, fpw, input));
    }
  }

  return report;
}

}  // namespace fpauto
