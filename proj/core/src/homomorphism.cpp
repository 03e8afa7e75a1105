#include "fpauto/homomorphism.hpp"

namespace fpauto {

StateWord StateMap::apply(const StateWord& w) const {
  StateWord out;
  for (StateId q : w) {
    const StateWord& img = images.at(q);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool StateMap::normalized() const {
  for (const StateWord& img : images)
    if (img.size() != 1) return false;
  return true;
}

StateMap constant_hom(const MealyAutomaton& source,
                      const MealyAutomaton& target, const StateWord& e) {
  target.check_word(e);
  StateMap phi;
  phi.images.assign(source.num_states(), e);
  return phi;
}

HomVerdict check_homomorphism_bounded(const MealyAutomaton& source,
                                      const MealyAutomaton& target,
                                      const StateMap& phi, std::size_t bound,
                                      const WpOptions& opts) {
  if (bound < 2) throw input_error("homomorphism check needs bound >= 2");
  if (phi.images.size() != source.num_states())
    throw input_error("state map is not total over the source states");
  for (const StateWord& img : phi.images) target.check_word(img);

  // Relations of the source up to the bound are exactly the within-class
  // pairs; representative-vs-member covers them all by transitivity.
  for (const auto& cls : enumerate_classes(source, bound, opts)) {
    const StateWord& rep = cls.front();
    StateWord rep_img = phi.apply(rep);
    for (std::size_t i = 1; i < cls.size(); ++i) {
      StateWord mem_img = phi.apply(cls[i]);
      if (auto sep = separating_input(target, rep_img, mem_img, opts)) {
        return HomVerdict{false, bound, std::make_pair(rep, cls[i]), *sep};
      }
    }
  }
  return HomVerdict{true, bound, std::nullopt, {}};
}

std::vector<StateWord> find_idempotents(const MealyAutomaton& aut,
                                        std::size_t bound,
                                        const WpOptions& opts) {
  if (bound < 1) throw input_error("length bound must be >= 1");
  std::vector<StateWord> out;
  for (const auto& cls : enumerate_classes(aut, bound, opts)) {
    const StateWord& rep = cls.front();
    StateWord square = rep;
    square.insert(square.end(), rep.begin(), rep.end());
    if (words_equivalent(aut, square, rep, opts)) out.push_back(rep);
  }
  return out;
}

}  // namespace fpauto
