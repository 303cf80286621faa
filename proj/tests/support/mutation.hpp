#ifndef FOLBOX_TESTS_MUTATION_HPP_
#define FOLBOX_TESTS_MUTATION_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "folbox/proof.hpp"
#include "generators.hpp"

namespace folbox::testing {

// Changes one node of the formula: renames a predicate or variable, flips a
// connective, quantifier or modality, or drops a negation or modality. The
// result differs from the input after lowering duals.
Formula mutate(Gen& gen, const Formula& a);

struct Mutant {
  Derivation derivation;
  std::size_t line = 0;  // index into lines
  Formula before, after;
};

// Mutates the formula of one randomly chosen line.
Mutant mutate_derivation(Gen& gen, const Derivation& d);

struct NamedDerivation {
  std::string name;
  Derivation derivation;
};

// Every *.json derivation in the directory, sorted by file name.
std::vector<NamedDerivation> load_corpus(const std::filesystem::path& dir);

}  // namespace folbox::testing

#endif  // FOLBOX_TESTS_MUTATION_HPP_
