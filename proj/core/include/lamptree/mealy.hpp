#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lamptree/errors.hpp"

namespace lamptree {

// Letter of a state word: a machine state used forwards (exponent +1) or as
// its inverse (exponent -1).  Words compose left to right: the first letter
// acts first, its output feeds the second, and so on.
struct StateLetter {
  int state = 0;
  int exponent = 1;
  bool operator==(const StateLetter&) const = default;
};
using StateWord = std::vector<StateLetter>;

// Deterministic, complete, synchronous Mealy machine.  Alphabet symbols and
// state names are arbitrary non-empty strings without whitespace.
class MealyMachine {
public:
  // transitions[q][a] = {next state, output symbol}, indexed like alphabet/states.
  MealyMachine(std::vector<std::string> alphabet, std::vector<std::string> states,
               std::vector<std::pair<int, int>> transitions);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  int state_count() const { return static_cast<int>(states_.size()); }

  int next_state(int q, int a) const { return delta_[idx(q, a)]; }
  int output(int q, int a) const { return lambda_[idx(q, a)]; }

  int symbol_index(std::string_view sym) const;  // errc::symbol_not_in_alphabet
  int state_index(std::string_view name) const;  // errc::invalid_parameter

  bool is_invertible() const;
  // Machine computing the inverse action of every state (same state names).
  MealyMachine inverted() const;  // errc::not_invertible

  std::string to_text() const;
  std::string to_dot(const std::string& graph_name = "machine") const;
  static MealyMachine parse(std::string_view text);  // errc::parse_error

private:
  std::size_t idx(int q, int a) const {
    return static_cast<std::size_t>(q) * alphabet_.size() + static_cast<std::size_t>(a);
  }
  std::vector<std::string> alphabet_, states_;
  std::vector<int> delta_, lambda_;
};

// "p,q-1,p" -> state word (comma separated; trailing -1 inverts a letter).
StateWord parse_state_word(const MealyMachine& m, std::string_view text);
std::string format_state_word(const MealyMachine& m, const StateWord& w);

// Splits an input word into alphabet symbols: tries comma/space separation
// first, otherwise greedy longest-match against the alphabet.
std::vector<int> parse_input_word(const MealyMachine& m, std::string_view text);
std::string format_word(const MealyMachine& m, const std::vector<int>& word);

// Image of `word` under the composite action of `w` (letters applied left to
// right).  Inverse letters require an invertible machine.
std::vector<int> act(const MealyMachine& m, const StateWord& w, const std::vector<int>& word);
std::vector<std::string> act(const MealyMachine& m, const StateWord& w,
                             const std::vector<std::string>& word);

// Exact check that the composite action of `w` fixes every finite word.
// Explores composite state tuples breadth-first; more than `budget` distinct
// tuples raises errc::state_budget_exceeded (never a silent truncation).
bool word_is_identity(const MealyMachine& m, const StateWord& w, std::size_t budget = 1000000);

// Exact check that the composite action fixes all words of length <= level.
bool word_fixes_level(const MealyMachine& m, const StateWord& w, int level,
                      std::size_t budget = 1000000);

struct ProductRenaming {
  std::vector<std::pair<std::string, std::string>> symbols;  // old -> new (second factor)
  std::vector<std::pair<std::string, std::string>> states;
};

// Disjoint union acting on the disjoint union of alphabets: states of each
// factor act as before on their own letters and fix the other factor's
// letters.  Name collisions in the second factor are suffix-renamed and the
// renaming is reported.
MealyMachine direct_product(const MealyMachine& a, const MealyMachine& b,
                            ProductRenaming* renaming = nullptr);

// Built-in machines (state and symbol names as conventionally drawn).
MealyMachine adding_machine();           // binary odometer: p adds one
MealyMachine cayley_machine(long long k);  // states = alphabet = Z_k as decimal strings
MealyMachine aleshin_machine();          // three states p,q,r over {0,1}
MealyMachine decrement_machine();        // binary odometer inverse: p subtracts one
MealyMachine three_cycle_machine();      // one active state r over {2,3,4}, 3-cycle on level 1

}  // namespace lamptree
