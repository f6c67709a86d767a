#pragma once

#include <functional>
#include <optional>

#include "pfl/word.hpp"

namespace pfl {

struct SearchBudget {
    long max_nodes = 100000;
    int max_length = 12;
};

// Shared accounting across the searches inside one witness construction.
// Throws BudgetExhaustedError once the node allowance is spent.
struct BudgetMeter {
    SearchBudget budget;
    long used = 0;

    explicit BudgetMeter(SearchBudget b) : budget(b) {
        if (budget.max_nodes <= 0 || budget.max_length <= 0)
            throw Error("search budget must be positive");
    }
    long remaining() const { return budget.max_nodes - used; }
    void charge(long n);
};

// Enumerates reduced words in shortlex order (length first, then generator
// order with positive before negative exponents), with the element of each
// word computed incrementally.  Stops when `visit` returns false, when all
// words of length <= max_length are exhausted, or after max_nodes words.
// When dedupe_elements is set, words evaluating to an element already seen
// are still counted against the budget but are neither visited nor extended.
// Returns the number of words examined.
long for_each_reduced_word(const GroupSpec& spec, int max_length, long max_nodes,
                           bool dedupe_elements,
                           const std::function<bool(const Word&, const PiecewiseMap&)>& visit);

// Shortlex-least word moving x into the open interval (lo, hi), found by a
// breadth-first orbit search with exact arithmetic and verified before
// return.  nullopt means the budget was exhausted, never impossibility.
std::optional<Word> find_word_moving(const GroupSpec& spec, const Rational& x,
                                     const ExtPoint& lo, const ExtPoint& hi,
                                     const SearchBudget& budget, long* nodes_used = nullptr);

// Shortlex-least word whose element satisfies an exact decidable predicate.
std::optional<Word> find_word_satisfying(const GroupSpec& spec,
                                         const std::function<bool(const PiecewiseMap&)>& pred,
                                         const SearchBudget& budget, long* nodes_used = nullptr);

} // namespace pfl
