#pragma once

#include <string>
#include <vector>

#include "pfl/groupspec.hpp"

namespace pfl {

// A reduced symbolic word over a named generating set.  Adjacent letters
// carry distinct names; total length is the sum of |exponents|.
struct Word {
    struct Letter {
        std::string name;
        long exp; // nonzero
        bool operator==(const Letter&) const = default;
    };
    std::vector<Letter> letters;

    static Word empty() { return Word{}; }
    static Word single(std::string name, long exp = 1);

    bool is_empty() const { return letters.empty(); }
    long length() const;

    Word inverse() const;
    Word pow(long n) const;

    bool operator==(const Word&) const = default;
    std::string str() const; // "a b^-1 a^2"; "<id>" for the empty word
};

// Concatenation with cancellation-free merging of adjacent same-name
// letters; exact cancellations drop out.
Word concat(const Word& u, const Word& v);
Word conjugate(const Word& g, const Word& h); // h^-1 g h
Word commutator(const Word& u, const Word& v); // u^-1 v^-1 u v

// Whitespace-separated `name^exp` tokens, exponent omitted when 1.
Word parse_word(const std::string& text);

// Right-action accumulation: the empty word is the identity and
// x.(w1 w2) = (x.w1).w2.  Throws on unknown generator names.
PiecewiseMap evaluate_word(const GroupSpec& spec, const Word& w);

} // namespace pfl
