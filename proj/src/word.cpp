#include "pfl/word.hpp"

#include <sstream>

#include "pfl/errors.hpp"

namespace pfl {

Word Word::single(std::string name, long exp) {
    Word w;
    if (exp != 0) w.letters.push_back(Letter{std::move(name), exp});
    return w;
}

long Word::length() const {
    long n = 0;
    for (const Letter& l : letters) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

Word Word::inverse() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(Letter{it->name, -it->exp});
    return w;
}

Word Word::pow(long n) const {
    if (n == 0) return Word::empty();
    Word base = n < 0 ? inverse() : *this;
    long k = n < 0 ? -n : n;
    Word acc;
    for (long i = 0; i < k; ++i) acc = concat(acc, base);
    return acc;
}

std::string Word::str() const {
    if (letters.empty()) return "<id>";
    std::string s;
    for (const Letter& l : letters) {
        if (!s.empty()) s += " ";
        s += l.name;
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    for (const auto& l : v.letters) {
        if (!w.letters.empty() && w.letters.back().name == l.name) {
            w.letters.back().exp += l.exp;
            if (w.letters.back().exp == 0) w.letters.pop_back();
        } else {
            w.letters.push_back(l);
        }
    }
    return w;
}

Word conjugate(const Word& g, const Word& h) {
    return concat(concat(h.inverse(), g), h);
}

Word commutator(const Word& u, const Word& v) {
    return concat(concat(u.inverse(), v.inverse()), concat(u, v));
}

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "<id>") continue;
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        long exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stol(tok.substr(caret + 1));
            } catch (...) {
                throw Error("malformed word token '" + tok + "'");
            }
        }
        if (name.empty()) throw Error("malformed word token '" + tok + "'");
        if (exp == 0) throw Error("zero exponent in word token '" + tok + "'");
        w = concat(w, Word::single(name, exp));
    }
    return w;
}

PiecewiseMap evaluate_word(const GroupSpec& spec, const Word& w) {
    PiecewiseMap acc = PiecewiseMap::identity(spec.domain);
    for (const auto& l : w.letters) {
        const PiecewiseMap& g = spec.generator(l.name); // throws on unknown name
        PiecewiseMap base = l.exp < 0 ? g.inverse() : g;
        long k = l.exp < 0 ? -l.exp : l.exp;
        for (long i = 0; i < k; ++i) acc = compose(acc, base);
    }
    return acc;
}

} // namespace pfl
