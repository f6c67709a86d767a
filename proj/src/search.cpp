#include "pfl/search.hpp"

#include <deque>
#include <map>
#include <set>

#include "pfl/errors.hpp"

namespace pfl {

void BudgetMeter::charge(long n) {
    used += n;
    if (used > budget.max_nodes)
        throw BudgetExhaustedError("search budget exhausted (" +
                                   std::to_string(budget.max_nodes) + " nodes)");
}

namespace {

struct Alphabet {
    // symbol 2i   = generator i with exponent +1
    // symbol 2i+1 = generator i with exponent -1
    std::vector<PiecewiseMap> maps;
    std::vector<std::string> names;

    explicit Alphabet(const GroupSpec& spec) {
        for (std::size_t i = 0; i < spec.generators.size(); ++i) {
            maps.push_back(spec.generators[i]);
            maps.push_back(spec.generators[i].inverse());
            names.push_back(spec.gen_names[i]);
            names.push_back(spec.gen_names[i]);
        }
    }
    std::size_t size() const { return maps.size(); }
    long exp(std::size_t sym) const { return (sym % 2 == 0) ? 1 : -1; }
    bool cancels(const Word& w, std::size_t sym) const {
        if (w.letters.empty()) return false;
        const Word::Letter& last = w.letters.back();
        if (last.name != names[sym]) return false;
        return (last.exp > 0) != (exp(sym) > 0);
    }
};

} // namespace

long for_each_reduced_word(const GroupSpec& spec, int max_length, long max_nodes,
                           bool dedupe_elements,
                           const std::function<bool(const Word&, const PiecewiseMap&)>& visit) {
    Alphabet alpha(spec);
    long count = 1; // the empty word
    PiecewiseMap id = PiecewiseMap::identity(spec.domain);
    if (!visit(Word::empty(), id)) return count;

    std::deque<std::pair<Word, PiecewiseMap>> queue;
    std::set<PiecewiseMap> seen;
    if (dedupe_elements) seen.insert(id);
    queue.emplace_back(Word::empty(), id);

    while (!queue.empty()) {
        auto [w, e] = std::move(queue.front());
        queue.pop_front();
        if (w.length() >= max_length) continue;
        for (std::size_t sym = 0; sym < alpha.size(); ++sym) {
            if (alpha.cancels(w, sym)) continue;
            if (count >= max_nodes) return count;
            ++count;
            Word w2 = concat(w, Word::single(alpha.names[sym], alpha.exp(sym)));
            PiecewiseMap e2 = compose(e, alpha.maps[sym]);
            if (dedupe_elements && !seen.insert(e2).second) continue;
            if (!visit(w2, e2)) return count;
            queue.emplace_back(std::move(w2), std::move(e2));
        }
    }
    return count;
}

std::optional<Word> find_word_moving(const GroupSpec& spec, const Rational& x,
                                     const ExtPoint& lo, const ExtPoint& hi,
                                     const SearchBudget& budget, long* nodes_used) {
    if (!(lo < hi)) throw PreconditionError("find_word_moving: empty target interval");
    auto in_target = [&](const Rational& q) {
        ExtPoint p = ExtPoint::at(q);
        return lo < p && p < hi;
    };
    auto report = [&](long n) {
        if (nodes_used) *nodes_used = n;
    };
    long count = 1;
    if (in_target(x)) {
        report(count);
        return Word::empty();
    }
    Alphabet alpha(spec);
    // parent chain for path reconstruction
    std::map<Rational, std::pair<Rational, std::size_t>> parent;
    std::map<Rational, long> depth;
    std::deque<Rational> queue;
    depth[x] = 0;
    queue.push_back(x);
    while (!queue.empty()) {
        Rational p = std::move(queue.front());
        queue.pop_front();
        if (depth[p] >= budget.max_length) continue;
        for (std::size_t sym = 0; sym < alpha.size(); ++sym) {
            if (count >= budget.max_nodes) {
                report(count);
                return std::nullopt;
            }
            ++count;
            Rational q = alpha.maps[sym].evaluate(p);
            if (depth.count(q)) continue;
            parent[q] = {p, sym};
            depth[q] = depth[p] + 1;
            if (in_target(q)) {
                Word w;
                Rational cur = q;
                std::vector<std::size_t> syms;
                while (cur != x) {
                    auto [pr, s] = parent[cur];
                    syms.push_back(s);
                    cur = pr;
                }
                for (auto it = syms.rbegin(); it != syms.rend(); ++it)
                    w = concat(w, Word::single(alpha.names[*it], alpha.exp(*it)));
                // re-verify exactly before returning
                Rational img = evaluate_word(spec, w).evaluate(x);
                if (!in_target(img)) throw Error("internal: word verification failed");
                report(count);
                return w;
            }
            queue.push_back(std::move(q));
        }
    }
    report(count);
    return std::nullopt;
}

std::optional<Word> find_word_satisfying(const GroupSpec& spec,
                                         const std::function<bool(const PiecewiseMap&)>& pred,
                                         const SearchBudget& budget, long* nodes_used) {
    std::optional<Word> found;
    long n = for_each_reduced_word(spec, budget.max_length, budget.max_nodes, true,
                                   [&](const Word& w, const PiecewiseMap& e) {
                                       if (pred(e)) {
                                           found = w;
                                           return false;
                                       }
                                       return true;
                                   });
    if (nodes_used) *nodes_used = n;
    return found;
}

} // namespace pfl
