#include "pfl/groupspec.hpp"

#include <fstream>
#include <sstream>

#include "pfl/errors.hpp"

namespace pfl {

int GroupSpec::generator_index(const std::string& gname) const {
    for (std::size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == gname) return static_cast<int>(i);
    return -1;
}

const PiecewiseMap& GroupSpec::generator(const std::string& gname) const {
    int i = generator_index(gname);
    if (i < 0) throw Error("unknown generator: " + gname);
    return generators[i];
}

GroupSpec GroupSpec::make(std::string name, Domain domain,
                          std::vector<std::pair<std::string, PiecewiseMap>> gens,
                          GroupMetadata metadata) {
    GroupSpec spec;
    spec.name = std::move(name);
    spec.domain = domain;
    for (auto& [gname, g] : gens) {
        if (spec.generator_index(gname) >= 0) throw Error("duplicate generator name: " + gname);
        if (!(g.domain() == domain))
            throw DomainMismatchError("generator " + gname + " has a different domain");
        spec.gen_names.push_back(gname);
        spec.generators.push_back(std::move(g));
    }
    spec.metadata = std::move(metadata);
    return spec;
}

bool GroupSpec::operator==(const GroupSpec& o) const {
    if (!(domain == o.domain) || gen_names != o.gen_names || !(metadata == o.metadata))
        return false;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] != o.generators[i]) return false;
    return true;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

ExtPoint parse_endpoint(const std::string& tok, int lineno) {
    if (tok == "-inf") return ExtPoint::neg_inf();
    if (tok == "inf") return ExtPoint::pos_inf();
    auto q = try_parse_rational(tok);
    if (!q) throw ParseError("malformed rational '" + tok + "'", lineno);
    return ExtPoint::at(*q);
}

Int parse_int_tok(const std::string& tok, int lineno) {
    auto q = try_parse_rational(tok);
    if (!q || !is_integer(*q)) throw ParseError("malformed integer '" + tok + "'", lineno);
    return q->get_num();
}

} // namespace

GroupSpec parse_group(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    std::optional<Domain> domain;
    GroupMetadata meta;
    std::vector<std::pair<std::string, PiecewiseMap>> gens;

    std::optional<std::string> cur_name;
    std::vector<Piece> cur_pieces;
    int gen_start_line = 0;

    auto finish_gen = [&]() {
        if (!cur_name) return;
        try {
            PiecewiseMap g = PiecewiseMap::from_pieces(*domain, std::move(cur_pieces));
            gens.emplace_back(*cur_name, std::move(g));
        } catch (const ValidationError& e) {
            throw ParseError(std::string("generator '") + *cur_name + "': " + e.what(),
                             gen_start_line);
        }
        cur_name.reset();
        cur_pieces.clear();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "domain") {
            if (domain) throw ParseError("duplicate domain line", lineno);
            if (toks.size() == 2 && toks[1] == "line") {
                domain = Domain::line();
            } else if (toks.size() == 4 && toks[1] == "interval") {
                auto a = try_parse_rational(toks[2]);
                auto w = try_parse_rational(toks[3]);
                if (!a || !w) throw ParseError("malformed interval endpoints", lineno);
                if (!(*a < *w)) throw ParseError("interval needs alpha < omega", lineno);
                domain = Domain::interval(*a, *w);
            } else {
                throw ParseError("expected 'domain line' or 'domain interval <a> <w>'", lineno);
            }
        } else if (head == "meta") {
            if (toks.size() < 2) throw ParseError("empty meta line", lineno);
            auto rest_from = [&](std::size_t k) {
                std::string s;
                for (std::size_t i = k; i < toks.size(); ++i) {
                    if (!s.empty()) s += " ";
                    s += toks[i];
                }
                return s;
            };
            if (toks[1] == "slope_primes") {
                for (std::size_t i = 2; i < toks.size(); ++i)
                    meta.slope_primes.push_back(parse_int_tok(toks[i], lineno));
            } else if (toks[1] == "coherent") {
                meta.coherent_note = rest_from(2);
            } else if (toks[1] == "breakpoints") {
                meta.breakpoint_note = rest_from(2);
            } else if (toks[1] == "infinite_support") {
                meta.infinite_support_note = rest_from(2);
            } else {
                throw ParseError("unknown meta key '" + toks[1] + "'", lineno);
            }
        } else if (head == "gen") {
            if (!domain) throw ParseError("gen before domain line", lineno);
            if (cur_name) throw ParseError("gen inside gen block (missing 'end'?)", lineno);
            if (toks.size() != 2) throw ParseError("expected 'gen <name>'", lineno);
            for (auto& [n, _] : gens)
                if (n == toks[1]) throw ParseError("duplicate generator '" + toks[1] + "'", lineno);
            cur_name = toks[1];
            gen_start_line = lineno;
        } else if (head == "end") {
            if (!cur_name) throw ParseError("'end' outside gen block", lineno);
            finish_gen();
        } else if (cur_name) {
            if (toks.size() != 6)
                throw ParseError("expected '<l> <r> <a> <b> <c> <d>'", lineno);
            ExtPoint l = parse_endpoint(toks[0], lineno);
            ExtPoint r = parse_endpoint(toks[1], lineno);
            Int a = parse_int_tok(toks[2], lineno), b = parse_int_tok(toks[3], lineno);
            Int c = parse_int_tok(toks[4], lineno), d = parse_int_tok(toks[5], lineno);
            FracLinearMap m;
            try {
                m = FracLinearMap::from_coeffs(a, b, c, d);
            } catch (const ValidationError& e) {
                throw ParseError(e.what(), lineno);
            }
            if (!(l < r)) throw ParseError("piece with left >= right", lineno);
            cur_pieces.push_back(Piece{l, r, m});
        } else {
            throw ParseError("unexpected line '" + head + "...'", lineno);
        }
    }
    if (cur_name) throw ParseError("unterminated gen block", lineno);
    if (!domain) throw ParseError("missing domain line", lineno == 0 ? 1 : lineno);
    return GroupSpec::make(name, *domain, std::move(gens), std::move(meta));
}

std::string serialize_group(const GroupSpec& spec) {
    std::string out = "domain " + spec.domain.str() + "\n";
    const GroupMetadata& m = spec.metadata;
    if (!m.slope_primes.empty()) {
        out += "meta slope_primes";
        for (const Int& p : m.slope_primes) out += " " + p.get_str();
        out += "\n";
    }
    if (m.coherent_note) out += "meta coherent " + *m.coherent_note + "\n";
    if (m.breakpoint_note) out += "meta breakpoints " + *m.breakpoint_note + "\n";
    if (m.infinite_support_note) out += "meta infinite_support " + *m.infinite_support_note + "\n";
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        out += "gen " + spec.gen_names[i] + "\n";
        for (const Piece& p : spec.generators[i].pieces()) {
            out += "  " + p.left.str() + " " + p.right.str() + " " + p.map.a.get_str() + " " +
                   p.map.b.get_str() + " " + p.map.c.get_str() + " " + p.map.d.get_str() + "\n";
        }
        out += "end\n";
    }
    return out;
}

GroupSpec load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string base = path;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string::npos) base = base.substr(0, dot);
    return parse_group(buf.str(), base);
}

void write_group_file(const GroupSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << serialize_group(spec);
}

} // namespace pfl
