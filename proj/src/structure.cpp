#include "gfkit/structure.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gfkit/hypergraph.hpp"
#include "gfkit/util.hpp"

namespace gfkit {

Structure::Structure(SignaturePtr sig,
                     std::vector<std::string> element_names,
                     std::vector<Fact> facts,
                     std::vector<ElemId> constant_map)
    : sig_(std::move(sig)), names_(std::move(element_names)), facts_(std::move(facts)),
      const_map_(std::move(constant_map)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (!name_index_.emplace(names_[i], i).second)
            throw DomainError("duplicate element name: " + names_[i]);
    }
    sort_unique(facts_);
    for (const Fact& f : facts_) {
        if (f.rel < 0 || f.rel >= sig_->relation_count())
            throw DomainError("fact uses unknown relation id");
        if (static_cast<int>(f.args.size()) != sig_->arity(f.rel))
            throw DomainError("fact tuple length does not match arity of " +
                              sig_->relation_name(f.rel));
        for (ElemId e : f.args)
            if (e < 0 || e >= size())
                throw DomainError("fact references element outside the universe");
    }
    if (const_map_.empty() && sig_->constant_count() > 0)
        throw DomainError("constant map required for signatures with constants");
    if (static_cast<int>(const_map_.size()) != sig_->constant_count())
        throw DomainError("constant map must be total on the signature's constants");
    for (ElemId e : const_map_)
        if (e < 0 || e >= size()) throw DomainError("constant mapped outside the universe");

    by_rel_.assign(sig_->relation_count(), {});
    by_elem_.assign(size(), {});
    for (int i = 0; i < static_cast<int>(facts_.size()); ++i) {
        by_rel_[facts_[i].rel].push_back(i);
        std::vector<ElemId> seen = facts_[i].args;
        sort_unique(seen);
        for (ElemId e : seen) by_elem_[e].push_back(i);
    }

    // maximal guarded subsets: fact component sets, filtered for maximality,
    // plus singletons for elements in no fact
    std::vector<std::vector<ElemId>> sets;
    for (const Fact& f : facts_) {
        std::vector<ElemId> s = f.args;
        sort_unique(s);
        sets.push_back(std::move(s));
    }
    for (ElemId e = 0; e < size(); ++e)
        if (by_elem_[e].empty()) sets.push_back({e});
    sort_unique(sets);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < sets.size() && maximal; ++j)
            if (i != j && sets[i] != sets[j] && is_subset(sets[i], sets[j])) maximal = false;
        if (maximal) max_guarded_.push_back(sets[i]);
    }
}

std::optional<ElemId> Structure::element_id(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

bool Structure::has_fact(int rel, const std::vector<ElemId>& args) const {
    Fact probe{rel, args};
    return std::binary_search(facts_.begin(), facts_.end(), probe);
}

std::string Structure::to_text() const {
    std::ostringstream os;
    for (int r = 0; r < sig_->relation_count(); ++r)
        os << "rel " << sig_->relation_name(r) << "/" << sig_->arity(r) << "\n";
    for (int c = 0; c < sig_->constant_count(); ++c)
        os << "const " << sig_->constant_name(c) << "\n";
    for (ElemId e = 0; e < size(); ++e)
        if (by_elem_[e].empty()) os << "elem " << names_[e] << "\n";
    for (const Fact& f : facts_) {
        os << sig_->relation_name(f.rel) << "(";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
            if (i) os << ",";
            os << names_[f.args[i]];
        }
        os << ")\n";
    }
    return os.str();
}

bool is_guarded(const Structure& a, const std::vector<ElemId>& set) {
    if (set.empty()) throw DomainError("is_guarded: empty set");
    std::vector<ElemId> s = set;
    sort_unique(s);
    if (s.size() == 1) return true;
    for (int fi : a.facts_containing(s[0])) {
        std::vector<ElemId> comp = a.facts()[fi].args;
        sort_unique(comp);
        if (is_subset(s, comp)) return true;
    }
    return false;
}

bool is_clique_guarded(const Structure& a, const std::vector<ElemId>& set) {
    if (set.empty()) throw DomainError("is_clique_guarded: empty set");
    std::vector<ElemId> s = set;
    sort_unique(s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!is_guarded(a, {s[i], s[j]})) return false;
    return true;
}

Hypergraph structure_hypergraph(const Structure& a) {
    std::vector<std::string> names;
    names.reserve(a.size());
    for (ElemId e = 0; e < a.size(); ++e) names.push_back(a.element_name(e));
    return Hypergraph(std::move(names), a.maximal_guarded_sets());
}

namespace {

struct LineScanner {
    std::string text;
    std::size_t pos = 0;
    int line = 0;

    bool next(std::string& out) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string::npos) end = text.size();
            std::string raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = raw.find_last_not_of(" \t\r");
            out = raw.substr(b, e - b + 1);
            return true;
        }
        return false;
    }
};

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

} // namespace

Structure parse_structure(const std::string& text) {
    auto sig = std::make_shared<Signature>();
    std::vector<std::string> names;
    std::map<std::string, ElemId> index;
    std::vector<std::string> const_names;
    struct RawFact {
        std::string rel;
        std::vector<std::string> args;
        int line;
    };
    std::vector<RawFact> raw;

    auto intern = [&](const std::string& n) {
        auto it = index.find(n);
        if (it != index.end()) return it->second;
        names.push_back(n);
        index[n] = static_cast<int>(names.size()) - 1;
        return static_cast<int>(names.size()) - 1;
    };

    LineScanner sc{text};
    std::string ln;
    while (sc.next(ln)) {
        if (ln.rfind("rel ", 0) == 0) {
            std::string rest = ln.substr(4);
            std::size_t slash = rest.find('/');
            if (slash == std::string::npos) throw ParseError("expected rel <name>/<arity>", sc.line, 1);
            std::string name = rest.substr(0, slash);
            int arity = 0;
            try {
                arity = std::stoi(rest.substr(slash + 1));
            } catch (...) {
                throw ParseError("bad arity in rel declaration", sc.line, 1);
            }
            if (!is_ident(name) || arity < 1) throw ParseError("bad rel declaration", sc.line, 1);
            sig->add_relation(name, arity);
            continue;
        }
        if (ln.rfind("const ", 0) == 0) {
            std::string name = ln.substr(6);
            if (!is_ident(name)) throw ParseError("bad const declaration", sc.line, 1);
            const_names.push_back(name);
            continue;
        }
        if (ln.rfind("elem ", 0) == 0) {
            std::string name = ln.substr(5);
            if (!is_ident(name)) throw ParseError("bad elem declaration", sc.line, 1);
            intern(name);
            continue;
        }
        std::size_t open = ln.find('(');
        if (open == std::string::npos || ln.back() != ')')
            throw ParseError("expected a fact line Rel(a,b,...)", sc.line, 1);
        std::string rel = ln.substr(0, open);
        if (!is_ident(rel)) throw ParseError("bad relation name: " + rel, sc.line, 1);
        std::string inner = ln.substr(open + 1, ln.size() - open - 2);
        std::vector<std::string> args;
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t b = tok.find_first_not_of(" \t");
            std::size_t e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) throw ParseError("empty argument", sc.line, 1);
            tok = tok.substr(b, e - b + 1);
            if (!is_ident(tok)) throw ParseError("bad element name: " + tok, sc.line, 1);
            args.push_back(tok);
        }
        if (args.empty()) throw ParseError("fact needs at least one argument", sc.line, 1);
        raw.push_back({rel, args, sc.line});
    }

    std::vector<Fact> facts;
    for (const RawFact& f : raw) {
        int id = sig->relation_id(f.rel);
        if (id < 0)
            id = sig->add_relation(f.rel, static_cast<int>(f.args.size()));
        else if (sig->arity(id) != static_cast<int>(f.args.size()))
            throw ParseError("arity mismatch for relation " + f.rel, f.line, 1);
        Fact fact{id, {}};
        for (const std::string& n : f.args) fact.args.push_back(intern(n));
        facts.push_back(std::move(fact));
    }

    std::vector<ElemId> const_map;
    for (const std::string& c : const_names) {
        sig->add_constant(c);
        const_map.push_back(intern(c)); // a constant denotes the like-named element
    }
    return Structure(std::move(sig), std::move(names), std::move(facts), std::move(const_map));
}

Structure parse_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_structure(os.str());
}

SignaturePtr signature_union(const Signature& a, const Signature& b) {
    auto out = std::make_shared<Signature>();
    for (int r = 0; r < a.relation_count(); ++r) out->add_relation(a.relation_name(r), a.arity(r));
    for (int c = 0; c < a.constant_count(); ++c) out->add_constant(a.constant_name(c));
    for (int r = 0; r < b.relation_count(); ++r) out->add_relation(b.relation_name(r), b.arity(r));
    for (int c = 0; c < b.constant_count(); ++c) out->add_constant(b.constant_name(c));
    return out;
}

} // namespace gfkit
