#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfkit/signature.hpp"

namespace gfkit {

using ElemId = int;

struct Fact {
    int rel;
    std::vector<ElemId> args;
    auto operator<=>(const Fact&) const = default;
};

class Hypergraph;

// A finite relational structure.  Immutable after construction; element ids
// are dense indices in insertion order of the element names, which fixes the
// iteration order of every downstream construction.
class Structure {
public:
    Structure(SignaturePtr sig,
              std::vector<std::string> element_names,
              std::vector<Fact> facts,
              std::vector<ElemId> constant_map = {});

    const Signature& sig() const { return *sig_; }
    SignaturePtr sig_ptr() const { return sig_; }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& element_name(ElemId e) const { return names_[e]; }
    std::optional<ElemId> element_id(const std::string& name) const;

    const std::vector<Fact>& facts() const { return facts_; }
    bool has_fact(int rel, const std::vector<ElemId>& args) const;
    const std::vector<int>& facts_of_relation(int rel) const { return by_rel_[rel]; }
    const std::vector<int>& facts_containing(ElemId e) const { return by_elem_[e]; }

    ElemId constant_value(int const_id) const { return const_map_[const_id]; }

    // Maximal guarded subsets (each sorted), in deterministic order.  Every
    // singleton is guarded, so isolated elements contribute singleton sets.
    const std::vector<std::vector<ElemId>>& maximal_guarded_sets() const { return max_guarded_; }

    // Canonical line-based serialization (re-parseable).
    std::string to_text() const;

    bool operator==(const Structure& o) const {
        return sig() == o.sig() && names_ == o.names_ && facts_ == o.facts_ &&
               const_map_ == o.const_map_;
    }

private:
    SignaturePtr sig_;
    std::vector<std::string> names_;
    std::map<std::string, ElemId> name_index_;
    std::vector<Fact> facts_; // sorted, unique
    std::vector<ElemId> const_map_;
    std::vector<std::vector<int>> by_rel_;
    std::vector<std::vector<int>> by_elem_;
    std::vector<std::vector<ElemId>> max_guarded_;
};

// set nonempty; true iff the set is a singleton or covered by one fact.
bool is_guarded(const Structure& a, const std::vector<ElemId>& set);
// true iff every pair of the set is guarded (clique in the Gaifman graph).
bool is_clique_guarded(const Structure& a, const std::vector<ElemId>& set);

// The hypergraph of maximal guarded subsets on a's universe.
Hypergraph structure_hypergraph(const Structure& a);

// Parse the line-based structure format:
//   rel <Name>/<arity>      optional declarations
//   const <name>            constants denote the like-named element
//   <Rel>(<e1>,<e2>,...)    facts; undeclared relations are inferred
//   # comment
Structure parse_structure(const std::string& text);
Structure parse_structure_file(const std::string& path);

} // namespace gfkit
