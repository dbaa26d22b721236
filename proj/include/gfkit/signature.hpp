#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gfkit/error.hpp"

namespace gfkit {

// A finite relational signature: named relations with positive arities plus a
// set of constant names.  Relation ids are dense indices in declaration order.
class Signature {
public:
    Signature() = default;

    int add_relation(const std::string& name, int arity) {
        if (arity < 1) throw DomainError("relation arity must be >= 1: " + name);
        auto it = rel_index_.find(name);
        if (it != rel_index_.end()) {
            if (rels_[it->second].arity != arity)
                throw DomainError("arity mismatch for relation " + name);
            return it->second;
        }
        if (const_index_.count(name))
            throw DomainError("name used for both relation and constant: " + name);
        rels_.push_back({name, arity});
        rel_index_[name] = static_cast<int>(rels_.size()) - 1;
        return static_cast<int>(rels_.size()) - 1;
    }

    int add_constant(const std::string& name) {
        if (rel_index_.count(name))
            throw DomainError("name used for both relation and constant: " + name);
        auto it = const_index_.find(name);
        if (it != const_index_.end()) return it->second;
        consts_.push_back(name);
        const_index_[name] = static_cast<int>(consts_.size()) - 1;
        return static_cast<int>(consts_.size()) - 1;
    }

    int relation_count() const { return static_cast<int>(rels_.size()); }
    int constant_count() const { return static_cast<int>(consts_.size()); }

    const std::string& relation_name(int id) const { return rels_[id].name; }
    int arity(int id) const { return rels_[id].arity; }
    const std::string& constant_name(int id) const { return consts_[id]; }

    int relation_id(const std::string& name) const {
        auto it = rel_index_.find(name);
        return it == rel_index_.end() ? -1 : it->second;
    }
    int constant_id(const std::string& name) const {
        auto it = const_index_.find(name);
        return it == const_index_.end() ? -1 : it->second;
    }

    // width(signature): maximal relation arity, 0 for the empty signature.
    int width() const {
        int w = 0;
        for (const auto& r : rels_) w = std::max(w, r.arity);
        return w;
    }

    bool operator==(const Signature& o) const {
        if (rels_.size() != o.rels_.size() || consts_ != o.consts_) return false;
        for (std::size_t i = 0; i < rels_.size(); ++i)
            if (rels_[i].name != o.rels_[i].name || rels_[i].arity != o.rels_[i].arity)
                return false;
        return true;
    }

    // o contains every relation (same arity) and constant of *this.
    bool subsumed_by(const Signature& o) const {
        for (const auto& r : rels_) {
            int id = o.relation_id(r.name);
            if (id < 0 || o.arity(id) != r.arity) return false;
        }
        for (const auto& c : consts_)
            if (o.constant_id(c) < 0) return false;
        return true;
    }

private:
    struct Rel {
        std::string name;
        int arity;
    };
    std::vector<Rel> rels_;
    std::vector<std::string> consts_;
    std::map<std::string, int> rel_index_;
    std::map<std::string, int> const_index_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

// Union signature: relations/constants of a, then those of b not already
// present.  Arity conflicts are an error.
SignaturePtr signature_union(const Signature& a, const Signature& b);

} // namespace gfkit
