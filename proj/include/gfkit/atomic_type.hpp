#pragma once

#include <string>
#include <vector>

#include "gfkit/signature.hpp"
#include "gfkit/structure.hpp"

namespace gfkit {

// The atomic type of an n-tuple over a signature: a maximal consistent set of
// literals over the tuple variables and the signature constants.  Canonical
// form: equalities are a partition with least-index representatives (variable
// slots first, then constant slots), and only positive atoms are stored with
// representative arguments -- every absent atom is negated.  The canonical
// serialization doubles as hash key and as the fixed global ordering of types.
class AtomicType {
public:
    // slots 0..arity-1 are tuple variables, arity..arity+k-1 the constants.
    AtomicType(SignaturePtr sig, int arity, std::vector<int> rep, std::vector<Fact> atoms);

    static AtomicType of_tuple(const Structure& a, const std::vector<ElemId>& tuple);

    int arity() const { return arity_; }
    int slots() const { return static_cast<int>(rep_.size()); }
    const Signature& sig() const { return *sig_; }
    SignaturePtr sig_ptr() const { return sig_; }

    int rep(int slot) const { return rep_[slot]; }
    bool equal(int s, int t) const { return rep_[s] == rep_[t]; }
    bool has_atom(int rel, const std::vector<int>& arg_slots) const;
    const std::vector<Fact>& atoms() const { return atoms_; }

    // restriction to the variable slots listed in idx (repeats allowed);
    // constants are always kept.
    AtomicType restrict_to(const std::vector<int>& idx) const;

    // some positive atom covers every variable class, or there is at most one
    // variable class.
    bool guarded() const;

    const std::string& key() const { return key_; }

    bool operator==(const AtomicType& o) const { return key_ == o.key_; }
    bool operator<(const AtomicType& o) const { return key_ < o.key_; }

private:
    SignaturePtr sig_;
    int arity_;
    std::vector<int> rep_;
    std::vector<Fact> atoms_; // args are representative slots; sorted unique
    std::string key_;
};

// atomic_type_of(a, tuple): the unique type t with a |= t(tuple).
AtomicType atomic_type_of(const Structure& a, const std::vector<ElemId>& tuple);

} // namespace gfkit
