#ifndef TMCAT_FREE_HPP
#define TMCAT_FREE_HPP

#include "tmcat/multicat.hpp"

namespace tmcat {

// Generating data for a free multicategory: typed operation symbols.
struct Signature {
    PluginRef monad;
    FiniteSet objects;
    FiniteSet gens;
    ElemTable dom;  // gens -> T(objects)
    FiniteMap cod;  // gens -> objects
};

Signature make_signature(PluginRef monad, FiniteSet objects, FiniteSet gens, ElemTable dom,
                         FiniteMap cod);

// Free arrows are Tag("id", x) for an object x, or Tree(g, {w}) where w is a
// T-term over free arrows lying over dom(g). Grafting substitutes arrows at
// the input positions, splitting by the position counts of the lower arrows.
Element free_ident(const Element& x);
Element free_gen(const Signature& sig, const Element& g);  // generator with identity inputs
bool free_well_formed(const Signature& sig, const Element& a);
Element free_cod(const Signature& sig, const Element& a);
Element free_dom(const Signature& sig, const Element& a);  // T-term over objects
int free_nodes(const Signature& sig, const Element& a);    // generator uses
Element graft(const Signature& sig, const Element& u, const Element& a);

// All free arrows with at most max_nodes generator uses.
std::vector<Element> free_enumerate(const Signature& sig, int max_nodes,
                                    std::size_t cap = kDefaultCap);

// Truncation of the free multicategory: arrows up to max_nodes, composites
// kept when they stay within the bound.
Multicategory free_multicat(const Signature& sig, int max_nodes, std::size_t cap = kDefaultCap);

// The unique structure-preserving extension of a generator assignment
// fo: objects -> N.objects, fg: gens -> N.arrows to the arrows of the given
// truncation. Throws when a needed composite is truncated away in N.
FiniteMap universal_extension(const Signature& sig, const Multicategory& F,
                              const Multicategory& N, const FiniteMap& fo,
                              const FiniteMap& fg);

} // namespace tmcat

#endif
