#ifndef TMCAT_TRANSPORT_HPP
#define TMCAT_TRANSPORT_HPP

#include "tmcat/multicat.hpp"

#include <functional>
#include <optional>

namespace tmcat {

// Shape translation between two plugins, one elementwise map used uniformly
// over every base set. Labels carry over in traversal order.
struct NatTrans {
    std::string name;
    PluginRef source;
    PluginRef target;
    std::function<Element(const Element&)> translate;
};

NatTrans identity_trans(PluginRef T);
// identity plugin into T, x to the one-position term on x
NatTrans unit_embedding(PluginRef T);
// tree plugin into the sequence plugin, a tree to its frontier
NatTrans leaf_sequence();
// writer plugin into a larger writer plugin along a monoid inclusion
NatTrans writer_inclusion(PluginRef sub, PluginRef whole, FiniteMap incl);
// exceptions plugin into the sequence plugin: values become one-letter
// words, failures become the empty word
NatTrans exceptions_collapse(PluginRef exc);

// naturality, unit and flattening compatibility, and unique lifts across
// the naturality squares, on terms over X up to size_bound
LawReport check_nat_trans(const NatTrans& phi, const FiniteSet& X, int size_bound,
                          std::size_t cap = kDefaultCap);

// same objects and arrows, input shapes pushed through phi
Multicategory transport_by_composition(const NatTrans& phi, const Multicategory& M);

// arrows become Pair(source-plugin shape, arrow), matched along phi; the
// shape search runs over source terms up to size_bound
Multicategory transport_by_pullback(const NatTrans& phi, const Multicategory& M,
                                    int size_bound, std::size_t cap = kDefaultCap);

// A category whose objects and arrows are terms over some base category's
// objects and arrows, carrying the flattening as a tensor. The tensors
// return nullopt when the flattening leaves the bounded carrier.
struct StructuredCategory {
    PluginRef monad;
    FiniteSet objects;
    FiniteSet arrows;
    FiniteMap src, tgt;  // arrows -> objects
    FiniteMap ids;       // objects -> arrows
    FiniteMap comp;      // Pair(g, f) with src(g) = tgt(f); possibly truncated
    std::function<std::optional<Element>(const Element&)> obj_tensor;
    std::function<std::optional<Element>(const Element&)> arr_tensor;
};

// category axioms plus tensor laws (unit, flattening, compatibility with
// src/tgt/ids/comp) probed on terms up to tensor_bound
LawReport check_structured(const StructuredCategory& B, int tensor_bound,
                           std::size_t cap = kDefaultCap);

// objects are bounded terms over M's objects, arrows bounded terms over
// M's arrows; src flattens the input sides, comp works componentwise
StructuredCategory free_structured(const Multicategory& M, int size_bound,
                                   std::size_t cap = kDefaultCap);

// plain category as a structured category over the identity plugin
StructuredCategory category_as_structured(const CategoryData& C);

// objects kept; an arrow from a tuple of objects is an arrow out of its
// tensor; outer shapes run up to size_bound
Multicategory underlying_multicat(const StructuredCategory& B, int size_bound,
                                  std::size_t cap = kDefaultCap);

// one-object operad whose arrows are the source plugin's shapes up to
// size_bound and whose input words come through phi; phi must land in the
// sequence plugin
Multicategory operad_from_regular_theory(const NatTrans& phi, int size_bound,
                                         std::size_t cap = kDefaultCap);

// A multicategory repackaged as the construction it induces on carriers
// over its objects: the labeled-shape set, its projection, unit, the
// two-level flattening, and the shape readout.
struct MonadDataPackage {
    PluginRef monad;
    FiniteSet base;
    std::function<FiniteSet(const FiniteSet&, const FiniteMap&, std::size_t)> act;
    std::function<FiniteMap(const FiniteSet&, const FiniteMap&)> proj;
    std::function<Element(const FiniteMap&, const Element&)> unit;
    std::function<std::optional<Element>(const Element&)> flatten;
    std::function<Element(const Element&)> shape;
};

MonadDataPackage monad_data(const Multicategory& M);
// evaluates the package on the base over itself and reads the multicategory
// back off; recover_multicat(monad_data(M)) reproduces M exactly
Multicategory recover_multicat(const MonadDataPackage& pkg, std::size_t cap = kDefaultCap);

} // namespace tmcat

#endif
