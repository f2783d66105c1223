#ifndef TMCAT_ALGEBRA_HPP
#define TMCAT_ALGEBRA_HPP

#include "tmcat/multicat.hpp"

#include <optional>

namespace tmcat {

// Algebra for a multicategory M: a carrier over the objects together with an
// action on the blob, the set of Pair(u, a) with u in T(carrier) lying over
// dom(a). The action is a table on exactly that set.
struct Algebra {
    FiniteSet carrier;
    FiniteMap p;    // carrier -> objects
    FiniteMap act;  // blob of the carrier -> carrier
};

FiniteSet blob_set(const Multicategory& M, const FiniteSet& X, const FiniteMap& p,
                   std::size_t cap = kDefaultCap);

// Pair(unit(x), identity at p(x)); the action must send it back to x.
Element blob_unit(const Multicategory& M, const FiniteMap& p, const Element& x);

// Flattening of a two-level blob element Pair(w, a), where w's labels are
// themselves blob elements. Empty when the needed composite is truncated
// away in M.
std::optional<Element> blob_mult(const Multicategory& M, const Element& wa);

// Image of a blob element under a carrier map: Pair(T(h)(u), a).
Element blob_map(const MonadPlugin& T, const FiniteMap& h, const Element& ua);

// Projection typing, unit law, and the action law against every two-level
// element whose flattening is defined.
LawReport check_algebra(const Multicategory& M, const Algebra& alg,
                        std::size_t cap = kDefaultCap);

// All algebras on canonical carriers x0..x(n-1) for each n <= max_size,
// every projection, every blob table compatible with it, filtered by the
// laws.
std::vector<Algebra> enumerate_algebras(const Multicategory& M, int max_size,
                                        std::size_t cap = kDefaultCap);

// Operad (one object, sequence plugin) of all functions X^n -> X with
// n <= max_arity. An arity-n arrow is Pair of the arity word and the output
// table over input tuples in lexicographic order; composition substitutes,
// truncated at max_arity.
Multicategory endomorphism_operad(const FiniteSet& X, int max_arity,
                                  std::size_t cap = kDefaultCap);

// Evaluate an endomorphism arrow on a tuple.
Element endo_apply(const FiniteSet& X, const Element& arrow,
                   const std::vector<Element>& args);

// An algebra structure on X for an operad O is the same thing as a map
// O -> End(X); these convert between the two presentations. fo is forced.
FiniteMap algebra_as_endo_map(const Multicategory& O, const Algebra& alg,
                              const Multicategory& endx);
Algebra endo_map_as_algebra(const Multicategory& O, const Multicategory& endx,
                            const FiniteSet& X, const FiniteMap& fa);

// Multicategory of elements of an algebra: objects are the carrier, arrows
// are the blob, composition is blob flattening.
Multicategory slice_multicat(const Multicategory& M, const Algebra& alg,
                             std::size_t cap = kDefaultCap);

// Pull an N-algebra back along a map (fo, fa): M -> N. The carrier is the
// pullback of the projection along fo.
Algebra restrict_algebra(const Multicategory& M, const Multicategory& N,
                         const FiniteMap& fo, const FiniteMap& fa, const Algebra& beta,
                         std::size_t cap = kDefaultCap);

} // namespace tmcat

#endif
