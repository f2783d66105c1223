#ifndef TMCAT_MULTICAT_HPP
#define TMCAT_MULTICAT_HPP

#include "tmcat/span.hpp"

namespace tmcat {

// Multicategory for a plugin T: objects O, arrows A with dom: A -> T(O) and
// cod: A -> O, identities, and a composition table on pairs Pair(u, a) with
// u in T(A) lying over dom(a). comp may be partial (a truncation): large
// composites are allowed to be absent, and law checking skips pairs whose
// composite is missing. Construction validates shapes only; see check_axioms.
struct Multicategory {
    PluginRef monad;
    FiniteSet objects;
    FiniteSet arrows;
    ElemTable dom;   // arrows -> T(objects)
    FiniteMap cod;   // arrows -> objects
    FiniteMap ids;   // objects -> arrows
    FiniteMap comp;  // composable pairs (possibly truncated) -> arrows

    Span arrow_span() const;
};

Multicategory make_multicat(PluginRef monad, FiniteSet objects, FiniteSet arrows,
                            ElemTable dom, FiniteMap cod, FiniteMap ids, FiniteMap comp);

// All Pair(u, a) with u in T(arrows) lying over dom(a).
FiniteSet composable_pairs(const Multicategory& M, std::size_t cap = kDefaultCap);

// Fieldwise equality; plugins compare by name.
bool multicat_equal(const Multicategory& a, const Multicategory& b);

struct AxiomReport {
    bool legs_ok = true;
    bool unit_ok = true;
    bool assoc_ok = true;
    std::vector<std::string> witnesses;
    bool ok() const { return legs_ok && unit_ok && assoc_ok; }
    void fail(bool AxiomReport::*flag, std::string w);
};

// Identity legs, composite legs, both unit laws, and associativity over all
// two-level composites whose intermediate composites are all present.
AxiomReport check_axioms(const Multicategory& M, std::size_t cap = kDefaultCap);

// Functor check: fo on objects, fa on arrows, compatibility with legs,
// identities, and every composite defined in M (whose image must be defined
// in N).
LawReport check_map(const Multicategory& M, const Multicategory& N, const FiniteMap& fo,
                    const FiniteMap& fa);

// One object, arrows are the shapes of size <= bound, composition flattens
// (truncated where the flattening is too large).
Multicategory terminal_multicat(PluginRef monad, int bound, std::size_t cap = kDefaultCap);

// ------------------------------------------------------------
// familiar structures as multicategories
// ------------------------------------------------------------

// Plain finite category. comp keys are Pair(g, f) for g after f.
struct CategoryData {
    FiniteSet objects;
    FiniteSet arrows;
    FiniteMap src, tgt;  // arrows -> objects
    FiniteMap ids;       // objects -> arrows
    FiniteMap comp;      // Pair(g, f) with src(g) = tgt(f) -> arrows

    bool operator==(const CategoryData& o) const;
};

// Identity-plugin multicategory with the same arrows; multicat keys flip to
// Pair(f, g) since the first factor sits below the second.
Multicategory category_as_multicat(const CategoryData& C);
CategoryData category_from_multicat(const Multicategory& M);

// Category together with a finite-set-valued functor, presented elementwise:
// points are Seq([e, s, y]) triples (family index, element, object) and
// arrows act on them. Multicategory arrows are Tag("ar", f) and
// Tag("pt", point); a point's dom is the raised family index.
struct PointedCategory {
    CategoryData cat;
    FiniteSet families;  // the exception set E
    FiniteSet points;    // Seq([e, s, y])
    FiniteMap action;    // Pair(f, p) with src(f) = object of p -> points

    bool operator==(const PointedCategory& o) const;
};

Multicategory pointed_as_multicat(const PointedCategory& P);
// families cannot be read back off the plugin, so the caller supplies them
PointedCategory pointed_from_multicat(const Multicategory& M, const FiniteSet& families);

// Category weighted in a monoid: weight(g after f) = weight(g) * weight(f),
// weight(id) = unit. Writer-plugin multicategory on the same arrows.
struct WeightedCategory {
    CategoryData cat;
    FiniteSet monoid;
    FiniteMap times;  // Pair(m, n) -> monoid
    Element unit;
    FiniteMap weight;  // arrows -> monoid

    bool operator==(const WeightedCategory& o) const;
};

Multicategory weighted_as_multicat(const WeightedCategory& W);
// monoid data is supplied by the caller, as for pointed_from_multicat
WeightedCategory weighted_from_multicat(const Multicategory& M, const FiniteSet& monoid,
                                        const FiniteMap& times, const Element& unit);

} // namespace tmcat

#endif
