#ifndef TMCAT_SPAN_HPP
#define TMCAT_SPAN_HPP

#include "tmcat/monad.hpp"

namespace tmcat {

// Span from src to dst for a plugin T: an apex A with an input leg
// dom: A -> T(src) (tabulated, T(src) is never built) and an output leg
// cod: A -> dst. Multicategories are monoids for this composition.
struct Span {
    PluginRef monad;
    FiniteSet src, dst;
    FiniteSet apex;
    ElemTable dom;
    FiniteMap cod;

    std::string str() const;
};

// Validates legs: shared apex, cod into dst, dom values well formed over src.
Span make_span(PluginRef monad, FiniteSet src, FiniteSet dst, FiniteSet apex,
               ElemTable dom, FiniteMap cod);

// Apex X, dom = unit, cod = id.
Span identity_span(PluginRef monad, const FiniteSet& X);

// Apex of after o before is Pair(u, b) with u in T(before.apex) lying over
// after.dom(b); its input leg flattens, its output leg is after's.
Span compose_spans(const Span& after, const Span& before,
                   std::size_t cap = kDefaultCap);

// 2-cells are apex maps commuting with both legs.
bool is_span_map(const Span& from, const Span& to, const FiniteMap& h);
bool is_span_iso(const Span& from, const Span& to, const FiniteMap& h);

// c o (b o a)  ->  (c o b) o a, reassociating each apex element in place.
FiniteMap associator(const Span& a, const Span& b, const Span& c);

// identity_span(dst) o a  ->  a. Requires unit fibers to be singletons, which
// the cartesian plugins guarantee.
FiniteMap left_unitor(const Span& a);

// a o identity_span(src)  ->  a.
FiniteMap right_unitor(const Span& a);

// Composite of 2-cells f (on the before factor) and g (on the after factor),
// as a map between precomputed composite spans: Pair(u, b) goes to
// Pair(T(f)(u), g(b)).
FiniteMap horizontal_compose(const Span& from_composite, const Span& to_composite,
                             const FiniteMap& f, const FiniteMap& g);

} // namespace tmcat

#endif
