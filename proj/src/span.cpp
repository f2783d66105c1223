#include "tmcat/span.hpp"

#include "tmcat/error.hpp"

namespace tmcat {

std::string Span::str() const {
    return src.str() + " =" + std::to_string(apex.size()) + "=> " + dst.str();
}

Span make_span(PluginRef monad, FiniteSet src, FiniteSet dst, FiniteSet apex,
               ElemTable dom, FiniteMap cod) {
    if (!(dom.source() == apex) || !(cod.source() == apex))
        throw Error("span legs must share the apex");
    if (!(cod.target() == dst)) throw Error("span output leg lands outside dst");
    for (const auto& e : apex)
        if (!monad->well_formed(dom(e), src))
            throw Error("span input leg at " + e.str() + " is not a term over " + src.str());
    return Span{std::move(monad), std::move(src), std::move(dst), std::move(apex),
                std::move(dom), std::move(cod)};
}

Span identity_span(PluginRef monad, const FiniteSet& X) {
    ElemTable dom = ElemTable::from_function(
        X, [&](const Element& x) { return monad->unit(x); });
    return make_span(monad, X, X, X, std::move(dom), FiniteMap::identity(X));
}

Span compose_spans(const Span& after, const Span& before, std::size_t cap) {
    if (before.monad->name() != after.monad->name())
        throw Error("span composition across different plugins");
    if (!(before.dst == after.src))
        throw Error("spans do not meet: " + before.str() + " then " + after.str());
    const MonadPlugin& T = *before.monad;
    std::vector<Element> apex;
    std::vector<std::pair<Element, Element>> dome, code;
    for (const auto& b : after.apex) {
        for (const auto& u : T.enumerate_fiber(before.cod, after.dom(b), cap)) {
            Element e = Element::pair(u, b);
            Element d = T.mult(T.apply_fn(
                [&](const Element& x) { return before.dom(x); }, u));
            apex.push_back(e);
            dome.emplace_back(e, std::move(d));
            code.emplace_back(e, after.cod(b));
            if (apex.size() > cap) throw GuardError("span composite exceeds cap");
        }
    }
    FiniteSet ap(apex);
    ElemTable dom(ap, dome);
    FiniteMap cod(ap, after.dst, code);
    return make_span(before.monad, before.src, after.dst, std::move(ap), std::move(dom),
                     std::move(cod));
}

bool is_span_map(const Span& from, const Span& to, const FiniteMap& h) {
    if (from.monad->name() != to.monad->name()) return false;
    if (!(from.src == to.src) || !(from.dst == to.dst)) return false;
    if (!(h.source() == from.apex) || !(h.target() == to.apex)) return false;
    for (const auto& e : from.apex) {
        if (!(to.dom(h(e)) == from.dom(e))) return false;
        if (!(to.cod(h(e)) == from.cod(e))) return false;
    }
    return true;
}

bool is_span_iso(const Span& from, const Span& to, const FiniteMap& h) {
    return is_span_map(from, to, h) && h.is_bijective();
}

FiniteMap associator(const Span& a, const Span& b, const Span& c) {
    const MonadPlugin& T = *a.monad;
    Span ba = compose_spans(b, a);
    Span right = compose_spans(c, ba);
    Span left = compose_spans(compose_spans(c, b), a);
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& e : right.apex) {
        const Element& u1 = e.first();   // in T(ba.apex), labels Pair(w_i, b_i)
        const Element& cel = e.second();
        std::vector<Element> ws, bs;
        for (const auto& l : T.labels(u1)) {
            ws.push_back(l.first());
            bs.push_back(l.second());
        }
        Element v = T.relabel(u1, bs);
        Element w = T.mult(T.relabel(u1, ws));
        entries.emplace_back(e, Element::pair(w, Element::pair(v, cel)));
    }
    return FiniteMap(right.apex, left.apex, entries);
}

FiniteMap left_unitor(const Span& a) {
    const MonadPlugin& T = *a.monad;
    Span ia = compose_spans(identity_span(a.monad, a.dst), a);
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& e : ia.apex) {
        const Element& u = e.first();  // lies over a unit, so is one
        auto ls = T.labels(u);
        if (ls.size() != 1 || !(T.unit(ls[0]) == u))
            throw Error("left unitor: " + u.str() + " is not a unit");
        entries.emplace_back(e, ls[0]);
    }
    return FiniteMap(ia.apex, a.apex, entries);
}

FiniteMap right_unitor(const Span& a) {
    Span ai = compose_spans(a, identity_span(a.monad, a.src));
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& e : ai.apex) entries.emplace_back(e, e.second());
    return FiniteMap(ai.apex, a.apex, entries);
}

FiniteMap horizontal_compose(const Span& from_composite, const Span& to_composite,
                             const FiniteMap& f, const FiniteMap& g) {
    const MonadPlugin& T = *from_composite.monad;
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& e : from_composite.apex)
        entries.emplace_back(
            e, Element::pair(T.apply_map(f, e.first()), g(e.second())));
    return FiniteMap(from_composite.apex, to_composite.apex, entries);
}

} // namespace tmcat
