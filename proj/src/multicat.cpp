#include "tmcat/multicat.hpp"

#include "tmcat/error.hpp"

#include <algorithm>
#include <map>

namespace tmcat {

namespace {

std::string pair_str(const Element& u, const Element& a) {
    return "(" + u.str() + " ; " + a.str() + ")";
}

} // namespace

Span Multicategory::arrow_span() const {
    return make_span(monad, objects, objects, arrows, dom, cod);
}

Multicategory make_multicat(PluginRef monad, FiniteSet objects, FiniteSet arrows,
                            ElemTable dom, FiniteMap cod, FiniteMap ids, FiniteMap comp) {
    if (!(dom.source() == arrows) || !(cod.source() == arrows))
        throw Error("multicategory legs must be defined on the arrows");
    if (!(cod.target() == objects)) throw Error("cod must land in the objects");
    if (!(ids.source() == objects) || !(ids.target() == arrows))
        throw Error("ids must map objects to arrows");
    if (!(comp.target() == arrows)) throw Error("comp must land in the arrows");
    const MonadPlugin& T = *monad;
    for (const auto& a : arrows)
        if (!T.well_formed(dom(a), objects))
            throw Error("dom of " + a.str() + " is not a term over the objects");
    for (const auto& key : comp.source()) {
        if (!key.is_pair()) throw Error("comp key " + key.str() + " is not a pair");
        const Element& u = key.first();
        const Element& a = key.second();
        if (!arrows.contains(a)) throw Error("comp key outer " + a.str() + " is not an arrow");
        if (!T.well_formed(u, arrows))
            throw Error("comp key inner " + u.str() + " is not a term over the arrows");
        if (!(T.apply_map(cod, u) == dom(a)))
            throw Error("comp key " + pair_str(u, a) + " is not composable");
    }
    return Multicategory{std::move(monad), std::move(objects), std::move(arrows),
                         std::move(dom),   std::move(cod),     std::move(ids),
                         std::move(comp)};
}

FiniteSet composable_pairs(const Multicategory& M, std::size_t cap) {
    const MonadPlugin& T = *M.monad;
    std::vector<Element> out;
    for (const auto& a : M.arrows) {
        for (const auto& u : T.enumerate_fiber(M.cod, M.dom(a), cap)) {
            out.push_back(Element::pair(u, a));
            if (out.size() > cap) throw GuardError("composable pairs exceed cap");
        }
    }
    return FiniteSet(out);
}

bool multicat_equal(const Multicategory& a, const Multicategory& b) {
    return a.monad->name() == b.monad->name() && a.objects == b.objects &&
           a.arrows == b.arrows && a.dom == b.dom && a.cod == b.cod && a.ids == b.ids &&
           a.comp == b.comp;
}

void AxiomReport::fail(bool AxiomReport::*flag, std::string w) {
    this->*flag = false;
    if (witnesses.size() < 32) witnesses.push_back(std::move(w));
}

AxiomReport check_axioms(const Multicategory& M, std::size_t cap) {
    AxiomReport rep;
    const MonadPlugin& T = *M.monad;
    const FiniteSet& keys = M.comp.source();

    for (const auto& x : M.objects) {
        if (!(M.dom(M.ids(x)) == T.unit(x)))
            rep.fail(&AxiomReport::legs_ok, "dom of identity at " + x.str() + " is not the unit");
        if (!(M.cod(M.ids(x)) == x))
            rep.fail(&AxiomReport::legs_ok, "cod of identity at " + x.str() + " is off");
    }
    for (const auto& key : keys) {
        const Element& u = key.first();
        const Element& a = key.second();
        Element b = M.comp(key);
        Element want = T.mult(T.apply_fn([&](const Element& f) { return M.dom(f); }, u));
        if (!(M.dom(b) == want))
            rep.fail(&AxiomReport::legs_ok, "dom of composite " + pair_str(u, a) + " is off");
        if (!(M.cod(b) == M.cod(a)))
            rep.fail(&AxiomReport::legs_ok, "cod of composite " + pair_str(u, a) + " is off");
    }

    for (const auto& a : M.arrows) {
        std::vector<Element> below;
        for (const auto& x : T.labels(M.dom(a))) below.push_back(M.ids(x));
        Element left = Element::pair(T.relabel(M.dom(a), below), a);
        if (keys.contains(left) && !(M.comp(left) == a))
            rep.fail(&AxiomReport::unit_ok, "identities below " + a.str() + " change it");
        Element right = Element::pair(T.unit(a), M.ids(M.cod(a)));
        if (keys.contains(right) && !(M.comp(right) == a))
            rep.fail(&AxiomReport::unit_ok, "identity above " + a.str() + " changes it");
    }

    // partners[b]: all v with Pair(v, b) composable in M
    std::map<Element, std::vector<Element>> partners;
    for (const auto& key : keys) partners[key.second()].push_back(key.first());
    std::size_t work = 0;
    for (const auto& key : keys) {
        const Element& u = key.first();
        const Element& a = key.second();
        std::vector<Element> inner = T.labels(u);
        std::vector<const std::vector<Element>*> opts;
        bool any_missing = false;
        for (const auto& ai : inner) {
            auto it = partners.find(ai);
            if (it == partners.end()) {
                any_missing = true;
                break;
            }
            opts.push_back(&it->second);
        }
        if (any_missing) continue;
        std::vector<Element> choice(inner.size());
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (++work > cap) throw GuardError("associativity search exceeds cap");
            if (i < inner.size()) {
                for (const auto& v : *opts[i]) {
                    choice[i] = v;
                    go(i + 1);
                }
                return;
            }
            Element w = T.relabel(u, choice);
            Element flat = Element::pair(T.mult(w), M.comp(key));
            if (!keys.contains(flat)) return;
            std::vector<Element> firsts(inner.size());
            for (std::size_t j = 0; j < inner.size(); ++j)
                firsts[j] = M.comp(Element::pair(choice[j], inner[j]));
            Element staged = Element::pair(T.relabel(u, firsts), a);
            if (!keys.contains(staged)) return;
            if (!(M.comp(flat) == M.comp(staged)))
                rep.fail(&AxiomReport::assoc_ok,
                         "two-level composite over " + pair_str(u, a) + " with " + w.str() +
                             " disagrees");
        };
        go(0);
        if (!rep.assoc_ok && rep.witnesses.size() >= 32) break;
    }
    return rep;
}

LawReport check_map(const Multicategory& M, const Multicategory& N, const FiniteMap& fo,
                    const FiniteMap& fa) {
    if (M.monad->name() != N.monad->name())
        throw Error("multicategory map across different plugins");
    if (!(fo.source() == M.objects) || !(fo.target() == N.objects) ||
        !(fa.source() == M.arrows) || !(fa.target() == N.arrows))
        throw Error("multicategory map legs are mistyped");
    const MonadPlugin& T = *M.monad;
    LawReport rep;
    for (const auto& a : M.arrows) {
        if (!(N.dom(fa(a)) == T.apply_map(fo, M.dom(a))))
            rep.fail("dom not preserved at " + a.str());
        if (!(N.cod(fa(a)) == fo(M.cod(a)))) rep.fail("cod not preserved at " + a.str());
    }
    for (const auto& x : M.objects)
        if (!(fa(M.ids(x)) == N.ids(fo(x)))) rep.fail("identity not preserved at " + x.str());
    for (const auto& key : M.comp.source()) {
        Element img = Element::pair(T.apply_map(fa, key.first()), fa(key.second()));
        if (!N.comp.source().contains(img)) {
            rep.fail("image of " + key.str() + " is not composable in the target");
            continue;
        }
        if (!(fa(M.comp(key)) == N.comp(img)))
            rep.fail("composition not preserved at " + key.str());
    }
    return rep;
}

Multicategory terminal_multicat(PluginRef monad, int bound, std::size_t cap) {
    const MonadPlugin& T = *monad;
    FiniteSet one = FiniteSet::terminal();
    Element star = one.at(0);
    FiniteSet arrows(T.shapes_up_to(bound));
    if (arrows.empty()) throw Error("terminal multicategory needs bound >= 1");
    ElemTable dom = ElemTable::from_function(arrows, [](const Element& s) { return s; });
    FiniteMap cod = FiniteMap::bang(arrows);
    FiniteMap ids(one, arrows, {{star, T.unit(star)}});
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& s : arrows) {
        for (const auto& u : T.enumerate_fiber(cod, s, cap)) {
            Element m = T.mult(u);
            if (!arrows.contains(m)) continue;  // flattening grew past the bound
            Element key = Element::pair(u, s);
            keys.push_back(key);
            centries.emplace_back(key, m);
            if (keys.size() > cap) throw GuardError("terminal multicategory exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(keys), arrows, centries);
    return make_multicat(monad, one, arrows, std::move(dom), std::move(cod), std::move(ids),
                         std::move(comp));
}

// ------------------------------------------------------------
// plain categories
// ------------------------------------------------------------

bool CategoryData::operator==(const CategoryData& o) const {
    return objects == o.objects && arrows == o.arrows && src == o.src && tgt == o.tgt &&
           ids == o.ids && comp == o.comp;
}

Multicategory category_as_multicat(const CategoryData& C) {
    ElemTable dom = ElemTable::from_function(C.arrows,
                                             [&](const Element& a) { return C.src(a); });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& key : C.comp.source()) {
        Element flipped = Element::pair(key.second(), key.first());
        keys.push_back(flipped);
        centries.emplace_back(flipped, C.comp(key));
    }
    return make_multicat(identity_monad(), C.objects, C.arrows, std::move(dom), C.tgt, C.ids,
                         FiniteMap(FiniteSet(keys), C.arrows, centries));
}

CategoryData category_from_multicat(const Multicategory& M) {
    if (M.monad->name() != "identity")
        throw Error("not an identity-plugin multicategory");
    FiniteMap src = FiniteMap::from_function(M.arrows, M.objects,
                                             [&](const Element& a) { return M.dom(a); });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& key : M.comp.source()) {
        Element flipped = Element::pair(key.second(), key.first());
        keys.push_back(flipped);
        centries.emplace_back(flipped, M.comp(key));
    }
    return CategoryData{M.objects, M.arrows, std::move(src), M.cod, M.ids,
                        FiniteMap(FiniteSet(keys), M.arrows, centries)};
}

// ------------------------------------------------------------
// categories with finite-set-valued functors
// ------------------------------------------------------------

bool PointedCategory::operator==(const PointedCategory& o) const {
    return cat == o.cat && families == o.families && points == o.points && action == o.action;
}

namespace {

const Element& point_family(const Element& p) { return p.items().at(0); }
const Element& point_object(const Element& p) { return p.items().at(2); }

} // namespace

Multicategory pointed_as_multicat(const PointedCategory& P) {
    for (const auto& p : P.points) {
        if (!p.is_seq() || p.items().size() != 3)
            throw Error("point " + p.str() + " is not a triple");
        if (!P.families.contains(point_family(p)))
            throw Error("point " + p.str() + " has an unknown family");
        if (!P.cat.objects.contains(point_object(p)))
            throw Error("point " + p.str() + " sits over an unknown object");
    }
    std::vector<Element> arrows;
    for (const auto& f : P.cat.arrows) arrows.push_back(Element::tag("ar", f));
    for (const auto& p : P.points) arrows.push_back(Element::tag("pt", p));
    FiniteSet A(arrows);
    ElemTable dom = ElemTable::from_function(A, [&](const Element& a) {
        if (a.name() == "ar") return Element::tag("val", P.cat.src(a.inner()));
        return Element::tag("exc", point_family(a.inner()));
    });
    FiniteMap cod = FiniteMap::from_function(A, P.cat.objects, [&](const Element& a) {
        if (a.name() == "ar") return P.cat.tgt(a.inner());
        return point_object(a.inner());
    });
    FiniteMap ids = FiniteMap::from_function(P.cat.objects, A, [&](const Element& x) {
        return Element::tag("ar", P.cat.ids(x));
    });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    auto add = [&](Element u, Element a, Element value) {
        Element key = Element::pair(std::move(u), std::move(a));
        keys.push_back(key);
        centries.emplace_back(key, std::move(value));
    };
    for (const auto& key : P.cat.comp.source())
        add(Element::tag("val", Element::tag("ar", key.second())),
            Element::tag("ar", key.first()), Element::tag("ar", P.cat.comp(key)));
    for (const auto& key : P.action.source())
        add(Element::tag("val", Element::tag("pt", key.second())),
            Element::tag("ar", key.first()), Element::tag("pt", P.action(key)));
    for (const auto& p : P.points)
        add(Element::tag("exc", point_family(p)), Element::tag("pt", p),
            Element::tag("pt", p));
    return make_multicat(exceptions_monad(P.families), P.cat.objects, A, std::move(dom),
                         std::move(cod), std::move(ids),
                         FiniteMap(FiniteSet(keys), A, centries));
}

PointedCategory pointed_from_multicat(const Multicategory& M, const FiniteSet& families) {
    if (M.monad->name() != "exceptions")
        throw Error("not an exceptions-plugin multicategory");
    std::vector<Element> arrows, points;
    for (const auto& a : M.arrows) {
        if (a.is_tag() && a.name() == "ar") arrows.push_back(a.inner());
        else if (a.is_tag() && a.name() == "pt") points.push_back(a.inner());
        else throw Error("arrow " + a.str() + " is neither an ar nor a pt tag");
    }
    FiniteSet arr(arrows);
    FiniteMap src = FiniteMap::from_function(arr, M.objects, [&](const Element& f) {
        return M.dom(Element::tag("ar", f)).inner();
    });
    FiniteMap tgt = FiniteMap::from_function(arr, M.objects, [&](const Element& f) {
        return M.cod(Element::tag("ar", f));
    });
    FiniteMap ids = FiniteMap::from_function(M.objects, arr, [&](const Element& x) {
        return M.ids(x).inner();
    });
    std::vector<Element> ckeys, akeys;
    std::vector<std::pair<Element, Element>> centries, aentries;
    for (const auto& key : M.comp.source()) {
        const Element& u = key.first();
        const Element& a = key.second();
        if (u.name() != "val") continue;  // raised pairs carry no data
        const Element& below = u.inner();
        if (below.name() == "ar") {
            Element k = Element::pair(a.inner(), below.inner());
            ckeys.push_back(k);
            centries.emplace_back(k, M.comp(key).inner());
        } else {
            Element k = Element::pair(a.inner(), below.inner());
            akeys.push_back(k);
            aentries.emplace_back(k, M.comp(key).inner());
        }
    }
    CategoryData cat{M.objects, arr, std::move(src), std::move(tgt), std::move(ids),
                     FiniteMap(FiniteSet(ckeys), arr, centries)};
    FiniteSet pts(points);
    return PointedCategory{std::move(cat), families, pts,
                           FiniteMap(FiniteSet(akeys), pts, aentries)};
}

// ------------------------------------------------------------
// weighted categories
// ------------------------------------------------------------

bool WeightedCategory::operator==(const WeightedCategory& o) const {
    return cat == o.cat && monoid == o.monoid && times == o.times && unit == o.unit &&
           weight == o.weight;
}

Multicategory weighted_as_multicat(const WeightedCategory& W) {
    PluginRef T = writer_monad(W.monoid, W.times, W.unit);
    ElemTable dom = ElemTable::from_function(W.cat.arrows, [&](const Element& a) {
        return Element::pair(W.weight(a), W.cat.src(a));
    });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& key : W.cat.comp.source()) {
        const Element& g = key.first();
        const Element& f = key.second();
        Element k = Element::pair(Element::pair(W.weight(g), f), g);
        keys.push_back(k);
        centries.emplace_back(k, W.cat.comp(key));
    }
    return make_multicat(T, W.cat.objects, W.cat.arrows, std::move(dom), W.cat.tgt, W.cat.ids,
                         FiniteMap(FiniteSet(keys), W.cat.arrows, centries));
}

WeightedCategory weighted_from_multicat(const Multicategory& M, const FiniteSet& monoid,
                                        const FiniteMap& times, const Element& unit) {
    if (M.monad->name() != "writer")
        throw Error("not a writer-plugin multicategory");
    FiniteMap src = FiniteMap::from_function(M.arrows, M.objects, [&](const Element& a) {
        return M.dom(a).second();
    });
    FiniteMap weight = FiniteMap::from_function(M.arrows, monoid, [&](const Element& a) {
        return M.dom(a).first();
    });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& key : M.comp.source()) {
        Element k = Element::pair(key.second(), key.first().second());
        keys.push_back(k);
        centries.emplace_back(k, M.comp(key));
    }
    CategoryData cat{M.objects, M.arrows, std::move(src), M.cod, M.ids,
                     FiniteMap(FiniteSet(keys), M.arrows, centries)};
    return WeightedCategory{std::move(cat), monoid, times, unit, std::move(weight)};
}

} // namespace tmcat
