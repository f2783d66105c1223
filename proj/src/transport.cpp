#include "tmcat/transport.hpp"

#include "tmcat/algebra.hpp"
#include "tmcat/error.hpp"

#include <map>

namespace tmcat {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

// all maps X -> Y, odometer over the target
std::vector<FiniteMap> all_maps(const FiniteSet& X, const FiniteSet& Y) {
    std::vector<FiniteMap> out;
    if (X.empty()) {
        out.push_back(FiniteMap::from_function(X, Y, [](const Element& x) { return x; }));
        return out;
    }
    if (Y.empty()) return out;
    std::vector<std::size_t> pick(X.size(), 0);
    while (true) {
        std::vector<std::pair<Element, Element>> entries;
        for (std::size_t i = 0; i < X.size(); ++i)
            entries.emplace_back(X.at(i), Y.at(pick[i]));
        out.push_back(FiniteMap(X, Y, entries));
        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == Y.size()) pick[d++] = 0;
        if (d == pick.size()) break;
    }
    return out;
}

} // namespace

NatTrans identity_trans(PluginRef T) {
    return NatTrans{"identity", T, T, [](const Element& t) { return t; }};
}

NatTrans unit_embedding(PluginRef T) {
    PluginRef id = identity_monad();
    return NatTrans{"unit_embedding", id, T,
                    [T](const Element& x) { return T->unit(x); }};
}

NatTrans leaf_sequence() {
    PluginRef tr = tree_monad();
    return NatTrans{"leaf_sequence", tr, free_monoid_monad(),
                    [tr](const Element& t) { return Element::seq(tr->labels(t)); }};
}

NatTrans writer_inclusion(PluginRef sub, PluginRef whole, FiniteMap incl) {
    require(sub->name() == "writer" && whole->name() == "writer",
            "writer_inclusion: both plugins must be writers");
    return NatTrans{"writer_inclusion", std::move(sub), std::move(whole),
                    [incl](const Element& t) {
                        return Element::pair(incl(t.first()), t.second());
                    }};
}

NatTrans exceptions_collapse(PluginRef exc) {
    require(exc->name() == "exceptions", "exceptions_collapse: needs the exceptions plugin");
    return NatTrans{"exceptions_collapse", std::move(exc), free_monoid_monad(),
                    [](const Element& t) {
                        if (t.name() == "val") return Element::seq({t.inner()});
                        return Element::seq({});
                    }};
}

LawReport check_nat_trans(const NatTrans& phi, const FiniteSet& X, int size_bound,
                          std::size_t cap) {
    LawReport rep;
    const MonadPlugin& S = *phi.source;
    const MonadPlugin& T = *phi.target;
    std::vector<Element> terms = S.enumerate_telements(X, size_bound, cap);

    for (const Element& t : terms)
        if (!T.well_formed(phi.translate(t), X))
            rep.fail("image: " + phi.translate(t).str() + " is not a term over the base");

    for (const Element& x : X)
        if (phi.translate(S.unit(x)) != T.unit(x))
            rep.fail("unit: " + x.str());

    std::vector<std::pair<Element, int>> alphabet;
    for (const Element& t : terms) alphabet.emplace_back(t, S.size(t));
    for (const Element& tt : bounded_nested(S, alphabet, size_bound, size_bound, cap)) {
        Element lhs = phi.translate(S.mult(tt));
        Element rhs = T.mult(phi.translate(S.apply_fn(phi.translate, tt)));
        if (lhs != rhs) rep.fail("flatten: " + tt.str());
    }

    std::vector<FiniteSet> targets = {FiniteSet::named(1, "y"), FiniteSet::named(2, "y"), X};
    for (const FiniteSet& Y : targets) {
        std::vector<Element> yterms = S.enumerate_telements(Y, size_bound, cap);
        std::vector<Element> timages = T.enumerate_telements(X, size_bound, cap);
        for (const FiniteMap& f : all_maps(X, Y)) {
            for (const Element& t : terms)
                if (phi.translate(S.apply_map(f, t)) != T.apply_map(f, phi.translate(t)))
                    rep.fail("naturality: " + t.str());
            // the naturality square admits unique lifts
            for (const Element& u : yterms) {
                for (const Element& v : timages) {
                    if (phi.translate(u) != T.apply_map(f, v)) continue;
                    int lifts = 0;
                    for (const Element& t : terms)
                        if (S.apply_map(f, t) == u && phi.translate(t) == v) ++lifts;
                    if (lifts != 1)
                        rep.fail("lift: " + std::to_string(lifts) + " lifts of (" + u.str() +
                                 ", " + v.str() + ")");
                }
            }
        }
    }
    return rep;
}

Multicategory transport_by_composition(const NatTrans& phi, const Multicategory& M) {
    require(phi.source->name() == M.monad->name(),
            "transport_by_composition: plugin mismatch");
    ElemTable dom = ElemTable::from_function(
        M.arrows, [&](const Element& a) { return phi.translate(M.dom(a)); });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    for (const Element& k : M.comp.source()) {
        Element nk = Element::pair(phi.translate(k.first()), k.second());
        keys.push_back(nk);
        entries.emplace_back(nk, M.comp(k));
    }
    FiniteMap comp(FiniteSet(keys), M.arrows, entries);
    return make_multicat(phi.target, M.objects, M.arrows, dom, M.cod, M.ids, comp);
}

Multicategory transport_by_pullback(const NatTrans& phi, const Multicategory& M,
                                    int size_bound, std::size_t cap) {
    require(phi.target->name() == M.monad->name(),
            "transport_by_pullback: plugin mismatch");
    const MonadPlugin& S = *phi.source;
    std::vector<Element> shapes = S.enumerate_telements(M.objects, size_bound, cap);

    std::vector<Element> arrows;
    for (const Element& a : M.arrows)
        for (const Element& t : shapes)
            if (phi.translate(t) == M.dom(a)) {
                arrows.push_back(Element::pair(t, a));
                if (arrows.size() > cap)
                    throw GuardError("transport_by_pullback: arrow count exceeds cap");
            }
    FiniteSet arrow_set(arrows);

    ElemTable dom = ElemTable::from_function(
        arrow_set, [](const Element& e) { return e.first(); });
    FiniteMap cod = FiniteMap::from_function(
        arrow_set, M.objects, [&](const Element& e) { return M.cod(e.second()); });
    FiniteMap ids = FiniteMap::from_function(M.objects, arrow_set, [&](const Element& x) {
        Element e = Element::pair(S.unit(x), M.ids(x));
        require(arrow_set.contains(e), "transport_by_pullback: identity shape out of bounds");
        return e;
    });

    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    for (const Element& e : arrow_set) {
        for (const Element& u : S.enumerate_fiber(cod, dom(e), cap)) {
            Element mkey = Element::pair(
                phi.translate(S.apply_fn([](const Element& x) { return x.second(); }, u)),
                e.second());
            if (!M.comp.source().contains(mkey)) continue;
            Element t = S.mult(S.apply_fn([](const Element& x) { return x.first(); }, u));
            Element value = Element::pair(t, M.comp(mkey));
            if (!arrow_set.contains(value)) continue;
            keys.push_back(Element::pair(u, e));
            entries.emplace_back(keys.back(), value);
            if (entries.size() > cap)
                throw GuardError("transport_by_pullback: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(keys), arrow_set, entries);
    return make_multicat(phi.source, M.objects, arrow_set, dom, cod, ids, comp);
}

StructuredCategory free_structured(const Multicategory& M, int size_bound, std::size_t cap) {
    PluginRef T = M.monad;
    FiniteSet objects(T->enumerate_telements(M.objects, size_bound, cap));

    auto src_of = [&](const Element& alpha) {
        return T->mult(T->apply_fn([&](const Element& a) { return M.dom(a); }, alpha));
    };
    std::vector<Element> kept;
    for (const Element& alpha : T->enumerate_telements(M.arrows, size_bound, cap))
        if (objects.contains(src_of(alpha))) kept.push_back(alpha);
    FiniteSet arrows(kept);

    FiniteMap src = FiniteMap::from_function(arrows, objects, src_of);
    FiniteMap tgt = FiniteMap::from_function(
        arrows, objects, [&](const Element& alpha) { return T->apply_map(M.cod, alpha); });
    FiniteMap ids = FiniteMap::from_function(objects, arrows, [&](const Element& t) {
        Element e = T->apply_map(M.ids, t);
        require(arrows.contains(e), "free_structured: identity term out of bounds");
        return e;
    });

    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    for (const Element& beta : arrows) {
        for (const Element& alpha : arrows) {
            if (tgt(alpha) != src(beta)) continue;
            std::vector<Element> bs = T->labels(beta);
            std::vector<Element> xs = T->labels(alpha);
            std::vector<Element> cs;
            cs.reserve(bs.size());
            std::size_t off = 0;
            bool defined = true;
            for (const Element& b : bs) {
                Element bdom = M.dom(b);
                std::size_t k = T->labels(bdom).size();
                require(off + k <= xs.size(), "free_structured: input blocks misaligned");
                std::vector<Element> block(xs.begin() + static_cast<std::ptrdiff_t>(off),
                                           xs.begin() + static_cast<std::ptrdiff_t>(off + k));
                off += k;
                Element key = Element::pair(T->relabel(bdom, block), b);
                if (!M.comp.source().contains(key)) {
                    defined = false;
                    break;
                }
                cs.push_back(M.comp(key));
            }
            if (!defined) continue;
            require(off == xs.size(), "free_structured: input blocks misaligned");
            Element value = T->relabel(beta, cs);
            require(arrows.contains(value), "free_structured: composite left the carrier");
            keys.push_back(Element::pair(beta, alpha));
            entries.emplace_back(keys.back(), value);
            if (entries.size() > cap)
                throw GuardError("free_structured: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(keys), arrows, entries);

    auto flatten_into = [T](FiniteSet carrier) {
        return [T, carrier](const Element& tt) -> std::optional<Element> {
            Element flat = T->mult(tt);
            if (!carrier.contains(flat)) return std::nullopt;
            return flat;
        };
    };
    return StructuredCategory{T,   objects, arrows, src, tgt, ids, comp,
                              flatten_into(objects), flatten_into(arrows)};
}

StructuredCategory category_as_structured(const CategoryData& C) {
    auto keep = [](FiniteSet carrier) {
        return [carrier](const Element& t) -> std::optional<Element> {
            if (!carrier.contains(t)) return std::nullopt;
            return t;
        };
    };
    return StructuredCategory{identity_monad(), C.objects, C.arrows, C.src, C.tgt,
                              C.ids,            C.comp,    keep(C.objects), keep(C.arrows)};
}

LawReport check_structured(const StructuredCategory& B, int tensor_bound, std::size_t cap) {
    LawReport rep;
    const MonadPlugin& T = *B.monad;

    for (const Element& t : B.objects) {
        const Element& e = B.ids(t);
        if (B.src(e) != t || B.tgt(e) != t) rep.fail("identity legs: " + t.str());
    }
    for (const Element& k : B.comp.source()) {
        const Element& g = k.first();
        const Element& f = k.second();
        if (B.src(g) != B.tgt(f)) rep.fail("composable: " + k.str());
        const Element& gf = B.comp(k);
        if (B.src(gf) != B.src(f) || B.tgt(gf) != B.tgt(g))
            rep.fail("composite legs: " + k.str());
    }
    for (const Element& f : B.arrows) {
        Element left = Element::pair(B.ids(B.tgt(f)), f);
        Element right = Element::pair(f, B.ids(B.src(f)));
        if (!B.comp.source().contains(left) || B.comp(left) != f)
            rep.fail("left unit: " + f.str());
        if (!B.comp.source().contains(right) || B.comp(right) != f)
            rep.fail("right unit: " + f.str());
    }
    for (const Element& k : B.comp.source()) {
        const Element& g = k.first();
        const Element& f = k.second();
        for (const Element& h : B.arrows) {
            if (B.src(h) != B.tgt(g)) continue;
            Element hg = Element::pair(h, g);
            if (!B.comp.source().contains(hg)) continue;
            Element outer_left = Element::pair(B.comp(hg), f);
            Element outer_right = Element::pair(h, B.comp(k));
            if (!B.comp.source().contains(outer_left) ||
                !B.comp.source().contains(outer_right))
                continue;
            if (B.comp(outer_left) != B.comp(outer_right))
                rep.fail("associativity: " + h.str() + " after " + k.str());
        }
    }

    for (const Element& t : B.objects) {
        auto flat = B.obj_tensor(T.unit(t));
        if (!flat || *flat != t) rep.fail("tensor unit: " + t.str());
    }
    std::vector<std::pair<Element, int>> obj_alpha;
    for (const Element& t : B.objects) obj_alpha.emplace_back(t, 1);
    std::vector<Element> level1 = bounded_nested(T, obj_alpha, tensor_bound, tensor_bound, cap);
    std::vector<std::pair<Element, int>> term_alpha;
    for (const Element& u : level1) term_alpha.emplace_back(u, std::max(1, T.size(u)));
    for (const Element& tt :
         bounded_nested(T, term_alpha, tensor_bound, 2 * tensor_bound, cap)) {
        std::vector<Element> parts;
        bool defined = true;
        for (const Element& u : T.labels(tt)) {
            auto p = B.obj_tensor(u);
            if (!p) {
                defined = false;
                break;
            }
            parts.push_back(*p);
        }
        if (!defined) continue;
        auto inner = B.obj_tensor(T.mult(tt));
        auto outer = B.obj_tensor(T.relabel(tt, parts));
        if (inner && outer && *inner != *outer) rep.fail("tensor flatten: " + tt.str());
    }

    for (const Element& w : T.enumerate_telements(B.arrows, tensor_bound, cap)) {
        auto flat = B.arr_tensor(w);
        if (!flat) continue;
        auto s = B.obj_tensor(T.apply_map(B.src, w));
        auto t = B.obj_tensor(T.apply_map(B.tgt, w));
        if (!s || B.src(*flat) != *s) rep.fail("tensor source: " + w.str());
        if (!t || B.tgt(*flat) != *t) rep.fail("tensor target: " + w.str());
    }
    for (const Element& w : T.enumerate_telements(B.objects, tensor_bound, cap)) {
        auto flat = B.obj_tensor(w);
        if (!flat) continue;
        auto lifted = B.arr_tensor(T.apply_map(B.ids, w));
        if (!lifted || *lifted != B.ids(*flat)) rep.fail("tensor identity: " + w.str());
    }
    for (const Element& w : T.enumerate_telements(B.comp.source(), tensor_bound, cap)) {
        auto g = B.arr_tensor(T.apply_fn([](const Element& k) { return k.first(); }, w));
        auto f = B.arr_tensor(T.apply_fn([](const Element& k) { return k.second(); }, w));
        auto gf = B.arr_tensor(T.apply_map(B.comp, w));
        if (!g || !f || !gf) continue;
        Element key = Element::pair(*g, *f);
        if (!B.comp.source().contains(key)) continue;
        if (B.comp(key) != *gf) rep.fail("tensor composition: " + w.str());
    }
    return rep;
}

Multicategory underlying_multicat(const StructuredCategory& B, int size_bound,
                                  std::size_t cap) {
    const MonadPlugin& T = *B.monad;
    std::vector<Element> tuples;
    for (const Element& u : T.enumerate_telements(B.objects, size_bound, cap))
        if (B.obj_tensor(u)) tuples.push_back(u);

    std::vector<Element> arrows;
    for (const Element& u : tuples) {
        Element src = *B.obj_tensor(u);
        for (const Element& f : B.arrows)
            if (B.src(f) == src) {
                arrows.push_back(Element::pair(u, f));
                if (arrows.size() > cap)
                    throw GuardError("underlying_multicat: arrow count exceeds cap");
            }
    }
    FiniteSet arrow_set(arrows);

    ElemTable dom = ElemTable::from_function(
        arrow_set, [](const Element& e) { return e.first(); });
    FiniteMap cod = FiniteMap::from_function(
        arrow_set, B.objects, [&](const Element& e) { return B.tgt(e.second()); });
    FiniteMap ids = FiniteMap::from_function(B.objects, arrow_set, [&](const Element& c) {
        Element e = Element::pair(T.unit(c), B.ids(c));
        require(arrow_set.contains(e), "underlying_multicat: identity out of bounds");
        return e;
    });

    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    for (const Element& e : arrow_set) {
        for (const Element& w : T.enumerate_fiber(cod, e.first(), cap)) {
            Element u_new = T.mult(
                T.apply_fn([](const Element& x) { return x.first(); }, w));
            auto tensored = B.arr_tensor(
                T.apply_fn([](const Element& x) { return x.second(); }, w));
            if (!tensored) continue;
            Element key = Element::pair(e.second(), *tensored);
            if (!B.comp.source().contains(key)) continue;
            Element value = Element::pair(u_new, B.comp(key));
            if (!arrow_set.contains(value)) continue;
            keys.push_back(Element::pair(w, e));
            entries.emplace_back(keys.back(), value);
            if (entries.size() > cap)
                throw GuardError("underlying_multicat: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(keys), arrow_set, entries);
    return make_multicat(B.monad, B.objects, arrow_set, dom, cod, ids, comp);
}

Multicategory operad_from_regular_theory(const NatTrans& phi, int size_bound,
                                         std::size_t cap) {
    require(phi.target->name() == "free_monoid",
            "operad_from_regular_theory: phi must land in the sequence plugin");
    const MonadPlugin& S = *phi.source;
    FiniteSet objects = FiniteSet::terminal();
    FiniteSet arrows(S.enumerate_telements(objects, size_bound, cap));
    for (const Element& a : arrows)
        require(S.labels(a).size() == phi.translate(a).items().size(),
                "operad_from_regular_theory: translation must keep positions: " + a.str());

    ElemTable dom = ElemTable::from_function(
        arrows, [&](const Element& a) { return phi.translate(a); });
    FiniteMap cod = FiniteMap::constant(arrows, objects, *objects.begin());
    FiniteMap ids = FiniteMap::from_function(objects, arrows, [&](const Element& x) {
        Element e = S.unit(x);
        require(arrows.contains(e), "operad_from_regular_theory: unit out of bounds");
        return e;
    });

    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    FiniteMap arrow_cod = cod;
    for (const Element& a : arrows) {
        for (const Element& u : free_monoid_monad()->enumerate_fiber(arrow_cod, dom(a),
                                                                     cap)) {
            Element value = S.mult(S.relabel(a, u.items()));
            if (!arrows.contains(value)) continue;
            keys.push_back(Element::pair(u, a));
            entries.emplace_back(keys.back(), value);
            if (entries.size() > cap)
                throw GuardError("operad_from_regular_theory: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(keys), arrows, entries);
    return make_multicat(free_monoid_monad(), objects, arrows, dom, cod, ids, comp);
}

MonadDataPackage monad_data(const Multicategory& M) {
    Multicategory copy = M;
    return MonadDataPackage{
        M.monad,
        M.objects,
        [copy](const FiniteSet& X, const FiniteMap& p, std::size_t c) {
            return blob_set(copy, X, p, c);
        },
        [copy](const FiniteSet& X, const FiniteMap& p) {
            FiniteSet blob = blob_set(copy, X, p);
            return FiniteMap::from_function(blob, copy.objects, [copy](const Element& e) {
                return copy.cod(e.second());
            });
        },
        [copy](const FiniteMap& p, const Element& x) { return blob_unit(copy, p, x); },
        [copy](const Element& wa) { return blob_mult(copy, wa); },
        [](const Element& e) { return e.first(); }};
}

Multicategory recover_multicat(const MonadDataPackage& pkg, std::size_t cap) {
    const FiniteSet& S = pkg.base;
    FiniteMap idS = FiniteMap::identity(S);
    FiniteSet blob = pkg.act(S, idS, cap);
    FiniteMap proj = pkg.proj(S, idS);

    std::vector<Element> arrow_list;
    std::map<Element, Element> by_arrow;  // arrow -> its blob element
    for (const Element& e : blob) {
        Element a = e.second();
        require(by_arrow.emplace(a, e).second,
                "recover_multicat: arrow carries two shapes: " + a.str());
        arrow_list.push_back(a);
    }
    FiniteSet arrows(arrow_list);

    ElemTable dom(arrows, [&] {
        std::vector<std::pair<Element, Element>> entries;
        for (const auto& [a, e] : by_arrow) entries.emplace_back(a, pkg.shape(e));
        return entries;
    }());
    FiniteMap cod = FiniteMap::from_function(
        arrows, S, [&](const Element& a) { return proj(by_arrow.at(a)); });
    FiniteMap ids = FiniteMap::from_function(
        S, arrows, [&](const Element& x) { return pkg.unit(idS, x).second(); });

    const MonadPlugin& T = *pkg.monad;
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    for (const Element& a : arrows) {
        for (const Element& u : T.enumerate_fiber(cod, dom(a), cap)) {
            Element lifted = T.apply_fn(
                [&](const Element& b) { return by_arrow.at(b); }, u);
            auto flat = pkg.flatten(Element::pair(lifted, a));
            if (!flat) continue;
            keys.push_back(Element::pair(u, a));
            entries.emplace_back(keys.back(), flat->second());
            if (entries.size() > cap)
                throw GuardError("recover_multicat: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(keys), arrows, entries);
    return make_multicat(pkg.monad, S, arrows, dom, cod, ids, comp);
}

} // namespace tmcat
