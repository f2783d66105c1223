#include "tmcat/free.hpp"

#include "tmcat/error.hpp"

#include <functional>
#include <map>

namespace tmcat {

namespace {

const std::string kIdentTag = "id";

bool is_ident(const Element& a) { return a.is_tag() && a.name() == kIdentTag; }
bool is_node(const Element& a) { return a.is_tree() && a.child_count() == 1; }

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

} // namespace

Signature make_signature(PluginRef monad, FiniteSet objects, FiniteSet gens, ElemTable dom,
                         FiniteMap cod) {
    require(monad != nullptr, "make_signature: missing monad plugin");
    require(dom.source() == gens, "make_signature: dom must be defined on the generators");
    require(cod.source() == gens && cod.target() == objects,
            "make_signature: cod must map generators to objects");
    for (const Element& g : gens)
        require(monad->well_formed(dom(g), objects),
                "make_signature: dom(" + g.str() + ") = " + dom(g).str() +
                    " is not a term over the objects");
    return Signature{std::move(monad), std::move(objects), std::move(gens), std::move(dom),
                     std::move(cod)};
}

Element free_ident(const Element& x) { return Element::tag(kIdentTag, x); }

Element free_gen(const Signature& sig, const Element& g) {
    Element w = sig.monad->apply_fn([](const Element& x) { return free_ident(x); }, sig.dom(g));
    return Element::tree(g, {w});
}

bool free_well_formed(const Signature& sig, const Element& a) {
    if (is_ident(a)) return sig.objects.contains(a.inner());
    if (!is_node(a) || !sig.gens.contains(a.label())) return false;
    const Element& w = a.child(0);
    try {
        for (const Element& f : sig.monad->labels(w))
            if (!free_well_formed(sig, f)) return false;
        Element over = sig.monad->apply_fn(
            [&](const Element& f) { return free_cod(sig, f); }, w);
        return over == sig.dom(a.label());
    } catch (const Error&) {
        return false;
    }
}

Element free_cod(const Signature& sig, const Element& a) {
    if (is_ident(a)) return a.inner();
    require(is_node(a), "free_cod: not a free arrow: " + a.str());
    return sig.cod(a.label());
}

Element free_dom(const Signature& sig, const Element& a) {
    if (is_ident(a)) return sig.monad->unit(a.inner());
    require(is_node(a), "free_dom: not a free arrow: " + a.str());
    return sig.monad->mult(
        sig.monad->apply_fn([&](const Element& f) { return free_dom(sig, f); }, a.child(0)));
}

int free_nodes(const Signature& sig, const Element& a) {
    if (is_ident(a)) return 0;
    require(is_node(a), "free_nodes: not a free arrow: " + a.str());
    int n = 1;
    for (const Element& f : sig.monad->labels(a.child(0))) n += free_nodes(sig, f);
    return n;
}

Element graft(const Signature& sig, const Element& u, const Element& a) {
    const MonadPlugin& T = *sig.monad;
    std::vector<Element> xs = T.labels(u);
    if (is_ident(a)) {
        require(xs.size() == 1, "graft: a term over an identity must hold one arrow, got " +
                                    u.str());
        return xs[0];
    }
    require(is_node(a), "graft: not a free arrow: " + a.str());
    const Element& w = a.child(0);
    std::vector<Element> fs = T.labels(w);
    std::vector<Element> grafted;
    grafted.reserve(fs.size());
    std::size_t off = 0;
    for (const Element& f : fs) {
        Element fdom = free_dom(sig, f);
        std::size_t k = T.labels(fdom).size();
        require(off + k <= xs.size(), "graft: position mismatch under " + a.str());
        std::vector<Element> block(xs.begin() + static_cast<std::ptrdiff_t>(off),
                                   xs.begin() + static_cast<std::ptrdiff_t>(off + k));
        off += k;
        grafted.push_back(graft(sig, T.relabel(fdom, block), f));
    }
    require(off == xs.size(), "graft: position mismatch under " + a.str());
    return Element::tree(a.label(), {T.relabel(w, grafted)});
}

std::vector<Element> free_enumerate(const Signature& sig, int max_nodes, std::size_t cap) {
    const MonadPlugin& T = *sig.monad;
    std::vector<Element> pool;
    for (const Element& x : sig.objects) pool.push_back(free_ident(x));
    bool grew = true;
    while (grew) {
        grew = false;
        FiniteSet pool_set(pool);
        FiniteMap codmap = FiniteMap::from_function(
            pool_set, sig.objects, [&](const Element& f) { return free_cod(sig, f); });
        for (const Element& g : sig.gens) {
            for (const Element& w : T.enumerate_fiber(codmap, sig.dom(g), cap)) {
                Element cand = Element::tree(g, {w});
                if (free_nodes(sig, cand) > max_nodes || pool_set.contains(cand)) continue;
                pool.push_back(cand);
                if (pool.size() > cap)
                    throw GuardError("free_enumerate: more than " + std::to_string(cap) +
                                     " arrows");
                grew = true;
            }
        }
    }
    return FiniteSet(pool).elems();
}

Multicategory free_multicat(const Signature& sig, int max_nodes, std::size_t cap) {
    const MonadPlugin& T = *sig.monad;
    FiniteSet arrows(free_enumerate(sig, max_nodes, cap));
    ElemTable dom = ElemTable::from_function(
        arrows, [&](const Element& a) { return free_dom(sig, a); });
    FiniteMap cod = FiniteMap::from_function(
        arrows, sig.objects, [&](const Element& a) { return free_cod(sig, a); });
    FiniteMap ids = FiniteMap::from_function(
        sig.objects, arrows, [](const Element& x) { return free_ident(x); });

    std::vector<std::pair<Element, Element>> centries;
    std::vector<Element> ckeys;
    for (const Element& a : arrows) {
        for (const Element& u : T.enumerate_fiber(cod, dom(a), cap)) {
            Element composite = graft(sig, u, a);
            if (free_nodes(sig, composite) > max_nodes) continue;
            require(arrows.contains(composite),
                    "free_multicat: graft produced an unknown arrow " + composite.str());
            ckeys.push_back(Element::pair(u, a));
            centries.emplace_back(ckeys.back(), composite);
            if (centries.size() > cap)
                throw GuardError("free_multicat: composite count exceeds cap");
        }
    }
    FiniteMap comp(FiniteSet(ckeys), arrows, centries);
    return make_multicat(sig.monad, sig.objects, arrows, dom, cod, ids, comp);
}

FiniteMap universal_extension(const Signature& sig, const Multicategory& F,
                              const Multicategory& N, const FiniteMap& fo,
                              const FiniteMap& fg) {
    require(N.monad->name() == sig.monad->name(),
            "universal_extension: the target runs on a different plugin");
    require(fo.source() == sig.objects && fo.target() == N.objects,
            "universal_extension: fo must map the objects into the target objects");
    require(fg.source() == sig.gens && fg.target() == N.arrows,
            "universal_extension: fg must map the generators into the target arrows");
    for (const Element& g : sig.gens) {
        require(N.dom(fg(g)) == sig.monad->apply_map(fo, sig.dom(g)),
                "universal_extension: dom mismatch at generator " + g.str());
        require(N.cod(fg(g)) == fo(sig.cod(g)),
                "universal_extension: cod mismatch at generator " + g.str());
    }

    std::map<Element, Element> memo;
    std::function<Element(const Element&)> ext = [&](const Element& a) -> Element {
        auto it = memo.find(a);
        if (it != memo.end()) return it->second;
        Element value = Element::atom("");
        if (is_ident(a)) {
            value = N.ids(fo(a.inner()));
        } else {
            require(is_node(a), "universal_extension: not a free arrow: " + a.str());
            Element w = sig.monad->apply_fn(ext, a.child(0));
            Element key = Element::pair(w, fg(a.label()));
            require(N.comp.source().contains(key),
                    "universal_extension: the target truncates the composite for " + a.str());
            value = N.comp(key);
        }
        memo.emplace(a, value);
        return value;
    };
    return FiniteMap::from_function(F.arrows, N.arrows, ext);
}

} // namespace tmcat
