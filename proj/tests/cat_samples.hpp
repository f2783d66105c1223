#ifndef TMCAT_TESTS_CAT_SAMPLES_HPP
#define TMCAT_TESTS_CAT_SAMPLES_HPP

#include "tmcat/multicat.hpp"

#include <random>
#include <string>
#include <vector>

namespace tmcat_tests {

// category of a preorder: arrows are the related pairs, composition is forced
inline tmcat::CategoryData preorder_category(const std::vector<std::vector<int>>& le,
                                             const std::string& tag) {
    using namespace tmcat;
    std::size_t n = le.size();
    FiniteSet objects = FiniteSet::named(n, tag);
    std::vector<Element> arrows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (le[i][j]) arrows.push_back(Element::pair(objects.at(i), objects.at(j)));
    FiniteSet A(arrows);
    FiniteMap src = FiniteMap::from_function(A, objects,
                                             [](const Element& a) { return a.first(); });
    FiniteMap tgt = FiniteMap::from_function(A, objects,
                                             [](const Element& a) { return a.second(); });
    FiniteMap ids = FiniteMap::from_function(objects, A,
                                             [](const Element& x) { return Element::pair(x, x); });
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& g : A)
        for (const auto& f : A)
            if (f.second() == g.first()) {
                Element k = Element::pair(g, f);
                keys.push_back(k);
                centries.emplace_back(k, Element::pair(f.first(), g.second()));
            }
    return CategoryData{objects, A, src, tgt, ids, FiniteMap(FiniteSet(keys), A, centries)};
}

inline tmcat::CategoryData random_preorder_category(std::mt19937& rng, int n,
                                                    const std::string& tag) {
    std::vector<std::vector<int>> le(n, std::vector<int>(n, 0));
    std::bernoulli_distribution coin(0.4);
    for (int i = 0; i < n; ++i) {
        le[i][i] = 1;
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng)) le[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = 1;
    return preorder_category(le, tag);
}

// one-object category from a monoid table
inline tmcat::CategoryData monoid_category(const tmcat::FiniteSet& m,
                                           const tmcat::FiniteMap& times,
                                           const tmcat::Element& unit) {
    using namespace tmcat;
    FiniteSet one = FiniteSet::terminal();
    Element star = one.at(0);
    FiniteMap src = FiniteMap::constant(m, one, star);
    FiniteMap ids(one, m, {{star, unit}});
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> centries;
    for (const auto& g : m)
        for (const auto& f : m) {
            Element k = Element::pair(g, f);
            keys.push_back(k);
            centries.emplace_back(k, times(Element::pair(g, f)));
        }
    return CategoryData{one, m, src, src, ids, FiniteMap(FiniteSet(keys), m, centries)};
}

inline tmcat::CategoryData random_monoid_category(std::mt19937& rng, const std::string& tag) {
    using namespace tmcat;
    int extra = std::uniform_int_distribution<int>(1, 2)(rng);
    std::vector<Element> elems = {Element::atom(tag + "e")};
    for (int i = 0; i < extra; ++i) elems.push_back(Element::atom(tag + std::to_string(i)));
    FiniteSet m(elems);
    Element unit = Element::atom(tag + "e");
    std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
    while (true) {
        std::vector<Element> keys;
        std::vector<std::pair<Element, Element>> entries;
        auto at = [&](const Element& a, const Element& b) {
            if (a == unit) return b;
            if (b == unit) return a;
            return m.at(pick(rng));
        };
        std::vector<std::vector<Element>> table(m.size(), std::vector<Element>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) {
                table[i][j] = at(m.at(i), m.at(j));
                Element k = Element::pair(m.at(i), m.at(j));
                keys.push_back(k);
                entries.emplace_back(k, table[i][j]);
            }
        bool assoc = true;
        auto prod = [&](const Element& a, const Element& b) {
            return table[m.index_of(a)][m.index_of(b)];
        };
        for (const auto& a : m)
            for (const auto& b : m)
                for (const auto& c : m)
                    if (!(prod(prod(a, b), c) == prod(a, prod(b, c)))) assoc = false;
        if (!assoc) continue;
        return monoid_category(m, FiniteMap(FiniteSet(keys), m, entries), unit);
    }
}

// independent category axioms, checked directly on the table
inline bool cat_laws_ok(const tmcat::CategoryData& C) {
    using namespace tmcat;
    const FiniteSet& keys = C.comp.source();
    for (const auto& x : C.objects) {
        Element i = C.ids(x);
        if (!(C.src(i) == x) || !(C.tgt(i) == x)) return false;
    }
    for (const auto& k : keys) {
        const Element& g = k.first();
        const Element& f = k.second();
        if (!(C.tgt(f) == C.src(g))) return false;
        Element c = C.comp(k);
        if (!(C.src(c) == C.src(f)) || !(C.tgt(c) == C.tgt(g))) return false;
    }
    for (const auto& f : C.arrows) {
        Element l = Element::pair(C.ids(C.tgt(f)), f);
        if (keys.contains(l) && !(C.comp(l) == f)) return false;
        Element r = Element::pair(f, C.ids(C.src(f)));
        if (keys.contains(r) && !(C.comp(r) == f)) return false;
    }
    for (const auto& h : C.arrows)
        for (const auto& g : C.arrows)
            for (const auto& f : C.arrows) {
                Element gf = Element::pair(g, f), hg = Element::pair(h, g);
                if (!keys.contains(gf) || !keys.contains(hg)) continue;
                Element outer1 = Element::pair(h, C.comp(gf));
                Element outer2 = Element::pair(C.comp(hg), f);
                if (!keys.contains(outer1) || !keys.contains(outer2)) continue;
                if (!(C.comp(outer1) == C.comp(outer2))) return false;
            }
    return true;
}

// swap one comp value or one identity for another arrow; false if impossible
inline bool mutate_category(std::mt19937& rng, tmcat::CategoryData& C) {
    using namespace tmcat;
    if (C.arrows.size() < 2) return false;
    std::uniform_int_distribution<std::size_t> parrow(0, C.arrows.size() - 1);
    if (std::bernoulli_distribution(0.7)(rng) && !C.comp.source().empty()) {
        std::uniform_int_distribution<std::size_t> pkey(0, C.comp.source().size() - 1);
        Element key = C.comp.source().at(pkey(rng));
        Element other = C.arrows.at(parrow(rng));
        if (other == C.comp(key)) other = C.arrows.at((C.arrows.index_of(other) + 1) % C.arrows.size());
        std::vector<std::pair<Element, Element>> entries;
        for (const auto& k : C.comp.source())
            entries.emplace_back(k, k == key ? other : C.comp(k));
        C.comp = FiniteMap(C.comp.source(), C.arrows, entries);
        return true;
    }
    std::uniform_int_distribution<std::size_t> pobj(0, C.objects.size() - 1);
    Element x = C.objects.at(pobj(rng));
    Element other = C.arrows.at(parrow(rng));
    if (other == C.ids(x)) other = C.arrows.at((C.arrows.index_of(other) + 1) % C.arrows.size());
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& y : C.objects) entries.emplace_back(y, y == x ? other : C.ids(y));
    C.ids = FiniteMap(C.objects, C.arrows, entries);
    return true;
}

} // namespace tmcat_tests

#endif
