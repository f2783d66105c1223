#include "tmcat/finset.hpp"

#include "tmcat/error.hpp"

#include <algorithm>
#include <sstream>

namespace tmcat {

FiniteSet::FiniteSet(std::vector<Element> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FiniteSet FiniteSet::of(std::initializer_list<Element> elems) {
    return FiniteSet(std::vector<Element>(elems));
}

FiniteSet FiniteSet::named(std::size_t n, const std::string& prefix) {
    std::vector<Element> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(Element::atom(prefix + std::to_string(i)));
    return FiniteSet(std::move(v));
}

FiniteSet FiniteSet::terminal() { return FiniteSet::of({Element::atom("*")}); }

bool FiniteSet::contains(const Element& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t FiniteSet::index_of(const Element& x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || !(*it == x)) throw Error("element " + x.str() + " not in set " + str());
    return static_cast<std::size_t>(it - elems_.begin());
}

std::string FiniteSet::str() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out << ",";
        out << elems_[i].str();
        if (i >= 7 && elems_.size() > 9) {
            out << ",...(" << elems_.size() << ")";
            break;
        }
    }
    out << "}";
    return out.str();
}

FiniteMap::FiniteMap(FiniteSet source, FiniteSet target,
                     const std::vector<std::pair<Element, Element>>& entries)
    : src_(std::move(source)), tgt_(std::move(target)) {
    std::vector<bool> seen(src_.size(), false);
    img_.resize(src_.size());
    for (const auto& [x, y] : entries) {
        std::size_t i = src_.index_of(x);
        if (seen[i]) throw Error("duplicate map entry for " + x.str());
        if (!tgt_.contains(y)) throw Error("image " + y.str() + " not in target " + tgt_.str());
        seen[i] = true;
        img_[i] = y;
    }
    for (std::size_t i = 0; i < src_.size(); ++i)
        if (!seen[i]) throw Error("map undefined at " + src_.at(i).str());
}

FiniteMap FiniteMap::from_function(FiniteSet source, FiniteSet target,
                                   const std::function<Element(const Element&)>& f) {
    FiniteMap m;
    m.src_ = std::move(source);
    m.tgt_ = std::move(target);
    m.img_.reserve(m.src_.size());
    for (const auto& x : m.src_) {
        Element y = f(x);
        if (!m.tgt_.contains(y))
            throw Error("image " + y.str() + " of " + x.str() + " not in target " + m.tgt_.str());
        m.img_.push_back(std::move(y));
    }
    return m;
}

FiniteMap FiniteMap::identity(FiniteSet s) {
    FiniteMap m;
    m.img_ = s.elems();
    m.src_ = s;
    m.tgt_ = std::move(s);
    return m;
}

FiniteMap FiniteMap::constant(FiniteSet source, FiniteSet target, Element value) {
    if (!target.contains(value)) throw Error("constant value not in target");
    FiniteMap m;
    m.src_ = std::move(source);
    m.tgt_ = std::move(target);
    m.img_.assign(m.src_.size(), value);
    return m;
}

FiniteMap FiniteMap::bang(FiniteSet source) {
    return constant(std::move(source), FiniteSet::terminal(), Element::atom("*"));
}

const Element& FiniteMap::operator()(const Element& x) const { return img_[src_.index_of(x)]; }

std::vector<Element> FiniteMap::fiber(const Element& y) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < src_.size(); ++i)
        if (img_[i] == y) out.push_back(src_.at(i));
    return out;
}

bool FiniteMap::is_injective() const {
    std::vector<Element> v = img_;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool FiniteMap::is_surjective() const {
    std::vector<Element> v = img_;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v.size() == tgt_.size();
}

FiniteMap FiniteMap::inverse() const {
    if (!is_bijective()) throw Error("inverse of a non-bijective map");
    std::vector<std::pair<Element, Element>> entries;
    entries.reserve(src_.size());
    for (std::size_t i = 0; i < src_.size(); ++i) entries.emplace_back(img_[i], src_.at(i));
    return FiniteMap(tgt_, src_, entries);
}

bool FiniteMap::operator==(const FiniteMap& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && img_ == o.img_;
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
    if (!(f.target() == g.source())) throw Error("compose: target/source mismatch");
    return FiniteMap::from_function(f.source(), g.target(),
                                    [&](const Element& x) { return g(f(x)); });
}

ElemTable::ElemTable(FiniteSet source, const std::vector<std::pair<Element, Element>>& entries)
    : src_(std::move(source)) {
    std::vector<bool> seen(src_.size(), false);
    val_.resize(src_.size());
    for (const auto& [x, y] : entries) {
        std::size_t i = src_.index_of(x);
        if (seen[i]) throw Error("duplicate table entry for " + x.str());
        seen[i] = true;
        val_[i] = y;
    }
    for (std::size_t i = 0; i < src_.size(); ++i)
        if (!seen[i]) throw Error("table undefined at " + src_.at(i).str());
}

ElemTable ElemTable::from_function(FiniteSet source,
                                   const std::function<Element(const Element&)>& f) {
    ElemTable t;
    t.src_ = std::move(source);
    t.val_.reserve(t.src_.size());
    for (const auto& x : t.src_) t.val_.push_back(f(x));
    return t;
}

const Element& ElemTable::operator()(const Element& x) const { return val_[src_.index_of(x)]; }

bool ElemTable::operator==(const ElemTable& o) const {
    return src_ == o.src_ && val_ == o.val_;
}

PullbackResult pullback(const FiniteMap& f, const FiniteMap& g) {
    if (!(f.target() == g.target())) throw Error("pullback: cospan targets differ");
    std::vector<Element> apex;
    for (const auto& x : f.source())
        for (const auto& y : g.source())
            if (f(x) == g(y)) apex.push_back(Element::pair(x, y));
    FiniteSet a(std::move(apex));
    PullbackResult r;
    r.p1 = FiniteMap::from_function(a, f.source(), [](const Element& w) { return w.first(); });
    r.p2 = FiniteMap::from_function(a, g.source(), [](const Element& w) { return w.second(); });
    r.apex = std::move(a);
    return r;
}

PullbackCheck is_pullback(const FiniteMap& p, const FiniteMap& q,
                          const FiniteMap& f, const FiniteMap& g) {
    if (!(p.source() == q.source())) throw Error("is_pullback: corner sources differ");
    if (!(p.target() == f.source()) || !(q.target() == g.source()) ||
        !(f.target() == g.target()))
        throw Error("is_pullback: square legs do not line up");
    for (const auto& w : p.source())
        if (!(f(p(w)) == g(q(w))))
            throw Error("is_pullback: square does not commute at " + w.str());

    PullbackCheck out;
    FiniteSet canon = pullback(f, g).apex;
    std::vector<Element> hit;
    hit.reserve(p.source().size());
    for (const auto& w : p.source()) hit.push_back(Element::pair(p(w), q(w)));
    std::sort(hit.begin(), hit.end());
    auto dup = std::adjacent_find(hit.begin(), hit.end());
    if (dup != hit.end()) {
        out.ok = false;
        out.detail = "two corner elements share the cone " + dup->str();
        return out;
    }
    for (const auto& c : canon) {
        if (!std::binary_search(hit.begin(), hit.end(), c)) {
            out.ok = false;
            out.detail = "no corner element over " + c.str();
            return out;
        }
    }
    // hit is now injective into canon and canon is covered; sizes must agree.
    out.ok = hit.size() == canon.size();
    if (!out.ok) out.detail = "corner has extra elements";
    return out;
}

FiniteMap pullback_factorize(const PullbackResult& pb, const FiniteMap& u1,
                             const FiniteMap& u2) {
    if (!(u1.source() == u2.source())) throw Error("pullback_factorize: cone sources differ");
    return FiniteMap::from_function(u1.source(), pb.apex, [&](const Element& v) {
        Element w = Element::pair(u1(v), u2(v));
        if (!pb.apex.contains(w))
            throw Error("pullback_factorize: cone does not factor at " + v.str());
        return w;
    });
}

} // namespace tmcat
