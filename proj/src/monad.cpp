#include "tmcat/monad.hpp"

#include "tmcat/error.hpp"

#include <algorithm>
#include <sstream>

namespace tmcat {

namespace {

const Element kStar = Element::atom("*");
const std::string kLeafTag = "lf";
const Element kNodeLabel = Element::atom("nd");

void sort_unique(std::vector<Element>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Element tree_leaf(Element x) { return Element::tag(kLeafTag, std::move(x)); }

Element tree_node(std::vector<Element> kids) {
    return Element::tree(kNodeLabel, std::move(kids));
}

bool is_tree_leaf(const Element& t) { return t.is_tag() && t.name() == kLeafTag; }

bool is_tree_node(const Element& t) { return t.is_tree() && t.label() == kNodeLabel; }

// ------------------------------------------------------------
// derived plugin operations
// ------------------------------------------------------------

Element MonadPlugin::apply_map(const FiniteMap& f, const Element& t) const {
    return apply_fn([&](const Element& x) { return f(x); }, t);
}

Element MonadPlugin::apply_fn(const std::function<Element(const Element&)>& f,
                              const Element& t) const {
    std::vector<Element> ls = labels(t);
    for (auto& l : ls) l = f(l);
    return relabel(t, ls);
}

Element MonadPlugin::strip(const Element& t) const {
    std::vector<Element> ls = labels(t);
    for (auto& l : ls) l = kStar;
    return relabel(t, ls);
}

std::vector<Element> MonadPlugin::enumerate_fiber(const FiniteMap& c, const Element& t,
                                                  std::size_t cap) const {
    std::vector<Element> ls = labels(t);
    std::vector<std::vector<Element>> fibers;
    fibers.reserve(ls.size());
    std::size_t total = 1;
    for (const auto& l : ls) {
        fibers.push_back(c.fiber(l));
        if (fibers.back().empty()) return {};
        total *= fibers.back().size();
        if (total > cap)
            throw GuardError("enumerate_fiber over " + t.str() + " exceeds cap");
    }
    std::vector<Element> out;
    out.reserve(total);
    std::vector<std::size_t> idx(ls.size(), 0);
    std::vector<Element> choice(ls.size());
    while (true) {
        for (std::size_t i = 0; i < ls.size(); ++i) choice[i] = fibers[i][idx[i]];
        out.push_back(relabel(t, choice));
        std::size_t i = ls.size();
        while (i > 0 && ++idx[i - 1] == fibers[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
    }
    sort_unique(out);
    return out;
}

std::vector<Element> MonadPlugin::enumerate_telements(const FiniteSet& X, int bound,
                                                      std::size_t cap) const {
    FiniteMap to1 = FiniteMap::bang(X);
    std::vector<Element> out;
    for (const auto& shape : shapes_up_to(bound)) {
        auto fib = enumerate_fiber(to1, shape, cap);
        out.insert(out.end(), fib.begin(), fib.end());
        if (out.size() > cap) throw GuardError("enumerate_telements exceeds cap");
    }
    sort_unique(out);
    return out;
}

// ------------------------------------------------------------
// identity monad
// ------------------------------------------------------------

namespace {

class IdentityMonad final : public MonadPlugin {
public:
    const std::string& name() const override {
        static const std::string n = "identity";
        return n;
    }
    bool well_formed(const Element& t, const FiniteSet& base) const override {
        return base.contains(t);
    }
    int size(const Element&) const override { return 1; }
    std::vector<Element> labels(const Element& t) const override { return {t}; }
    Element relabel(const Element& t, const std::vector<Element>& xs) const override {
        if (xs.size() != 1) throw Error("identity relabel arity for " + t.str());
        return xs[0];
    }
    Element unit(const Element& x) const override { return x; }
    Element mult(const Element& tt) const override { return tt; }
    std::vector<Element> shapes_up_to(int bound) const override {
        if (bound < 1) return {};
        return {kStar};
    }
};

// ------------------------------------------------------------
// free monoid monad
// ------------------------------------------------------------

class FreeMonoidMonad final : public MonadPlugin {
public:
    const std::string& name() const override {
        static const std::string n = "free_monoid";
        return n;
    }
    bool well_formed(const Element& t, const FiniteSet& base) const override {
        if (!t.is_seq()) return false;
        for (const auto& x : t.items())
            if (!base.contains(x)) return false;
        return true;
    }
    int size(const Element& t) const override {
        return static_cast<int>(t.items().size());
    }
    std::vector<Element> labels(const Element& t) const override { return t.items(); }
    Element relabel(const Element& t, const std::vector<Element>& xs) const override {
        if (xs.size() != t.items().size()) throw Error("sequence relabel arity");
        return Element::seq(xs);
    }
    Element unit(const Element& x) const override { return Element::seq({x}); }
    Element mult(const Element& tt) const override {
        std::vector<Element> out;
        for (const auto& inner : tt.items()) {
            if (!inner.is_seq()) throw Error("mult of non-nested sequence " + tt.str());
            out.insert(out.end(), inner.items().begin(), inner.items().end());
        }
        return Element::seq(std::move(out));
    }
    std::vector<Element> shapes_up_to(int bound) const override {
        std::vector<Element> out;
        for (int n = 0; n <= bound; ++n)
            out.push_back(Element::seq(std::vector<Element>(n, kStar)));
        std::sort(out.begin(), out.end());
        return out;
    }
};

// ------------------------------------------------------------
// exceptions monad X + E
// ------------------------------------------------------------

class ExceptionsMonad final : public MonadPlugin {
public:
    explicit ExceptionsMonad(FiniteSet exceptions) : exc_(std::move(exceptions)) {}
    const std::string& name() const override {
        static const std::string n = "exceptions";
        return n;
    }
    const FiniteSet& exceptions() const { return exc_; }
    bool well_formed(const Element& t, const FiniteSet& base) const override {
        if (!t.is_tag()) return false;
        if (t.name() == "val") return base.contains(t.inner());
        if (t.name() == "exc") return exc_.contains(t.inner());
        return false;
    }
    int size(const Element&) const override { return 1; }
    std::vector<Element> labels(const Element& t) const override {
        if (t.name() == "val") return {t.inner()};
        return {};
    }
    Element relabel(const Element& t, const std::vector<Element>& xs) const override {
        if (t.name() == "val") {
            if (xs.size() != 1) throw Error("val relabel arity");
            return Element::tag("val", xs[0]);
        }
        if (!xs.empty()) throw Error("exc relabel arity");
        return t;
    }
    Element unit(const Element& x) const override { return Element::tag("val", x); }
    Element mult(const Element& tt) const override {
        if (tt.name() == "val") return tt.inner();
        return tt;
    }
    std::vector<Element> shapes_up_to(int bound) const override {
        if (bound < 1) return {};
        std::vector<Element> out;
        out.push_back(Element::tag("val", kStar));
        for (const auto& e : exc_) out.push_back(Element::tag("exc", e));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    FiniteSet exc_;
};

// ------------------------------------------------------------
// writer monad M x X
// ------------------------------------------------------------

class WriterMonad final : public MonadPlugin {
public:
    WriterMonad(FiniteSet carrier, FiniteMap times, Element unit_elem)
        : m_(std::move(carrier)), times_(std::move(times)), e_(std::move(unit_elem)) {
        if (!m_.contains(e_)) throw Error("writer unit not in carrier");
        for (const auto& a : m_) {
            if (!(prod(e_, a) == a) || !(prod(a, e_) == a))
                throw Error("writer carrier unit law fails at " + a.str());
            for (const auto& b : m_)
                for (const auto& c : m_)
                    if (!(prod(prod(a, b), c) == prod(a, prod(b, c))))
                        throw Error("writer carrier not associative at " + a.str() + "," +
                                    b.str() + "," + c.str());
        }
    }
    const std::string& name() const override {
        static const std::string n = "writer";
        return n;
    }
    Element prod(const Element& a, const Element& b) const {
        return times_(Element::pair(a, b));
    }
    bool well_formed(const Element& t, const FiniteSet& base) const override {
        return t.is_pair() && m_.contains(t.first()) && base.contains(t.second());
    }
    int size(const Element&) const override { return 1; }
    std::vector<Element> labels(const Element& t) const override { return {t.second()}; }
    Element relabel(const Element& t, const std::vector<Element>& xs) const override {
        if (xs.size() != 1) throw Error("writer relabel arity");
        return Element::pair(t.first(), xs[0]);
    }
    Element unit(const Element& x) const override { return Element::pair(e_, x); }
    Element mult(const Element& tt) const override {
        const Element& inner = tt.second();
        if (!inner.is_pair()) throw Error("writer mult of non-nested " + tt.str());
        return Element::pair(prod(tt.first(), inner.first()), inner.second());
    }
    std::vector<Element> shapes_up_to(int bound) const override {
        if (bound < 1) return {};
        std::vector<Element> out;
        for (const auto& m : m_) out.push_back(Element::pair(m, kStar));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    FiniteSet m_;
    FiniteMap times_;
    Element e_;
};

// ------------------------------------------------------------
// tree monad (one n-ary operation per n, no equations)
// ------------------------------------------------------------

class TreeMonad final : public MonadPlugin {
public:
    const std::string& name() const override {
        static const std::string n = "tree";
        return n;
    }
    bool well_formed(const Element& t, const FiniteSet& base) const override {
        if (is_tree_leaf(t)) return base.contains(t.inner());
        if (is_tree_node(t)) {
            for (std::size_t i = 0; i < t.child_count(); ++i)
                if (!well_formed(t.child(i), base)) return false;
            return true;
        }
        return false;
    }
    int size(const Element& t) const override {
        if (is_tree_leaf(t)) return 1;
        int s = 1;
        for (std::size_t i = 0; i < t.child_count(); ++i) s += size(t.child(i));
        return s;
    }
    std::vector<Element> labels(const Element& t) const override {
        std::vector<Element> out;
        collect(t, out);
        return out;
    }
    Element relabel(const Element& t, const std::vector<Element>& xs) const override {
        std::size_t pos = 0;
        Element r = rebuild(t, xs, pos);
        if (pos != xs.size()) throw Error("tree relabel arity");
        return r;
    }
    Element unit(const Element& x) const override { return tree_leaf(x); }
    Element mult(const Element& tt) const override {
        if (is_tree_leaf(tt)) return tt.inner();
        std::vector<Element> kids;
        kids.reserve(tt.child_count());
        for (std::size_t i = 0; i < tt.child_count(); ++i) kids.push_back(mult(tt.child(i)));
        return tree_node(std::move(kids));
    }
    std::vector<Element> shapes_up_to(int bound) const override {
        std::vector<Element> out = shapes(bound);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static void collect(const Element& t, std::vector<Element>& out) {
        if (is_tree_leaf(t)) {
            out.push_back(t.inner());
            return;
        }
        if (!is_tree_node(t)) throw Error("not a tree term: " + t.str());
        for (std::size_t i = 0; i < t.child_count(); ++i) collect(t.child(i), out);
    }
    static Element rebuild(const Element& t, const std::vector<Element>& xs, std::size_t& pos) {
        if (is_tree_leaf(t)) {
            if (pos >= xs.size()) throw Error("tree relabel arity");
            return tree_leaf(xs[pos++]);
        }
        std::vector<Element> kids;
        kids.reserve(t.child_count());
        for (std::size_t i = 0; i < t.child_count(); ++i) kids.push_back(rebuild(t.child(i), xs, pos));
        return tree_node(std::move(kids));
    }
    // all shapes of size <= b over {*}
    static std::vector<Element> shapes(int b) {
        std::vector<Element> out;
        if (b >= 1) out.push_back(tree_leaf(kStar));
        for (int s = 1; s <= b; ++s)
            for (auto& kids : forests(s - 1)) out.push_back(tree_node(std::move(kids)));
        return out;
    }
    // all lists of shapes with total size exactly b
    static std::vector<std::vector<Element>> forests(int b) {
        std::vector<std::vector<Element>> out;
        if (b == 0) {
            out.push_back({});
            return out;
        }
        for (int first = 1; first <= b; ++first) {
            std::vector<Element> heads;
            for (auto& sh : shapes(first))
                if (size_of(sh) == first) heads.push_back(sh);
            for (const auto& h : heads)
                for (auto& rest : forests(b - first)) {
                    std::vector<Element> kids;
                    kids.reserve(rest.size() + 1);
                    kids.push_back(h);
                    kids.insert(kids.end(), rest.begin(), rest.end());
                    out.push_back(std::move(kids));
                }
        }
        return out;
    }
    static int size_of(const Element& t) {
        if (is_tree_leaf(t)) return 1;
        int s = 1;
        for (std::size_t i = 0; i < t.child_count(); ++i) s += size_of(t.child(i));
        return s;
    }
};

// ------------------------------------------------------------
// free commutative monoid (negative control, not cartesian)
// ------------------------------------------------------------

class FreeCommMonoidMonad final : public MonadPlugin {
public:
    const std::string& name() const override {
        static const std::string n = "free_commutative_monoid";
        return n;
    }
    bool well_formed(const Element& t, const FiniteSet& base) const override {
        if (!t.is_seq()) return false;
        const auto& xs = t.items();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!base.contains(xs[i])) return false;
            if (i + 1 < xs.size() && xs[i + 1] < xs[i]) return false;
        }
        return true;
    }
    int size(const Element& t) const override {
        return static_cast<int>(t.items().size());
    }
    std::vector<Element> labels(const Element& t) const override { return t.items(); }
    Element relabel(const Element& t, const std::vector<Element>& xs) const override {
        if (xs.size() != t.items().size()) throw Error("multiset relabel arity");
        std::vector<Element> v = xs;
        std::sort(v.begin(), v.end());
        return Element::seq(std::move(v));
    }
    Element unit(const Element& x) const override { return Element::seq({x}); }
    Element mult(const Element& tt) const override {
        std::vector<Element> out;
        for (const auto& inner : tt.items())
            out.insert(out.end(), inner.items().begin(), inner.items().end());
        std::sort(out.begin(), out.end());
        return Element::seq(std::move(out));
    }
    std::vector<Element> shapes_up_to(int bound) const override {
        std::vector<Element> out;
        for (int n = 0; n <= bound; ++n)
            out.push_back(Element::seq(std::vector<Element>(n, kStar)));
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

PluginRef identity_monad() { return std::make_shared<IdentityMonad>(); }
PluginRef free_monoid_monad() { return std::make_shared<FreeMonoidMonad>(); }
PluginRef exceptions_monad(FiniteSet exceptions) {
    return std::make_shared<ExceptionsMonad>(std::move(exceptions));
}
PluginRef writer_monad(FiniteSet carrier, const FiniteMap& times, Element unit_elem) {
    return std::make_shared<WriterMonad>(std::move(carrier), times, std::move(unit_elem));
}
PluginRef writer_z2() {
    Element z = Element::atom("0"), o = Element::atom("1");
    FiniteSet m = FiniteSet::of({z, o});
    std::vector<Element> keys;
    std::vector<std::pair<Element, Element>> entries;
    for (const auto& a : m)
        for (const auto& b : m) {
            Element k = Element::pair(a, b);
            keys.push_back(k);
            entries.emplace_back(k, a == b ? z : o);
        }
    FiniteMap times(FiniteSet(std::move(keys)), m, entries);
    return writer_monad(m, times, z);
}
PluginRef tree_monad() { return std::make_shared<TreeMonad>(); }
PluginRef free_comm_monoid_monad() { return std::make_shared<FreeCommMonoidMonad>(); }

// ------------------------------------------------------------
// nested enumeration
// ------------------------------------------------------------

std::vector<Element> bounded_nested(const MonadPlugin& T,
                                    const std::vector<std::pair<Element, int>>& alphabet,
                                    int shape_bound, int cost_bound, std::size_t cap) {
    std::vector<Element> out;
    for (const auto& shape : T.shapes_up_to(shape_bound)) {
        std::size_t k = T.labels(shape).size();
        std::vector<Element> choice(k);
        // DFS over alphabet assignments with total cost <= cost_bound
        std::function<void(std::size_t, int)> go = [&](std::size_t i, int budget) {
            if (i == k) {
                out.push_back(T.relabel(shape, choice));
                if (out.size() > cap) throw GuardError("bounded_nested exceeds cap");
                return;
            }
            for (const auto& [term, cost] : alphabet) {
                if (cost > budget) continue;
                choice[i] = term;
                go(i + 1, budget - cost);
            }
        };
        go(0, cost_bound);
    }
    sort_unique(out);
    return out;
}

// ------------------------------------------------------------
// monad law checking
// ------------------------------------------------------------

namespace {

std::vector<std::pair<Element, int>> with_sizes(const MonadPlugin& T,
                                                const std::vector<Element>& ts) {
    std::vector<std::pair<Element, int>> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back({t, std::max(1, T.size(t))});
    return out;
}

// cost of a nested element at the next level up: the size of its
// flattening, so deep middle shapes are charged for, not just labels
int nested_cost(const MonadPlugin& T, const Element& tt) {
    return std::max(1, T.size(T.mult(tt)));
}

// all maps from X into sets of size 1..3
std::vector<FiniteMap> map_battery(const FiniteSet& X) {
    std::vector<FiniteMap> out;
    for (std::size_t n = 1; n <= 3; ++n) {
        FiniteSet Y = FiniteSet::named(n, "y");
        std::vector<std::size_t> idx(X.size(), 0);
        while (true) {
            std::vector<std::pair<Element, Element>> entries;
            for (std::size_t i = 0; i < X.size(); ++i)
                entries.emplace_back(X.at(i), Y.at(idx[i]));
            out.emplace_back(X, Y, entries);
            std::size_t i = X.size();
            while (i > 0 && ++idx[i - 1] == n) idx[--i] = 0;
            if (i == 0 || X.empty()) break;
        }
    }
    return out;
}

} // namespace

LawReport check_monad_laws(const MonadPlugin& T, const FiniteSet& X, int size_bound,
                           std::size_t cap) {
    LawReport rep;
    auto tx = T.enumerate_telements(X, size_bound, cap);

    for (const auto& t : tx) {
        Element lhs = T.mult(T.apply_fn([&](const Element& x) { return T.unit(x); }, t));
        if (!(lhs == t)) rep.fail("mu o T(eta) != id at " + t.str());
        Element rhs = T.mult(T.unit(t));
        if (!(rhs == t)) rep.fail("mu o eta_T != id at " + t.str());
    }

    auto ttx = bounded_nested(T, with_sizes(T, tx), size_bound, size_bound, cap);
    std::vector<std::pair<Element, int>> tt_alpha;
    tt_alpha.reserve(ttx.size());
    for (const auto& tt : ttx) tt_alpha.push_back({tt, nested_cost(T, tt)});
    auto tttx = bounded_nested(T, tt_alpha, size_bound, size_bound, cap);
    for (const auto& ttt : tttx) {
        Element via_outer = T.mult(T.mult(ttt));
        Element via_inner = T.mult(T.apply_fn([&](const Element& l) { return T.mult(l); }, ttt));
        if (!(via_outer == via_inner)) {
            rep.fail("mu o mu_T != mu o T(mu) at " + ttt.str());
            break;
        }
    }

    for (const auto& f : map_battery(X)) {
        for (const auto& x : X)
            if (!(T.apply_map(f, T.unit(x)) == T.unit(f(x))))
                rep.fail("eta not natural at " + x.str());
        for (const auto& tt : ttx) {
            Element lhs = T.apply_map(f, T.mult(tt));
            Element rhs = T.mult(T.apply_fn(
                [&](const Element& l) { return T.apply_map(f, l); }, tt));
            if (!(lhs == rhs)) {
                rep.fail("mu not natural at " + tt.str());
                break;
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------
// cartesianness
// ------------------------------------------------------------

namespace {

// The eta square at Z -> 1: bounded fiber of T(!) over eta(*) must be
// exactly the eta-image of Z.
void check_unit_square(const MonadPlugin& T, const FiniteSet& Z, CartesianReport& rep) {
    Element shape = T.unit(Element::atom("*"));
    auto fib = T.enumerate_fiber(FiniteMap::bang(Z), shape);
    std::vector<Element> units;
    units.reserve(Z.size());
    for (const auto& z : Z) units.push_back(T.unit(z));
    std::sort(units.begin(), units.end());
    if (fib != units) {
        rep.unit_square_ok = false;
        for (const auto& w : fib)
            if (!std::binary_search(units.begin(), units.end(), w)) {
                rep.witnesses.push_back("eta square at " + Z.str() + " -> 1: " + w.str() +
                                        " over eta(*) is not a unit");
                return;
            }
        rep.witnesses.push_back("eta square at " + Z.str() + " -> 1: some eta image missing");
    }
}

// The mu square at Z -> 1: for every bounded s in TT(1), mu restricted to
// the fiber of TT(!) over s must biject onto the fiber of T(!) over mu(s).
void check_mult_square(const MonadPlugin& T, const FiniteSet& Z, int bound, std::size_t cap,
                       CartesianReport& rep) {
    FiniteSet one = FiniteSet::terminal();
    FiniteMap bang = FiniteMap::bang(Z);
    auto t1 = T.enumerate_telements(one, bound, cap);
    auto tt1 = bounded_nested(T, with_sizes(T, t1), bound, bound, cap);
    for (const auto& s : tt1) {
        // fiber of TT(!) over s: relabel s's positions with T(!)-fibers
        std::vector<Element> slabels = T.labels(s);
        std::vector<std::vector<Element>> options;
        options.reserve(slabels.size());
        std::size_t total = 1;
        for (const auto& sl : slabels) {
            options.push_back(T.enumerate_fiber(bang, sl, cap));
            total *= options.back().size();
            if (total > cap) throw GuardError("mu square fiber exceeds cap");
        }
        std::vector<Element> us;
        if (total > 0) {
            std::vector<std::size_t> idx(slabels.size(), 0);
            std::vector<Element> choice(slabels.size());
            while (true) {
                for (std::size_t i = 0; i < slabels.size(); ++i) choice[i] = options[i][idx[i]];
                us.push_back(T.relabel(s, choice));
                std::size_t i = slabels.size();
                while (i > 0 && ++idx[i - 1] == options[i - 1].size()) idx[--i] = 0;
                if (i == 0) break;
            }
        }
        // relabel may canonicalize, so distinct choices can coincide
        sort_unique(us);
        std::vector<Element> images;
        images.reserve(us.size());
        for (const auto& u : us) images.push_back(T.mult(u));
        std::sort(images.begin(), images.end());
        auto dup = std::adjacent_find(images.begin(), images.end());
        if (dup != images.end()) {
            rep.mult_square_ok = false;
            rep.witnesses.push_back("mu square at " + Z.str() + " -> 1 is not a pullback: two "
                                    "preimages over (" + dup->str() + ", " + s.str() + ")");
            return;
        }
        auto expected = T.enumerate_fiber(bang, T.mult(s), cap);
        if (images != expected) {
            rep.mult_square_ok = false;
            rep.witnesses.push_back("mu square at " + Z.str() +
                                    " -> 1 is not a pullback over shape " + s.str());
            return;
        }
    }
}

void check_preservation(const MonadPlugin& T, int bound, std::size_t cap, CartesianReport& rep) {
    struct Cospan {
        FiniteSet X, Y, Z;
    };
    std::vector<Cospan> bases = {
        {FiniteSet::named(2, "a"), FiniteSet::named(2, "b"), FiniteSet::named(1, "c")},
        {FiniteSet::named(2, "a"), FiniteSet::named(3, "b"), FiniteSet::named(2, "c")},
        {FiniteSet::named(1, "a"), FiniteSet::named(2, "b"), FiniteSet::named(2, "c")},
    };
    auto all_maps = [](const FiniteSet& s, const FiniteSet& t) {
        std::vector<FiniteMap> out;
        std::vector<std::size_t> idx(s.size(), 0);
        while (true) {
            std::vector<std::pair<Element, Element>> entries;
            for (std::size_t i = 0; i < s.size(); ++i) entries.emplace_back(s.at(i), t.at(idx[i]));
            out.emplace_back(s, t, entries);
            std::size_t i = s.size();
            while (i > 0 && ++idx[i - 1] == t.size()) idx[--i] = 0;
            if (i == 0) break;
        }
        return out;
    };
    for (const auto& base : bases) {
        for (const auto& f : all_maps(base.X, base.Z)) {
            for (const auto& g : all_maps(base.Y, base.Z)) {
                auto pb = pullback(f, g);
                for (const auto& tx : T.enumerate_telements(base.X, bound, cap)) {
                    // images of the apex fiber under T(p2), with multiplicity
                    std::vector<Element> hits;
                    for (const auto& tp : T.enumerate_fiber(pb.p1, tx, cap))
                        hits.push_back(T.apply_map(pb.p2, tp));
                    std::sort(hits.begin(), hits.end());
                    auto dup = std::adjacent_find(hits.begin(), hits.end());
                    if (dup != hits.end()) {
                        rep.pullback_preservation_ok = false;
                        rep.witnesses.push_back(
                            "T does not preserve the pullback of (" + f.source().str() + " -> " +
                            f.target().str() + " <- " + g.source().str() + "): two apex terms over (" +
                            tx.str() + ", " + dup->str() + ")");
                        return;
                    }
                    auto want = T.enumerate_fiber(g, T.apply_map(f, tx), cap);
                    if (hits != want) {
                        rep.pullback_preservation_ok = false;
                        rep.witnesses.push_back(
                            "T does not preserve the pullback of (" + f.source().str() + " -> " +
                            f.target().str() + " <- " + g.source().str() + ") at " + tx.str());
                        return;
                    }
                }
            }
        }
    }
}

} // namespace

CartesianReport check_cartesian(const MonadPlugin& T, const FiniteSet& Z, int size_bound,
                                std::size_t cap) {
    CartesianReport rep;
    check_unit_square(T, Z, rep);
    check_mult_square(T, Z, size_bound, cap, rep);
    check_preservation(T, size_bound, cap, rep);
    return rep;
}

} // namespace tmcat
