#include "tmcat/opetope.hpp"

#include "tmcat/error.hpp"
#include "tmcat/finset.hpp"

#include <functional>

namespace tmcat {

namespace {

const std::string kOidTag = "oid";

bool is_oid(const Element& w) { return w.is_tag() && w.name() == kOidTag; }

void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

// trivial pasting on c, one node carrying c with trivial pastings below it
Element eta(const Element& c, int cdim) {
    std::vector<Element> kids;
    for (const Element& l : opetope_nodes(c, cdim)) kids.push_back(Element::tag(kOidTag, l));
    return Element::tree(c, kids);
}

std::vector<std::vector<Element>> split_by(const std::vector<Element>& xs,
                                           const std::vector<int>& counts,
                                           const std::string& who) {
    std::vector<std::vector<Element>> blocks;
    std::size_t off = 0;
    for (int k : counts) {
        require(off + static_cast<std::size_t>(k) <= xs.size(), who + ": block mismatch");
        blocks.emplace_back(xs.begin() + static_cast<std::ptrdiff_t>(off),
                            xs.begin() + static_cast<std::ptrdiff_t>(off + k));
        off += static_cast<std::size_t>(k);
    }
    require(off == xs.size(), who + ": block mismatch");
    return blocks;
}

int node_count(const Element& w, int dim) {
    if (dim <= 1) return 1;
    if (is_oid(w)) return 0;
    int n = 1;
    for (std::size_t i = 0; i < w.child_count(); ++i) n += node_count(w.child(i), dim);
    return n;
}

// replaces the graft positions of p by the cells in ks, in preorder
Element attach(const Element& p, const std::vector<Element>& ks, int dim) {
    if (is_oid(p)) {
        require(ks.size() == 1, "opetope attach: position mismatch");
        return ks[0];
    }
    std::vector<int> counts;
    for (std::size_t i = 0; i < p.child_count(); ++i)
        counts.push_back(opetope_arity(p.child(i), dim));
    std::vector<std::vector<Element>> blocks = split_by(ks, counts, "opetope attach");
    std::vector<Element> kids;
    for (std::size_t i = 0; i < p.child_count(); ++i)
        kids.push_back(attach(p.child(i), blocks[i], dim));
    return Element::tree(p.label(), kids);
}

// replaces each node of t (preorder) by a same-dimension pasting
Element subst(const Element& t, const std::vector<Element>& ps, int dim) {
    if (is_oid(t)) {
        require(ps.empty(), "opetope subst: node mismatch");
        return t;
    }
    require(!ps.empty(), "opetope subst: node mismatch");
    std::vector<int> counts;
    for (std::size_t i = 0; i < t.child_count(); ++i)
        counts.push_back(node_count(t.child(i), dim));
    std::vector<Element> rest(ps.begin() + 1, ps.end());
    std::vector<std::vector<Element>> blocks = split_by(rest, counts, "opetope subst");
    std::vector<Element> kids;
    for (std::size_t i = 0; i < t.child_count(); ++i)
        kids.push_back(subst(t.child(i), blocks[i], dim));
    return attach(ps[0], kids, dim);
}

} // namespace

Element opetope_point() { return Element::atom("*"); }

bool opetope_well_formed(const Element& w, int dim) {
    if (dim <= 1) return w == opetope_point();
    if (is_oid(w)) return opetope_well_formed(w.inner(), dim - 2);
    if (!w.is_tree()) return false;
    const Element& g = w.label();
    if (!opetope_well_formed(g, dim - 1)) return false;
    std::vector<Element> ns = opetope_nodes(g, dim - 1);
    if (w.child_count() != ns.size()) return false;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!opetope_well_formed(w.child(i), dim)) return false;
        if (opetope_out(w.child(i), dim) != ns[i]) return false;
    }
    return true;
}

int opetope_size(const Element& w, int dim) {
    if (dim <= 1) return 0;
    if (is_oid(w)) return opetope_size(w.inner(), dim - 2);
    require(w.is_tree(), "opetope_size: not a cell: " + w.str());
    int n = 1 + opetope_size(w.label(), dim - 1);
    for (std::size_t i = 0; i < w.child_count(); ++i) n += opetope_size(w.child(i), dim);
    return n;
}

int opetope_arity(const Element& w, int dim) {
    require(dim >= 2, "opetope_arity: needs dimension >= 2");
    if (is_oid(w)) return 1;
    require(w.is_tree(), "opetope_arity: not a cell: " + w.str());
    int n = 0;
    for (std::size_t i = 0; i < w.child_count(); ++i) n += opetope_arity(w.child(i), dim);
    return n;
}

std::vector<Element> opetope_nodes(const Element& w, int dim) {
    if (dim <= 1) return {opetope_point()};
    if (is_oid(w)) return {};
    require(w.is_tree(), "opetope_nodes: not a cell: " + w.str());
    std::vector<Element> out{w.label()};
    for (std::size_t i = 0; i < w.child_count(); ++i)
        for (const Element& l : opetope_nodes(w.child(i), dim)) out.push_back(l);
    return out;
}

Element opetope_out(const Element& w, int dim) {
    require(dim >= 2, "opetope_out: needs dimension >= 2");
    if (is_oid(w)) return w.inner();
    require(w.is_tree(), "opetope_out: not a cell: " + w.str());
    return opetope_flat(w.label(), dim - 1);
}

Element opetope_flat(const Element& w, int dim) {
    if (dim <= 2) return opetope_point();
    if (is_oid(w)) return eta(w.inner(), dim - 2);
    require(w.is_tree(), "opetope_flat: not a cell: " + w.str());
    std::vector<Element> ps;
    for (std::size_t i = 0; i < w.child_count(); ++i)
        ps.push_back(opetope_flat(w.child(i), dim));
    return subst(w.label(), ps, dim - 1);
}

std::vector<Element> opetopes_up_to(int dim, int size_bound, std::size_t cap) {
    if (size_bound < 0) return {};
    if (dim <= 1) return {opetope_point()};
    std::vector<Element> found;
    for (const Element& c : opetopes_up_to(dim - 2, size_bound, cap))
        found.push_back(Element::tag(kOidTag, c));
    for (const Element& g : opetopes_up_to(dim - 1, size_bound - 1, cap)) {
        int rest = size_bound - 1 - opetope_size(g, dim - 1);
        if (rest < 0) continue;
        std::vector<Element> ns = opetope_nodes(g, dim - 1);
        std::vector<Element> same = opetopes_up_to(dim, rest, cap);
        std::vector<std::vector<Element>> pools(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i)
            for (const Element& k : same)
                if (opetope_out(k, dim) == ns[i]) pools[i].push_back(k);
        std::vector<Element> kids;
        std::function<void(std::size_t, int)> go = [&](std::size_t pos, int left) {
            if (pos == pools.size()) {
                found.push_back(Element::tree(g, kids));
                if (found.size() > cap)
                    throw GuardError("opetopes_up_to: more than " + std::to_string(cap) +
                                     " cells");
                return;
            }
            for (const Element& k : pools[pos]) {
                int s = opetope_size(k, dim);
                if (s > left) continue;
                kids.push_back(k);
                go(pos + 1, left - s);
                kids.pop_back();
            }
        };
        go(0, rest);
    }
    return FiniteSet(found).elems();
}

} // namespace tmcat
