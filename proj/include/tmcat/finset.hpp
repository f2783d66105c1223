#ifndef TMCAT_FINSET_HPP
#define TMCAT_FINSET_HPP

#include "tmcat/element.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tmcat {

// Finite set of Elements, stored sorted and deduplicated.
class FiniteSet {
public:
    FiniteSet() = default;
    explicit FiniteSet(std::vector<Element> elems);

    static FiniteSet of(std::initializer_list<Element> elems);
    // {prefix0, ..., prefix(n-1)} as atoms.
    static FiniteSet named(std::size_t n, const std::string& prefix = "x");
    static FiniteSet terminal();  // {*}

    bool contains(const Element& x) const;
    // Index in sorted order; throws if absent.
    std::size_t index_of(const Element& x) const;
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const Element& at(std::size_t i) const { return elems_.at(i); }
    const std::vector<Element>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const FiniteSet& o) const { return elems_ == o.elems_; }

    std::string str() const;

private:
    std::vector<Element> elems_;
};

// Total function between finite sets, tabulated over the sorted source.
class FiniteMap {
public:
    FiniteMap() = default;
    // entries must cover the source exactly once each; images must lie in target.
    FiniteMap(FiniteSet source, FiniteSet target,
              const std::vector<std::pair<Element, Element>>& entries);
    static FiniteMap from_function(FiniteSet source, FiniteSet target,
                                   const std::function<Element(const Element&)>& f);
    static FiniteMap identity(FiniteSet s);
    static FiniteMap constant(FiniteSet source, FiniteSet target, Element value);
    // Unique map to the terminal set {*}.
    static FiniteMap bang(FiniteSet source);

    const Element& operator()(const Element& x) const;
    const FiniteSet& source() const { return src_; }
    const FiniteSet& target() const { return tgt_; }
    const std::vector<Element>& images() const { return img_; }

    std::vector<Element> fiber(const Element& y) const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    FiniteMap inverse() const;  // bijections only

    bool operator==(const FiniteMap& o) const;

private:
    FiniteSet src_, tgt_;
    std::vector<Element> img_;  // aligned with src_ order
};

// g after f.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

// Table from a finite set to arbitrary Elements (no materialized target).
// Used where values live in a set we never build, e.g. T(X).
class ElemTable {
public:
    ElemTable() = default;
    ElemTable(FiniteSet source, const std::vector<std::pair<Element, Element>>& entries);
    static ElemTable from_function(FiniteSet source,
                                   const std::function<Element(const Element&)>& f);

    const Element& operator()(const Element& x) const;
    const FiniteSet& source() const { return src_; }
    const std::vector<Element>& values() const { return val_; }

    bool operator==(const ElemTable& o) const;

private:
    FiniteSet src_;
    std::vector<Element> val_;
};

// Canonical pullback of f: X -> Z, g: Y -> Z. Apex elements are Pair(x, y)
// with f(x) = g(y); p1, p2 are the projections.
struct PullbackResult {
    FiniteSet apex;
    FiniteMap p1, p2;
};

PullbackResult pullback(const FiniteMap& f, const FiniteMap& g);

struct PullbackCheck {
    bool ok = false;
    std::string detail;  // witness description when not ok
};

// Square p: W -> X, q: W -> Y over f: X -> Z, g: Y -> Z. Throws on a
// non-commuting or mis-typed square; otherwise reports whether W is a
// pullback, with a witness element on failure.
PullbackCheck is_pullback(const FiniteMap& p, const FiniteMap& q,
                          const FiniteMap& f, const FiniteMap& g);

// Mediating map for a cone u1: V -> X, u2: V -> Y over the same cospan.
FiniteMap pullback_factorize(const PullbackResult& pb, const FiniteMap& u1,
                             const FiniteMap& u2);

} // namespace tmcat

#endif
