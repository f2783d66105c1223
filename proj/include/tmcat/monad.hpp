#ifndef TMCAT_MONAD_HPP
#define TMCAT_MONAD_HPP

#include "tmcat/finset.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tmcat {

// A term of T(X) for some plugin. Which plugin (and which base set) a term
// belongs to is contextual; well-formedness is checked by plugin operations.
using TElement = Element;

inline constexpr std::size_t kDefaultCap = 1000000;

// Finitary cartesian monad on finite sets, presented elementwise: T(X) is
// never materialized, only its terms up to a size bound. A plugin supplies
// term shape, the positions ("labels") of base elements inside a term, and
// the monad structure; traversal order of labels is fixed per plugin, and
// mult flattens labels in traversal order (relied on by grafting).
class MonadPlugin {
public:
    virtual ~MonadPlugin() = default;

    virtual const std::string& name() const = 0;
    virtual bool well_formed(const Element& t, const FiniteSet& base) const = 0;
    // Per-plugin size measure: list length, tree node count, 1 otherwise.
    virtual int size(const Element& t) const = 0;
    // Base labels at the term's positions, in traversal order.
    virtual std::vector<Element> labels(const Element& t) const = 0;
    // Same shape, new labels (traversal order); length must match.
    virtual Element relabel(const Element& t, const std::vector<Element>& xs) const = 0;
    virtual Element unit(const Element& x) const = 0;    // eta
    // mu: t has TElements at its positions; flatten.
    virtual Element mult(const Element& tt) const = 0;
    // Elements of T(1) with size <= bound, in canonical order.
    virtual std::vector<Element> shapes_up_to(int bound) const = 0;

    // T(f)(t) for f: X -> Y.
    Element apply_map(const FiniteMap& f, const Element& t) const;
    // Labelwise image under an arbitrary function.
    Element apply_fn(const std::function<Element(const Element&)>& f, const Element& t) const;
    // T(!)(t): the underlying shape in T(1).
    Element strip(const Element& t) const;
    // All u in T(source c) with T(c)(u) = t, canonical order. Exact.
    std::vector<Element> enumerate_fiber(const FiniteMap& c, const Element& t,
                                         std::size_t cap = kDefaultCap) const;
    // All t in T(X) with size(t) <= bound, canonical order.
    std::vector<Element> enumerate_telements(const FiniteSet& X, int bound,
                                             std::size_t cap = kDefaultCap) const;
};

using PluginRef = std::shared_ptr<const MonadPlugin>;

PluginRef identity_monad();
PluginRef free_monoid_monad();
PluginRef exceptions_monad(FiniteSet exceptions);
// carrier with a total multiplication table on Pair(m, n) keys and a unit.
// Monoid laws are validated at construction.
PluginRef writer_monad(FiniteSet carrier, const FiniteMap& times, Element unit_elem);
PluginRef writer_z2();  // Z/2 written additively: {0,1}, xor, unit 0
PluginRef tree_monad();
// Negative control: multisets via sorted sequences. A genuine monad, but not
// cartesian; check_cartesian finds the witness.
PluginRef free_comm_monoid_monad();

// Tree term helpers (leaves are tagged so nested T(A) stays unambiguous).
Element tree_leaf(Element x);
Element tree_node(std::vector<Element> kids);
bool is_tree_leaf(const Element& t);
bool is_tree_node(const Element& t);

// Elements of T(alphabet terms) with outer shape size <= shape_bound and
// total label cost <= cost_bound. Used to enumerate nested TT(X)/TTT(X)
// fragments without materializing T(X) as a set.
std::vector<Element> bounded_nested(const MonadPlugin& T,
                                    const std::vector<std::pair<Element, int>>& alphabet,
                                    int shape_bound, int cost_bound,
                                    std::size_t cap = kDefaultCap);

struct LawReport {
    bool ok = true;
    std::vector<std::string> witnesses;
    void fail(std::string w) {
        ok = false;
        if (witnesses.size() < 32) witnesses.push_back(std::move(w));
    }
};

// Unit and associativity laws elementwise up to size_bound, plus naturality
// of eta and mu against all maps X -> Y with |Y| <= 3.
LawReport check_monad_laws(const MonadPlugin& T, const FiniteSet& X, int size_bound,
                           std::size_t cap = kDefaultCap);

struct CartesianReport {
    bool unit_square_ok = true;
    bool mult_square_ok = true;
    bool pullback_preservation_ok = true;
    std::vector<std::string> witnesses;
    bool ok() const { return unit_square_ok && mult_square_ok && pullback_preservation_ok; }
};

// Terminal-object criterion: the eta and mu naturality squares over the
// unique map Z -> 1 are pullbacks (checked elementwise up to size_bound),
// plus preservation of a fixed battery of pullback squares over sets of
// size <= 3.
CartesianReport check_cartesian(const MonadPlugin& T, const FiniteSet& Z, int size_bound,
                                std::size_t cap = kDefaultCap);

} // namespace tmcat

#endif
