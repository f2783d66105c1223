#ifndef TMCAT_DOCUMENT_HPP
#define TMCAT_DOCUMENT_HPP

#include "tmcat/algebra.hpp"
#include "tmcat/free.hpp"
#include "tmcat/transport.hpp"

#include "json.hpp"

namespace tmcat {

using Json = nlohmann::json;

// Terms are tagged arrays: ["atom", name], ["pair", a, b], ["seq", [items]],
// ["tag", label, inner], ["tree", label, [kids]]. Everything else is built
// from them. Parsers throw SchemaError with a path to the offending node.

Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

Json set_to_json(const FiniteSet& s);
FiniteSet set_from_json(const Json& j);

// Maps and tables travel as entry lists [[key, value], ...]; the surrounding
// document supplies source and target.
Json entries_to_json(const FiniteMap& m);
Json entries_to_json(const ElemTable& t);
FiniteMap map_from_entries(const Json& j, const FiniteSet& source, const FiniteSet& target);
ElemTable table_from_entries(const Json& j, const FiniteSet& source);

// {"name": "free_monoid"}, {"name": "exceptions", "exceptions": [...]},
// {"name": "writer", "carrier": [...], "times": [[a, b, c], ...], "unit": e},
// plus identity, tree, free_commutative_monoid, writer_z2.
PluginRef plugin_from_json(const Json& j);

// {"monad": sel, "objects", "arrows", "dom", "cod", "ids", "comp"}
Json multicat_to_json(const Multicategory& M, const Json& monad_selector);
Multicategory multicat_from_json(const Json& j);

// {"monad": sel, "src", "dst", "apex", "dom", "cod"}
Json span_to_json(const Span& s, const Json& monad_selector);
Span span_from_json(const Json& j);

// {"carrier", "p", "act"}; the multicategory comes separately.
Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, const FiniteSet& objects);

// {"monad": sel, "objects", "generators", "dom", "cod"}
Json signature_to_json(const Signature& s, const Json& monad_selector);
Signature signature_from_json(const Json& j);

// Built-ins by name, or an extensional table on bounded shapes:
// {"builtin": "unit_embedding", "monad": sel} | {"builtin": "leaf_sequence"}
// | {"builtin": "identity", "monad": sel}
// | {"builtin": "exceptions_collapse", "monad": sel}
// | {"builtin": "writer_inclusion", "sub": sel, "whole": sel, "include": [[m, n], ...]}
// | {"source": sel, "target": sel, "entries": [[t, u], ...]}
NatTrans nat_trans_from_json(const Json& j);

// Tensors emitted as tables over terms of size <= tensor_bound; parsing gives
// tensors that look the tables up and return nullopt off-table.
Json structured_to_json(const StructuredCategory& B, const Json& monad_selector,
                        int tensor_bound, std::size_t cap = kDefaultCap);
StructuredCategory structured_from_json(const Json& j);

// DOT emitters. Signatures render objects as ellipses and generators as
// boxes wired input positions -> generator -> output; bare terms render
// their constructor tree.
std::string signature_to_dot(const Signature& s);
std::string element_to_dot(const Element& e, const std::string& graph_name = "term");

} // namespace tmcat

#endif
