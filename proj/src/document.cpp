#include "tmcat/document.hpp"

#include "tmcat/error.hpp"

#include <map>
#include <sstream>

namespace tmcat {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const Json& field(const Json& j, const std::string& where, const std::string& key) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing field \"" + key + "\"");
    return *it;
}

std::string str_field(const Json& j, const std::string& where, const std::string& key) {
    const Json& v = field(j, where, key);
    if (!v.is_string()) bad(where, "field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

// rethrow construction failures as schema errors, keeping guard trips intact
template <typename F>
auto lifted(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const GuardError&) {
        throw;
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

std::vector<std::pair<Element, Element>> entry_list(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "expected an entry array");
    std::vector<std::pair<Element, Element>> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) bad(where, "entries are [key, value] pairs");
        out.emplace_back(element_from_json(e[0]), element_from_json(e[1]));
    }
    return out;
}

} // namespace

Json element_to_json(const Element& e) {
    switch (e.kind()) {
        case Element::Kind::Atom:
            return Json::array({"atom", e.name()});
        case Element::Kind::Pair:
            return Json::array(
                {"pair", element_to_json(e.first()), element_to_json(e.second())});
        case Element::Kind::Seq: {
            Json items = Json::array();
            for (const auto& x : e.items()) items.push_back(element_to_json(x));
            return Json::array({"seq", items});
        }
        case Element::Kind::Tag:
            return Json::array({"tag", e.name(), element_to_json(e.inner())});
        case Element::Kind::Tree: {
            Json kids = Json::array();
            for (std::size_t i = 0; i < e.child_count(); ++i)
                kids.push_back(element_to_json(e.child(i)));
            return Json::array({"tree", element_to_json(e.label()), kids});
        }
    }
    throw Error("element_to_json: unreachable");
}

Element element_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_string())
        bad("term", "expected a tagged array, got " + j.dump());
    const std::string tag = j[0].get<std::string>();
    if (tag == "atom") {
        if (j.size() != 2 || !j[1].is_string()) bad("term", "atom wants a name");
        return Element::atom(j[1].get<std::string>());
    }
    if (tag == "pair") {
        if (j.size() != 3) bad("term", "pair wants two parts");
        return Element::pair(element_from_json(j[1]), element_from_json(j[2]));
    }
    if (tag == "seq") {
        if (j.size() != 2 || !j[1].is_array()) bad("term", "seq wants an item array");
        std::vector<Element> items;
        items.reserve(j[1].size());
        for (const auto& x : j[1]) items.push_back(element_from_json(x));
        return Element::seq(std::move(items));
    }
    if (tag == "tag") {
        if (j.size() != 3 || !j[1].is_string()) bad("term", "tag wants a label and a body");
        return Element::tag(j[1].get<std::string>(), element_from_json(j[2]));
    }
    if (tag == "tree") {
        if (j.size() != 3 || !j[2].is_array()) bad("term", "tree wants a label and kids");
        std::vector<Element> kids;
        kids.reserve(j[2].size());
        for (const auto& x : j[2]) kids.push_back(element_from_json(x));
        return Element::tree(element_from_json(j[1]), std::move(kids));
    }
    bad("term", "unknown constructor \"" + tag + "\"");
}

Json set_to_json(const FiniteSet& s) {
    Json out = Json::array();
    for (const auto& e : s) out.push_back(element_to_json(e));
    return out;
}

FiniteSet set_from_json(const Json& j) {
    if (!j.is_array()) bad("set", "expected an array of terms");
    std::vector<Element> elems;
    elems.reserve(j.size());
    for (const auto& e : j) elems.push_back(element_from_json(e));
    return FiniteSet(std::move(elems));
}

Json entries_to_json(const FiniteMap& m) {
    Json out = Json::array();
    for (const auto& k : m.source())
        out.push_back(Json::array({element_to_json(k), element_to_json(m(k))}));
    return out;
}

Json entries_to_json(const ElemTable& t) {
    Json out = Json::array();
    for (const auto& k : t.source())
        out.push_back(Json::array({element_to_json(k), element_to_json(t(k))}));
    return out;
}

FiniteMap map_from_entries(const Json& j, const FiniteSet& source, const FiniteSet& target) {
    auto entries = entry_list(j, "map");
    return lifted("map", [&] { return FiniteMap(source, target, entries); });
}

ElemTable table_from_entries(const Json& j, const FiniteSet& source) {
    auto entries = entry_list(j, "table");
    return lifted("table", [&] { return ElemTable(source, entries); });
}

PluginRef plugin_from_json(const Json& j) {
    const std::string name = str_field(j, "monad", "name");
    if (name == "identity") return identity_monad();
    if (name == "free_monoid") return free_monoid_monad();
    if (name == "tree") return tree_monad();
    if (name == "free_commutative_monoid") return free_comm_monoid_monad();
    if (name == "writer_z2") return writer_z2();
    if (name == "exceptions")
        return lifted("monad", [&] {
            return exceptions_monad(set_from_json(field(j, "monad", "exceptions")));
        });
    if (name == "writer") {
        FiniteSet carrier = set_from_json(field(j, "monad", "carrier"));
        const Json& tj = field(j, "monad", "times");
        if (!tj.is_array()) bad("monad", "writer times must be an array of [a, b, c]");
        std::vector<Element> keys;
        std::vector<std::pair<Element, Element>> entries;
        for (const auto& row : tj) {
            if (!row.is_array() || row.size() != 3)
                bad("monad", "writer times rows are [a, b, product]");
            keys.push_back(
                Element::pair(element_from_json(row[0]), element_from_json(row[1])));
            entries.emplace_back(keys.back(), element_from_json(row[2]));
        }
        Element unit_elem = element_from_json(field(j, "monad", "unit"));
        return lifted("monad", [&] {
            FiniteMap times(FiniteSet(keys), carrier, entries);
            return writer_monad(carrier, times, unit_elem);
        });
    }
    bad("monad", "unknown plugin \"" + name + "\"");
}

Json multicat_to_json(const Multicategory& M, const Json& monad_selector) {
    Json out;
    out["monad"] = monad_selector;
    out["objects"] = set_to_json(M.objects);
    out["arrows"] = set_to_json(M.arrows);
    out["dom"] = entries_to_json(M.dom);
    out["cod"] = entries_to_json(M.cod);
    out["ids"] = entries_to_json(M.ids);
    out["comp"] = entries_to_json(M.comp);
    return out;
}

Multicategory multicat_from_json(const Json& j) {
    PluginRef T = plugin_from_json(field(j, "multicategory", "monad"));
    FiniteSet objects = set_from_json(field(j, "multicategory", "objects"));
    FiniteSet arrows = set_from_json(field(j, "multicategory", "arrows"));
    ElemTable dom = table_from_entries(field(j, "multicategory", "dom"), arrows);
    FiniteMap cod = map_from_entries(field(j, "multicategory", "cod"), arrows, objects);
    FiniteMap ids = map_from_entries(field(j, "multicategory", "ids"), objects, arrows);
    auto centries = entry_list(field(j, "multicategory", "comp"), "comp");
    std::vector<Element> keys;
    keys.reserve(centries.size());
    for (const auto& [k, v] : centries) keys.push_back(k);
    return lifted("multicategory", [&] {
        FiniteMap comp(FiniteSet(keys), arrows, centries);
        return make_multicat(T, objects, arrows, dom, cod, ids, comp);
    });
}

Json span_to_json(const Span& s, const Json& monad_selector) {
    Json out;
    out["monad"] = monad_selector;
    out["src"] = set_to_json(s.src);
    out["dst"] = set_to_json(s.dst);
    out["apex"] = set_to_json(s.apex);
    out["dom"] = entries_to_json(s.dom);
    out["cod"] = entries_to_json(s.cod);
    return out;
}

Span span_from_json(const Json& j) {
    PluginRef T = plugin_from_json(field(j, "span", "monad"));
    FiniteSet src = set_from_json(field(j, "span", "src"));
    FiniteSet dst = set_from_json(field(j, "span", "dst"));
    FiniteSet apex = set_from_json(field(j, "span", "apex"));
    ElemTable dom = table_from_entries(field(j, "span", "dom"), apex);
    FiniteMap cod = map_from_entries(field(j, "span", "cod"), apex, dst);
    return lifted("span", [&] { return make_span(T, src, dst, apex, dom, cod); });
}

Json algebra_to_json(const Algebra& a) {
    Json out;
    out["carrier"] = set_to_json(a.carrier);
    out["p"] = entries_to_json(a.p);
    out["act"] = entries_to_json(a.act);
    return out;
}

Algebra algebra_from_json(const Json& j, const FiniteSet& objects) {
    FiniteSet carrier = set_from_json(field(j, "algebra", "carrier"));
    FiniteMap p = map_from_entries(field(j, "algebra", "p"), carrier, objects);
    auto aentries = entry_list(field(j, "algebra", "act"), "act");
    std::vector<Element> keys;
    keys.reserve(aentries.size());
    for (const auto& [k, v] : aentries) keys.push_back(k);
    return lifted("algebra", [&] {
        FiniteMap act(FiniteSet(keys), carrier, aentries);
        return Algebra{carrier, p, act};
    });
}

Json signature_to_json(const Signature& s, const Json& monad_selector) {
    Json out;
    out["monad"] = monad_selector;
    out["objects"] = set_to_json(s.objects);
    out["generators"] = set_to_json(s.gens);
    out["dom"] = entries_to_json(s.dom);
    out["cod"] = entries_to_json(s.cod);
    return out;
}

Signature signature_from_json(const Json& j) {
    PluginRef T = plugin_from_json(field(j, "signature", "monad"));
    FiniteSet objects = set_from_json(field(j, "signature", "objects"));
    FiniteSet gens = set_from_json(field(j, "signature", "generators"));
    ElemTable dom = table_from_entries(field(j, "signature", "dom"), gens);
    FiniteMap cod = map_from_entries(field(j, "signature", "cod"), gens, objects);
    return lifted("signature", [&] { return make_signature(T, objects, gens, dom, cod); });
}

NatTrans nat_trans_from_json(const Json& j) {
    if (!j.is_object()) bad("transformation", "expected an object");
    if (j.contains("builtin")) {
        const std::string which = str_field(j, "transformation", "builtin");
        if (which == "identity")
            return identity_trans(plugin_from_json(field(j, "transformation", "monad")));
        if (which == "unit_embedding")
            return unit_embedding(plugin_from_json(field(j, "transformation", "monad")));
        if (which == "leaf_sequence") return leaf_sequence();
        if (which == "exceptions_collapse")
            return lifted("transformation", [&] {
                return exceptions_collapse(
                    plugin_from_json(field(j, "transformation", "monad")));
            });
        if (which == "writer_inclusion") {
            PluginRef sub = plugin_from_json(field(j, "transformation", "sub"));
            PluginRef whole = plugin_from_json(field(j, "transformation", "whole"));
            // carriers are not readable off the plugins, so the table names both
            auto entries = entry_list(field(j, "transformation", "include"), "include");
            std::vector<Element> srcs, dsts;
            for (const auto& [k, v] : entries) {
                srcs.push_back(k);
                dsts.push_back(v);
            }
            return lifted("transformation", [&] {
                FiniteMap incl(FiniteSet(srcs), FiniteSet(dsts), entries);
                return writer_inclusion(sub, whole, incl);
            });
        }
        bad("transformation", "unknown builtin \"" + which + "\"");
    }
    PluginRef source = plugin_from_json(field(j, "transformation", "source"));
    PluginRef target = plugin_from_json(field(j, "transformation", "target"));
    auto entries = entry_list(field(j, "transformation", "entries"), "entries");
    auto table = std::make_shared<std::map<Element, Element>>();
    for (const auto& [k, v] : entries)
        if (!table->emplace(k, v).second)
            bad("transformation", "duplicate entry for " + k.str());
    return NatTrans{"table", source, target, [table](const Element& t) {
                        auto it = table->find(t);
                        if (it == table->end())
                            throw SchemaError("transformation table has no entry for " +
                                              t.str());
                        return it->second;
                    }};
}

Json structured_to_json(const StructuredCategory& B, const Json& monad_selector,
                        int tensor_bound, std::size_t cap) {
    Json out;
    out["monad"] = monad_selector;
    out["objects"] = set_to_json(B.objects);
    out["arrows"] = set_to_json(B.arrows);
    out["src"] = entries_to_json(B.src);
    out["tgt"] = entries_to_json(B.tgt);
    out["ids"] = entries_to_json(B.ids);
    out["comp"] = entries_to_json(B.comp);
    out["tensor_bound"] = tensor_bound;
    Json obj = Json::array();
    for (const auto& t : B.monad->enumerate_telements(B.objects, tensor_bound, cap))
        if (auto flat = B.obj_tensor(t))
            obj.push_back(Json::array({element_to_json(t), element_to_json(*flat)}));
    out["obj_tensor"] = obj;
    Json arr = Json::array();
    for (const auto& t : B.monad->enumerate_telements(B.arrows, tensor_bound, cap))
        if (auto flat = B.arr_tensor(t))
            arr.push_back(Json::array({element_to_json(t), element_to_json(*flat)}));
    out["arr_tensor"] = arr;
    return out;
}

StructuredCategory structured_from_json(const Json& j) {
    PluginRef T = plugin_from_json(field(j, "structured", "monad"));
    FiniteSet objects = set_from_json(field(j, "structured", "objects"));
    FiniteSet arrows = set_from_json(field(j, "structured", "arrows"));
    FiniteMap src = map_from_entries(field(j, "structured", "src"), arrows, objects);
    FiniteMap tgt = map_from_entries(field(j, "structured", "tgt"), arrows, objects);
    FiniteMap ids = map_from_entries(field(j, "structured", "ids"), objects, arrows);
    auto centries = entry_list(field(j, "structured", "comp"), "comp");
    std::vector<Element> keys;
    for (const auto& [k, v] : centries) keys.push_back(k);
    FiniteMap comp = lifted("structured", [&] {
        return FiniteMap(FiniteSet(keys), arrows, centries);
    });
    auto tensor_table = [&](const char* key) {
        auto entries = entry_list(field(j, "structured", key), key);
        auto table = std::make_shared<std::map<Element, Element>>(entries.begin(),
                                                                  entries.end());
        return [table](const Element& t) -> std::optional<Element> {
            auto it = table->find(t);
            if (it == table->end()) return std::nullopt;
            return it->second;
        };
    };
    return StructuredCategory{T,   objects, arrows, src, tgt, ids, comp,
                              tensor_table("obj_tensor"), tensor_table("arr_tensor")};
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void element_dot_nodes(const Element& e, std::ostream& os, int& next, int parent) {
    int me = next++;
    std::string label;
    std::vector<Element> kids;
    switch (e.kind()) {
        case Element::Kind::Atom:
            label = e.name();
            break;
        case Element::Kind::Pair:
            label = "pair";
            kids = {e.first(), e.second()};
            break;
        case Element::Kind::Seq:
            label = "seq";
            kids = e.items();
            break;
        case Element::Kind::Tag:
            label = e.name();
            kids = {e.inner()};
            break;
        case Element::Kind::Tree:
            label = e.label().str();
            kids = e.children();
            break;
    }
    os << "  n" << me << " [label=\"" << dot_escape(label) << "\"];\n";
    if (parent >= 0) os << "  n" << parent << " -> n" << me << ";\n";
    for (const auto& k : kids) element_dot_nodes(k, os, next, me);
}

} // namespace

std::string signature_to_dot(const Signature& s) {
    std::ostringstream os;
    os << "digraph signature {\n  rankdir=LR;\n";
    for (const auto& o : s.objects)
        os << "  \"o:" << dot_escape(o.str()) << "\" [shape=ellipse, label=\""
           << dot_escape(o.str()) << "\"];\n";
    for (const auto& g : s.gens)
        os << "  \"g:" << dot_escape(g.str()) << "\" [shape=box, label=\""
           << dot_escape(g.str()) << "\"];\n";
    for (const auto& g : s.gens) {
        std::vector<Element> ins = s.monad->labels(s.dom(g));
        for (std::size_t i = 0; i < ins.size(); ++i)
            os << "  \"o:" << dot_escape(ins[i].str()) << "\" -> \"g:"
               << dot_escape(g.str()) << "\" [label=\"" << i << "\"];\n";
        os << "  \"g:" << dot_escape(g.str()) << "\" -> \"o:"
           << dot_escape(s.cod(g).str()) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

std::string element_to_dot(const Element& e, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    int next = 0;
    element_dot_nodes(e, os, next, -1);
    os << "}\n";
    return os.str();
}

} // namespace tmcat
