#include "tmcat/commands.hpp"

#include "tmcat/error.hpp"
#include "tmcat/free.hpp"
#include "tmcat/opetope.hpp"
#include "tmcat/span.hpp"

#include <algorithm>
#include <map>

namespace tmcat {

const std::size_t kCliDefaultCap = 100000;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const Json& need_input(const Json& input, const std::string& cmd) {
    if (input.is_null()) bad(cmd, "expected a document on stdin or --input");
    if (!input.is_object()) bad(cmd, "the document must be a JSON object");
    return input;
}

const Json& field(const Json& j, const std::string& cmd, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) bad(cmd, "missing \"" + key + "\"");
    return j.at(key);
}

int opt_int(const Json& options, const std::string& key, int fallback) {
    if (!options.is_object() || !options.contains(key)) return fallback;
    const Json& v = options.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        bad("options." + key, "expected a nonnegative integer");
    return v.get<int>();
}

std::size_t opt_cap(const Json& options) {
    if (!options.is_object() || !options.contains("cap")) return kCliDefaultCap;
    const Json& v = options.at("cap");
    if (!v.is_number_integer() || v.get<long long>() < 0)
        bad("options.cap", "expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::string opt_str(const Json& options, const std::string& key, const std::string& fallback) {
    if (!options.is_object() || !options.contains(key)) return fallback;
    const Json& v = options.at(key);
    if (!v.is_string()) bad("options." + key, "expected a string");
    return v.get<std::string>();
}

bool opt_bool(const Json& options, const std::string& key, bool fallback) {
    if (!options.is_object() || !options.contains(key)) return fallback;
    const Json& v = options.at(key);
    if (!v.is_boolean()) bad("options." + key, "expected a boolean");
    return v.get<bool>();
}

Json witness_json(const std::vector<std::string>& ws) {
    Json a = Json::array();
    for (const auto& w : ws) a.push_back(w);
    return a;
}

Json multicat_counts(const Multicategory& M) {
    return Json{{"objects", M.objects.size()},
                {"arrows", M.arrows.size()},
                {"composites", M.comp.source().size()}};
}

Json structured_counts(const StructuredCategory& B) {
    return Json{{"objects", B.objects.size()},
                {"arrows", B.arrows.size()},
                {"composites", B.comp.source().size()}};
}

// size histogram as sorted [size, count] pairs; object keys would sort
// lexicographically
Json histogram(const std::map<int, std::size_t>& h) {
    Json a = Json::array();
    for (const auto& [k, n] : h) a.push_back(Json::array({k, n}));
    return a;
}

// the plugin a transformation document translates from and into, as
// selectors for re-emitting transported multicategories
Json nat_selector(const Json& doc, bool source_side) {
    if (doc.contains("builtin")) {
        std::string b = doc.at("builtin").get<std::string>();
        if (b == "identity") return doc.at("monad");
        if (b == "unit_embedding")
            return source_side ? Json{{"name", "identity"}} : doc.at("monad");
        if (b == "leaf_sequence")
            return source_side ? Json{{"name", "tree"}} : Json{{"name", "free_monoid"}};
        if (b == "exceptions_collapse")
            return source_side ? doc.at("monad") : Json{{"name", "free_monoid"}};
        if (b == "writer_inclusion") return source_side ? doc.at("sub") : doc.at("whole");
        bad("transformation", "unknown builtin \"" + b + "\"");
    }
    return source_side ? field(doc, "transformation", "source")
                       : field(doc, "transformation", "target");
}

CommandResult finish(Json& rep, bool ok) {
    rep["status"] = ok ? "pass" : "fail";
    return {ok ? 0 : 1, rep, std::nullopt};
}

CommandResult cmd_check_monad(const Json& options, const Json& input) {
    int bound = opt_int(options, "bound", 4);
    int max_base = opt_int(options, "max_base", 3);
    PluginRef T;
    if (!input.is_null() && input.is_object() && input.contains("monad")) {
        T = plugin_from_json(input.at("monad"));
    } else {
        std::string name = opt_str(options, "name", "");
        if (name.empty())
            bad("check-monad", "give --name or a document with a \"monad\" field");
        T = plugin_from_json(Json{{"name", name}});
    }
    std::size_t cap = opt_cap(options);
    bool laws = true, unit_sq = true, mult_sq = true, pullbacks = true;
    std::vector<std::string> ws;
    for (int k = 0; k <= max_base; ++k) {
        FiniteSet X = FiniteSet::named(k, "x");
        LawReport law = check_monad_laws(*T, X, bound, cap);
        laws = laws && law.ok;
        CartesianReport cart = check_cartesian(*T, X, bound, cap);
        unit_sq = unit_sq && cart.unit_square_ok;
        mult_sq = mult_sq && cart.mult_square_ok;
        pullbacks = pullbacks && cart.pullback_preservation_ok;
        for (const auto& w : law.witnesses) ws.push_back("base " + std::to_string(k) + ": " + w);
        for (const auto& w : cart.witnesses) ws.push_back("base " + std::to_string(k) + ": " + w);
    }
    Json rep;
    rep["command"] = "check-monad";
    rep["monad"] = T->name();
    rep["options"] = Json{{"bound", bound}, {"max_base", max_base}, {"cap", cap}};
    rep["verdicts"] = Json{{"laws", laws},
                           {"unit_square", unit_sq},
                           {"mult_square", mult_sq},
                           {"pullback_preservation", pullbacks}};
    rep["witnesses"] = witness_json(ws);
    return finish(rep, laws && unit_sq && mult_sq && pullbacks);
}

CommandResult cmd_check_multicat(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    Multicategory M = multicat_from_json(need_input(input, "check-multicat"));
    AxiomReport r = check_axioms(M, cap);
    Json rep;
    rep["command"] = "check-multicat";
    rep["counts"] = multicat_counts(M);
    rep["options"] = Json{{"cap", cap}};
    rep["verdicts"] = Json{{"legs", r.legs_ok}, {"units", r.unit_ok}, {"associativity", r.assoc_ok}};
    rep["witnesses"] = witness_json(r.witnesses);
    return finish(rep, r.ok());
}

CommandResult cmd_check_map(const Json& options, const Json& input) {
    const Json& doc = need_input(input, "check-map");
    Multicategory M = multicat_from_json(field(doc, "check-map", "source"));
    Multicategory N = multicat_from_json(field(doc, "check-map", "target"));
    FiniteMap fo = map_from_entries(field(doc, "check-map", "objects"), M.objects, N.objects);
    FiniteMap fa = map_from_entries(field(doc, "check-map", "arrows"), M.arrows, N.arrows);
    LawReport r = check_map(M, N, fo, fa);
    Json rep;
    rep["command"] = "check-map";
    rep["options"] = Json{{"cap", opt_cap(options)}};
    rep["verdicts"] = Json{{"map", r.ok}};
    rep["witnesses"] = witness_json(r.witnesses);
    return finish(rep, r.ok);
}

CommandResult cmd_check_algebra(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    const Json& doc = need_input(input, "check-algebra");
    Multicategory M = multicat_from_json(field(doc, "check-algebra", "multicategory"));
    Algebra alg = algebra_from_json(field(doc, "check-algebra", "algebra"), M.objects);
    LawReport r = check_algebra(M, alg, cap);
    Json rep;
    rep["command"] = "check-algebra";
    rep["counts"] = Json{{"carrier", alg.carrier.size()}};
    rep["options"] = Json{{"cap", cap}};
    rep["verdicts"] = Json{{"algebra", r.ok}};
    rep["witnesses"] = witness_json(r.witnesses);
    return finish(rep, r.ok);
}

CommandResult cmd_compose_spans(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    const Json& doc = need_input(input, "compose-spans");
    Span after = span_from_json(field(doc, "compose-spans", "after"));
    Span before = span_from_json(field(doc, "compose-spans", "before"));
    if (after.monad->name() != before.monad->name())
        bad("compose-spans", "the spans are over different monads");
    Span c = compose_spans(after, before, cap);
    Json rep;
    rep["command"] = "compose-spans";
    rep["counts"] = Json{{"apex", c.apex.size()}};
    rep["options"] = Json{{"cap", cap}};
    rep["output"] = span_to_json(c, doc.at("after").at("monad"));
    return finish(rep, true);
}

CommandResult cmd_free(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    int max_nodes = opt_int(options, "max_nodes", 3);
    const Json& doc = need_input(input, "free");
    Signature sig = signature_from_json(doc);
    Multicategory F = free_multicat(sig, max_nodes, cap);
    Json rep;
    rep["command"] = "free";
    rep["counts"] = multicat_counts(F);
    rep["options"] = Json{{"cap", cap}, {"max_nodes", max_nodes}};
    rep["output"] = multicat_to_json(F, doc.at("monad"));
    return finish(rep, true);
}

CommandResult cmd_opetopes(const Json& options, const Json&) {
    std::size_t cap = opt_cap(options);
    if (!options.is_object() || !options.contains("dim")) bad("opetopes", "--dim is required");
    int dim = opt_int(options, "dim", 0);
    int size = opt_int(options, "size", 3);
    std::vector<Element> cells = opetopes_up_to(dim, size, cap);
    std::map<int, std::size_t> by_size;
    Json listed = Json::array();
    for (const auto& c : cells) {
        by_size[opetope_size(c, dim)] += 1;
        listed.push_back(element_to_json(c));
    }
    Json rep;
    rep["command"] = "opetopes";
    rep["counts"] = Json{{"total", cells.size()}, {"by_size", histogram(by_size)}};
    rep["options"] = Json{{"cap", cap}, {"dim", dim}, {"size", size}};
    rep["output"] = Json{{"cells", listed}};
    return finish(rep, true);
}

CommandResult cmd_algebras(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    int max_size = opt_int(options, "max_size", 2);
    Multicategory M = multicat_from_json(need_input(input, "algebras"));
    std::vector<Algebra> found = enumerate_algebras(M, max_size, cap);
    std::map<int, std::size_t> by_size;
    Json listed = Json::array();
    for (const auto& a : found) {
        by_size[static_cast<int>(a.carrier.size())] += 1;
        listed.push_back(algebra_to_json(a));
    }
    Json rep;
    rep["command"] = "algebras";
    rep["counts"] = Json{{"total", found.size()}, {"by_carrier_size", histogram(by_size)}};
    rep["options"] = Json{{"cap", cap}, {"max_size", max_size}};
    rep["output"] = Json{{"algebras", listed}};
    return finish(rep, true);
}

CommandResult cmd_endo(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    int size = opt_int(options, "size", 2);
    int max_arity = opt_int(options, "max_arity", 2);
    FiniteSet X = (!input.is_null() && input.is_object() && input.contains("carrier"))
                      ? set_from_json(input.at("carrier"))
                      : FiniteSet::named(size, "x");
    Multicategory E = endomorphism_operad(X, max_arity, cap);
    Json rep;
    rep["command"] = "endo";
    rep["counts"] = multicat_counts(E);
    rep["options"] = Json{{"cap", cap}, {"max_arity", max_arity}, {"size", X.size()}};
    rep["output"] = multicat_to_json(E, Json{{"name", "free_monoid"}});
    return finish(rep, true);
}

CommandResult cmd_slice(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    const Json& doc = need_input(input, "slice");
    Multicategory M = multicat_from_json(field(doc, "slice", "multicategory"));
    Algebra alg = algebra_from_json(field(doc, "slice", "algebra"), M.objects);
    LawReport chk = check_algebra(M, alg, cap);
    Json rep;
    rep["command"] = "slice";
    rep["options"] = Json{{"cap", cap}};
    rep["verdicts"] = Json{{"algebra", chk.ok}};
    rep["witnesses"] = witness_json(chk.witnesses);
    if (!chk.ok) return finish(rep, false);
    Multicategory S = slice_multicat(M, alg, cap);
    rep["counts"] = multicat_counts(S);
    rep["output"] = multicat_to_json(S, doc.at("multicategory").at("monad"));
    return finish(rep, true);
}

CommandResult cmd_transport(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    int bound = opt_int(options, "bound", 3);
    std::string mode = opt_str(options, "mode", "composition");
    bool check = opt_bool(options, "check", false);
    const Json& doc = need_input(input, "transport");
    const Json& natdoc = field(doc, "transport", "transformation");
    NatTrans phi = nat_trans_from_json(natdoc);
    Multicategory M = multicat_from_json(field(doc, "transport", "multicategory"));
    Json rep;
    rep["command"] = "transport";
    rep["options"] = Json{{"bound", bound}, {"cap", cap}, {"check", check}, {"mode", mode}};
    if (check) {
        LawReport r = check_nat_trans(phi, M.objects, bound, cap);
        rep["verdicts"] = Json{{"transformation", r.ok}};
        rep["witnesses"] = witness_json(r.witnesses);
        if (!r.ok) return finish(rep, false);
    }
    Multicategory N = [&] {
        if (mode == "composition") return transport_by_composition(phi, M);
        if (mode == "pullback") return transport_by_pullback(phi, M, bound, cap);
        bad("transport", "unknown mode \"" + mode + "\"");
    }();
    rep["counts"] = multicat_counts(N);
    rep["output"] = multicat_to_json(N, nat_selector(natdoc, mode == "pullback"));
    return finish(rep, true);
}

CommandResult cmd_structured(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    int bound = opt_int(options, "bound", 3);
    int tensor_bound = opt_int(options, "tensor_bound", 2);
    bool check = opt_bool(options, "check", false);
    const Json& doc = need_input(input, "structured");
    Multicategory M = multicat_from_json(doc);
    StructuredCategory B = free_structured(M, bound, cap);
    Json rep;
    rep["command"] = "structured";
    rep["counts"] = structured_counts(B);
    rep["options"] =
        Json{{"bound", bound}, {"cap", cap}, {"check", check}, {"tensor_bound", tensor_bound}};
    bool ok = true;
    if (check) {
        LawReport r = check_structured(B, tensor_bound, cap);
        rep["verdicts"] = Json{{"structured", r.ok}};
        rep["witnesses"] = witness_json(r.witnesses);
        ok = r.ok;
    }
    if (options.is_object() && options.contains("hom")) {
        const Json& h = options.at("hom");
        if (!h.is_array() || h.size() != 2 || !h[0].is_number_integer() ||
            !h[1].is_number_integer())
            bad("options.hom", "expected [from, to] object indices");
        std::size_t m = h[0].get<std::size_t>(), n = h[1].get<std::size_t>();
        if (m >= B.objects.size() || n >= B.objects.size())
            bad("options.hom", "object index out of range");
        const Element& from = B.objects.at(m);
        const Element& to = B.objects.at(n);
        std::size_t count = 0;
        for (const auto& a : B.arrows)
            if (B.src(a) == from && B.tgt(a) == to) ++count;
        rep["counts"]["hom"] = Json{{"count", count}, {"from", m}, {"to", n}};
    }
    rep["output"] = structured_to_json(B, doc.at("monad"), tensor_bound, cap);
    return finish(rep, ok);
}

CommandResult cmd_recover(const Json& options, const Json& input) {
    std::size_t cap = opt_cap(options);
    const Json& doc = need_input(input, "recover");
    Multicategory M = multicat_from_json(doc);
    MonadDataPackage pkg = monad_data(M);
    Multicategory R = recover_multicat(pkg, cap);
    bool same = multicat_equal(R, M);
    Json rep;
    rep["command"] = "recover";
    rep["counts"] = multicat_counts(R);
    rep["options"] = Json{{"cap", cap}};
    rep["output"] = multicat_to_json(R, doc.at("monad"));
    rep["verdicts"] = Json{{"round_trip", same}};
    return finish(rep, same);
}

CommandResult cmd_export(const Json& options, const Json& input) {
    std::string format = opt_str(options, "format", "json");
    if (format != "json" && format != "dot") bad("options.format", "expected json or dot");
    const Json& doc = need_input(input, "export");
    std::string kind = field(doc, "export", "kind").get<std::string>();
    Json rep;
    rep["command"] = "export";
    rep["options"] = Json{{"format", format}};
    std::string dot;
    Json out;
    if (kind == "signature") {
        Signature sig = signature_from_json(doc);
        out = signature_to_json(sig, doc.at("monad"));
        out["kind"] = "signature";
        dot = signature_to_dot(sig);
    } else if (kind == "term") {
        Element e = element_from_json(field(doc, "export", "term"));
        out = Json{{"kind", "term"}, {"term", element_to_json(e)}};
        dot = element_to_dot(e, "term");
    } else if (kind == "free_arrow") {
        Signature sig = signature_from_json(field(doc, "export", "signature"));
        Element a = element_from_json(field(doc, "export", "arrow"));
        if (!free_well_formed(sig, a)) bad("export", "not an arrow of the signature");
        out = Json{{"kind", "free_arrow"},
                   {"signature", signature_to_json(sig, doc.at("signature").at("monad"))},
                   {"arrow", element_to_json(a)}};
        dot = element_to_dot(a, "free_arrow");
    } else if (kind == "opetope") {
        int dim = field(doc, "export", "dim").get<int>();
        Element c = element_from_json(field(doc, "export", "cell"));
        if (!opetope_well_formed(c, dim)) bad("export", "not an opetope of that dimension");
        out = Json{{"kind", "opetope"}, {"dim", dim}, {"cell", element_to_json(c)}};
        dot = element_to_dot(c, "opetope");
    } else {
        bad("export", "unknown kind \"" + kind + "\"");
    }
    if (format == "dot") {
        rep["dot"] = dot;
        rep["status"] = "pass";
        return {0, rep, dot};
    }
    rep["output"] = out;
    return finish(rep, true);
}

} // namespace

CommandResult run_command(const std::string& command, const Json& options, const Json& input) {
    try {
        if (command == "check-monad") return cmd_check_monad(options, input);
        if (command == "check-multicat") return cmd_check_multicat(options, input);
        if (command == "check-map") return cmd_check_map(options, input);
        if (command == "check-algebra") return cmd_check_algebra(options, input);
        if (command == "compose-spans") return cmd_compose_spans(options, input);
        if (command == "free") return cmd_free(options, input);
        if (command == "opetopes") return cmd_opetopes(options, input);
        if (command == "algebras") return cmd_algebras(options, input);
        if (command == "endo") return cmd_endo(options, input);
        if (command == "slice") return cmd_slice(options, input);
        if (command == "transport") return cmd_transport(options, input);
        if (command == "structured") return cmd_structured(options, input);
        if (command == "recover") return cmd_recover(options, input);
        if (command == "export") return cmd_export(options, input);
        throw SchemaError("unknown command \"" + command + "\"");
    } catch (const GuardError& e) {
        Json rep{{"command", command}, {"error", e.what()}, {"status", "guard"}};
        return {3, rep, std::nullopt};
    } catch (const SchemaError& e) {
        Json rep{{"command", command}, {"error", e.what()}, {"status", "error"}};
        return {2, rep, std::nullopt};
    } catch (const Error& e) {
        Json rep{{"command", command}, {"error", e.what()}, {"status", "error"}};
        return {2, rep, std::nullopt};
    } catch (const std::exception& e) {
        // json type errors from malformed documents land here
        Json rep{{"command", command}, {"error", e.what()}, {"status", "error"}};
        return {2, rep, std::nullopt};
    }
}

CommandResult run_command_strings(const std::string& command, const std::string& options_json,
                                  const std::string& input_json) {
    Json options = Json::parse(options_json, nullptr, false);
    Json input = Json::parse(input_json, nullptr, false);
    if (options.is_discarded()) {
        Json rep{{"command", command}, {"error", "options are not valid JSON"},
                 {"status", "error"}};
        return {2, rep, std::nullopt};
    }
    if (input.is_discarded()) {
        Json rep{{"command", command}, {"error", "input is not valid JSON"}, {"status", "error"}};
        return {2, rep, std::nullopt};
    }
    return run_command(command, options, input);
}

} // namespace tmcat
