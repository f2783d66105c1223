#include "tmcat/commands.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _WIN32
#include <io.h>
#define TMCAT_ISATTY _isatty(_fileno(stdin))
#else
#include <unistd.h>
#define TMCAT_ISATTY isatty(fileno(stdin))
#endif

using tmcat::Json;

namespace {

int emit_error(const std::string& command, const std::string& message) {
    Json rep{{"command", command}, {"error", message}, {"status", "error"}};
    std::cout << rep.dump(2) << "\n";
    return 2;
}

// --input wins; otherwise piped stdin; an interactive terminal means no input
Json read_input(const std::string& path, const std::string& command, bool& failed) {
    std::string text;
    if (!path.empty()) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            failed = true;
            emit_error(command, "cannot read " + path);
            return nullptr;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else if (!TMCAT_ISATTY) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }
    if (text.empty()) return nullptr;
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        failed = true;
        emit_error(command, "input is not valid JSON");
        return nullptr;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"checks and constructions for generalized multicategories "
                 "over cartesian monads on finite sets"};
    app.require_subcommand(1);

    std::string input_path;
    app.add_option("--input", input_path, "read the input document from a file")
        ->capture_default_str();

    long long cap = -1;
    app.add_option("--cap", cap, "enumeration guard (default 100000)");

    std::string name, mode, format;
    int bound = -1, max_base = -1, max_nodes = -1, dim = -1, size = -1;
    int max_size = -1, max_arity = -1, tensor_bound = -1;
    bool check = false;
    std::vector<int> hom;

    auto* c_monad = app.add_subcommand("check-monad", "monad laws and cartesianness over small bases");
    c_monad->add_option("--name", name, "plugin name (parameterized monads need a document)");
    c_monad->add_option("--bound", bound, "term size bound (default 4)");
    c_monad->add_option("--max-base", max_base, "largest base set (default 3)");

    app.add_subcommand("check-multicat", "multicategory axioms");
    app.add_subcommand("check-map", "functoriality of a map between multicategories");
    app.add_subcommand("check-algebra", "algebra laws over a multicategory");
    app.add_subcommand("compose-spans", "compose two spans");

    auto* c_free = app.add_subcommand("free", "free multicategory on a signature");
    c_free->add_option("--max-nodes", max_nodes, "generator count bound (default 3)");

    auto* c_ope = app.add_subcommand("opetopes", "enumerate opetopes");
    c_ope->add_option("--dim", dim, "dimension")->required();
    c_ope->add_option("--size", size, "size bound (default 3)");

    auto* c_alg = app.add_subcommand("algebras", "enumerate algebras over small carriers");
    c_alg->add_option("--max-size", max_size, "largest carrier (default 2)");

    auto* c_endo = app.add_subcommand("endo", "endomorphism operad of a finite set");
    c_endo->add_option("--size", size, "carrier size when no document is given (default 2)");
    c_endo->add_option("--max-arity", max_arity, "arity bound (default 2)");

    app.add_subcommand("slice", "slice multicategory over an algebra");

    auto* c_tr = app.add_subcommand("transport", "move a multicategory along a shape translation");
    c_tr->add_option("--mode", mode, "composition or pullback (default composition)");
    c_tr->add_option("--bound", bound, "shape search bound for pullback (default 3)");
    c_tr->add_flag("--check", check, "check the translation laws first");

    auto* c_st = app.add_subcommand("structured", "term category of a multicategory");
    c_st->add_option("--bound", bound, "term size bound (default 3)");
    c_st->add_option("--tensor-bound", tensor_bound, "tensor table bound (default 2)");
    c_st->add_option("--hom", hom, "count arrows between two object indices")->expected(2);
    c_st->add_flag("--check", check, "check category and tensor laws");

    app.add_subcommand("recover", "round trip a multicategory through its monad data");

    auto* c_exp = app.add_subcommand("export", "re-emit a document as json or dot");
    c_exp->add_option("--format", format, "json or dot (default json)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();

    Json options = Json::object();
    if (cap >= 0) options["cap"] = cap;
    if (!name.empty()) options["name"] = name;
    if (bound >= 0) options["bound"] = bound;
    if (max_base >= 0) options["max_base"] = max_base;
    if (max_nodes >= 0) options["max_nodes"] = max_nodes;
    if (dim >= 0) options["dim"] = dim;
    if (size >= 0) options["size"] = size;
    if (max_size >= 0) options["max_size"] = max_size;
    if (max_arity >= 0) options["max_arity"] = max_arity;
    if (tensor_bound >= 0) options["tensor_bound"] = tensor_bound;
    if (!mode.empty()) options["mode"] = mode;
    if (!format.empty()) options["format"] = format;
    if (check) options["check"] = true;
    if (!hom.empty()) options["hom"] = hom;

    bool failed = false;
    Json input = read_input(input_path, command, failed);
    if (failed) return 2;

    tmcat::CommandResult result = tmcat::run_command(command, options, input);
    if (result.raw) {
        std::cout << *result.raw;
        if (result.raw->empty() || result.raw->back() != '\n') std::cout << "\n";
    } else {
        std::cout << result.report.dump(2) << "\n";
    }
    return result.status;
}
