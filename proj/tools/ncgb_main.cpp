// ncgb: Groebner bases, minimal generating sets and standard bases in the
// free associative algebra.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ncgb/commands.hpp"

namespace {

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in)
        throw ncgb::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Noncommutative Groebner bases over weighted-graded free algebras"};
    app.require_subcommand(1);

    std::string path;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "Problem file (default: stdin)");
    };

    std::optional<int> max_deg;
    std::optional<std::size_t> max_elems;
    auto* gb = app.add_subcommand("gb", "Complete the generators to a Groebner basis (needs a guard)");
    add_input(gb);
    gb->add_option("--max-deg", max_deg, "Leave obstructions above this degree pending");
    gb->add_option("--max-elems", max_elems, "Stop once the basis has this many elements");

    int trunc_deg = 0;
    auto* truncate = app.add_subcommand("truncate", "Degree-truncated Groebner basis of homogeneous generators");
    add_input(truncate);
    truncate->add_option("--deg", trunc_deg, "Truncation degree")->required();

    bool with_basis = false;
    auto* mingen = app.add_subcommand("mingen", "Minimal homogeneous generating subset");
    add_input(mingen);
    mingen->add_flag("--with-basis", with_basis, "Also print the truncated Groebner basis");

    std::optional<int> certify_deg;
    auto* stdbasis = app.add_subcommand("stdbasis", "Minimal standard basis from a Groebner basis");
    add_input(stdbasis);
    stdbasis->add_option("--certify-deg", certify_deg, "Certify the Groebner property up to this degree");

    std::string poly;
    bool certificate = false;
    auto* reduce = app.add_subcommand("reduce", "Remainder of a polynomial on division by the generators");
    add_input(reduce);
    reduce->add_option("--poly", poly, "Polynomial to reduce")->required();
    reduce->add_flag("--certificate", certificate, "Print the full division representation");

    int dims_deg = 0;
    bool json = false;
    ncgb::OracleLimits limits;
    auto* dims = app.add_subcommand("dims", "Per-degree dimensions and minimal generator counts by linear algebra");
    add_input(dims);
    dims->add_option("--deg", dims_deg, "Largest degree")->required();
    dims->add_flag("--json", json, "Emit JSON");
    dims->add_option("--max-words", limits.max_words, "Refuse degrees with more words than this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ncgb::kExitOk : ncgb::kExitInputError;
    }

    try {
        ncgb::ProblemFile problem = ncgb::parse_problem(read_input(path));
        if (gb->parsed()) {
            ncgb::CompletionGuard guard{max_deg, max_elems};
            if (!max_deg && !max_elems)
                throw ncgb::Error("gb requires --max-deg or --max-elems");
            return ncgb::run_gb(problem, guard, std::cout, std::cerr);
        }
        if (truncate->parsed())
            return ncgb::run_truncate(problem, trunc_deg, std::cout, std::cerr);
        if (mingen->parsed())
            return ncgb::run_mingen(problem, with_basis, std::cout, std::cerr);
        if (stdbasis->parsed())
            return ncgb::run_stdbasis(problem, certify_deg, std::cout, std::cerr);
        if (reduce->parsed())
            return ncgb::run_reduce(problem, poly, certificate, std::cout, std::cerr);
        if (dims->parsed())
            return ncgb::run_dims(problem, dims_deg, json, limits, std::cout, std::cerr);
    } catch (const ncgb::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return ncgb::kExitInternalError;
    } catch (const ncgb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ncgb::kExitInputError;
    }
    return ncgb::kExitInputError;
}
