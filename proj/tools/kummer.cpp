// kummer: Poincare polynomials of crepant resolutions of torus quotients.

#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kummer/error.hpp"
#include "kummer/groupcore/catalog.hpp"
#include "kummer_app/pipeline.hpp"

namespace {

constexpr int kInputError = 2;

int list_command(const std::string& filter) {
    for (const auto& e : kummer::list_catalog(filter)) std::cout << e.name << ": " << e.description << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Poincare polynomials of crepant resolutions of torus quotients A^r/G"};
    cli.require_subcommand(1);

    kummer::app::JobSpec job;
    std::string mode = "integral";
    std::string format = "text";
    auto* run = cli.add_subcommand("run", "Stratify a quotient and assemble its resolution polynomial");
    run->add_option("--mode", mode, "integral | analytic | ledger")
        ->check(CLI::IsMember({"integral", "analytic", "ledger"}));
    auto* catalog = run->add_option("--catalog", job.catalog, "Catalog entry name (see `kummer list`)");
    auto* input = run->add_option("--input", job.input, "JSON document: group spec, analytic spec or ledger");
    catalog->excludes(input);
    run->add_option("--d", job.d, "Complex dimension d of the abelian variety A")->check(CLI::PositiveNumber);
    run->add_option("--oracle", job.oracle, "Cross-check fixed-point counts against N-torsion enumeration")
        ->check(CLI::PositiveNumber);
    run->add_flag("--equivariant", job.equivariant, "Report every component orbit with its Weyl-equivariant fiber");
    run->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--max-group-order", job.max_group_order, "Abort group generation beyond this order");
    run->add_option("--max-enumeration", job.max_enumeration, "Budget for brute-force enumerations");

    std::string filter;
    auto* list = cli.add_subcommand("list", "List catalog entries");
    list->add_option("filter", filter, "Substring to match");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    if (*list) return list_command(filter);

    try {
        job.mode = kummer::app::parse_mode(mode);
        job.format = format == "json" ? kummer::app::Format::Json : kummer::app::Format::Text;
        const auto report = kummer::app::run(job);
        std::cout << (job.format == kummer::app::Format::Json ? kummer::app::emit_json(report)
                                                              : kummer::app::render_text(report));
        return kummer::app::exit_code(report);
    } catch (const kummer::Error& e) {
        std::cerr << "kummer: " << kummer::to_string(e.code()) << ": " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "kummer: malformed document: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "kummer: " << e.what() << '\n';
    }
    return kInputError;
}
