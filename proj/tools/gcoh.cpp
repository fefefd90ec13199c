#include "gcoh/cli.hpp"
#include "gcoh/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using namespace gcoh;
    CLI::App app{"Exact cohomology of carried groupoids, bundles and gerbes"};
    app.require_subcommand(1);
    app.fallthrough();

    JobSpec job;
    std::vector<std::string> inputs;
    app.add_option("--coeff", job.coeff, "Z, Q, QmodZ or Zmod:n")->default_val("Z");
    app.add_option("--max-degree", job.max_degree, "top degree");
    app.add_option("--fiber-order", job.fiber_order, "N for extensions");
    app.add_option("--cell-cap", job.cell_cap, "size guard")->default_val(200000);
    app.add_option("--out", job.out, "write the JSON report here");
    app.add_option("--format", job.format, "json or table")->check(CLI::IsMember({"json", "table"}))->default_val("json");

    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("inputs", inputs, "input documents")->required()->check(CLI::ExistingFile);
    }
    std::string job_path;
    auto* run_cmd = app.add_subcommand("run", "run a job document");
    run_cmd->add_option("job", job_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run_cmd->parsed()) {
        try {
            auto cli = job;
            job = job_from_json(load_json(job_path), std::filesystem::path(job_path).parent_path());
            if (!cli.out.empty()) job.out = cli.out;
        } catch (const gcoh::Error& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
    } else {
        job.command = app.get_subcommands().front()->get_name();
        for (const auto& p : inputs) job.inputs.emplace_back(p);
    }

    auto result = run(job);
    if (!job.out.empty()) {
        std::ofstream out(job.out, std::ios::binary);
        out << render_json(result.report);
        if (!out) {
            std::cerr << "cannot write " << job.out << "\n";
            return 1;
        }
    }
    std::cout << (job.format == "table" ? render_table(result.report) : render_json(result.report));
    return result.exit_code;
}
