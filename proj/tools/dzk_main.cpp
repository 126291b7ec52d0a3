#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dzk/manifest.hpp"
#include "dzk/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"dzk - numerical laboratory for the dispersion-generalized "
                 "Zakharov-Kuznetsov equation on R x T"};
    app.require_subcommand(1);

    std::string manifest_path;
    auto* run = app.add_subcommand("run", "execute an experiment manifest");
    run->add_option("manifest", manifest_path, "path to a JSON manifest")->required();

    std::string report_dir;
    auto* rep = app.add_subcommand("report", "summarize results in a directory");
    rep->add_option("dir", report_dir, "directory holding one or more runs")->required();

    app.add_subcommand("schema", "print the manifest schema");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const dzk::Manifest m = dzk::Manifest::from_file(manifest_path);
            const dzk::RunResult result = dzk::run_manifest(m);
            for (const auto& v : result.verdicts)
                std::cout << (v.pass ? "PASS " : "FAIL ") << v.name << ": " << v.detail
                          << "\n";
            std::cout << (result.ok() ? "OK" : "FAILED") << " -> "
                      << m.output_dir.string() << "\n";
            return result.ok() ? 0 : 1;
        }
        if (rep->parsed()) return dzk::report(report_dir, std::cout);
        std::cout << dzk::Manifest::schema();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
