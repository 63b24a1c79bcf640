// cloudcover: exact-arithmetic cloud covering toolkit CLI.
//
// Runs scene-file tasks through the extend / collineate / projective /
// schmerl / decompose / verify pipelines and writes report.json,
// report.csv and optional plot_*.csv files.

#include "cloudcover/harness.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_subcommand(const std::string& kind, const std::string& scene_path,
                   const cloudcover::TaskOverrides& overrides, const std::string& out_dir,
                   bool plot) {
    std::ifstream in(scene_path);
    if (!in) {
        std::cerr << "error: cannot open scene file '" << scene_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    cloudcover::SceneFile scene;
    try {
        scene = cloudcover::parse_scene(buffer.str());
    } catch (const cloudcover::Error& e) {
        std::cerr << "scene error: " << e.what() << "\n";
        return 2;
    }

    std::vector<cloudcover::Report> reports;
    bool all_pass = true;
    try {
        for (const auto& task : scene.tasks) {
            if (task.kind != kind) continue;
            cloudcover::Report r = cloudcover::run_task(scene, task, overrides);
            std::cerr << "task " << r.task_name << ": " << (r.pass() ? "pass" : "FAIL") << " ("
                      << r.elapsed_seconds << "s)\n";
            all_pass = all_pass && r.pass();
            reports.push_back(std::move(r));
        }
    } catch (const cloudcover::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    if (reports.empty()) {
        std::cerr << "error: scene has no '" << kind << "' task\n";
        return 2;
    }

    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/report.json") << cloudcover::reports_to_json(reports);
    std::ofstream(out_dir + "/report.csv") << cloudcover::reports_to_csv(reports);

    if (plot) {
        for (const auto& spec : scene.cloud_specs) {
            const cloudcover::Cloud& cloud = scene.cloud(spec.name);
            if (cloud.dim != 2 && cloud.dim != 3) continue;
            try {
                std::ofstream(out_dir + "/plot_" + spec.name + ".csv")
                    << cloudcover::emit_plot_data(cloud, 64);
            } catch (const cloudcover::Error& e) {
                std::cerr << "plot skipped for " << spec.name << ": " << e.what() << "\n";
            }
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cloud-covering toolkit"};
    app.require_subcommand(1);

    std::string scene_path, out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    bool plot = false;

    const char* kinds[] = {"extend", "collineate", "projective", "schmerl", "decompose", "verify"};
    for (const char* kind : kinds) {
        auto* sub = app.add_subcommand(kind, std::string("run '") + kind + "' scene tasks");
        sub->add_option("--scene", scene_path, "scene file")->required();
        sub->add_option("--seed", seed, "override task seeds");
        sub->add_option("--samples", samples, "override task sample counts");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_flag("--plot", plot, "emit plot_*.csv sample files");
    }

    CLI11_PARSE(app, argc, argv);
    std::string kind = app.get_subcommands().front()->get_name();
    return run_subcommand(kind, scene_path, {seed, samples}, out_dir, plot);
}
