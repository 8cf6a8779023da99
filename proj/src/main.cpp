#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ris/commands.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitDomainError = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-bit column-biased reflective surface design toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string mask_path;
    std::string device_path;
    std::string measurements_path;
    std::string initial_path;
    std::string params_out_path;

    CLI::App* synthesize =
        app.add_subcommand("synthesize", "Optimize a column mask for a scene");
    synthesize->add_option("--config", config_path, "Scenario config file")
        ->required();

    CLI::App* sweep =
        app.add_subcommand("sweep", "Enhancement vs frequency CSV over the band");
    sweep->add_option("--config", config_path, "Scenario config file")->required();

    CLI::App* cut =
        app.add_subcommand("cut", "Far-field pattern cut CSV in the x-z plane");
    cut->add_option("--config", config_path, "Scenario config file")->required();

    CLI::App* link =
        app.add_subcommand("link", "Two-hop link budget CSV over the band");
    link->add_option("--config", config_path, "Scenario config file")->required();

    CLI::App* encode =
        app.add_subcommand("encode", "Emit the controller frame for a mask file");
    encode->add_option("--mask", mask_path, "Mask JSON file")->required();
    encode->add_option("--device", device_path,
                       "Write raw frame bytes to this path instead of hex text");

    CLI::App* switch_fit = app.add_subcommand(
        "switch-fit", "Fit the shunt switch model to measurement CSV");
    switch_fit
        ->add_option("--measurements", measurements_path,
                     "CSV with header state,f_ghz,s21_db")
        ->required();
    switch_fit->add_option("--initial", initial_path,
                           "Initial parameter key-value file");
    switch_fit->add_option("--out", params_out_path,
                           "Write fitted parameters to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (synthesize->parsed())
            return ris::cmd_synthesize(ris::load_scenario(config_path), std::cout);
        if (sweep->parsed())
            return ris::cmd_sweep(ris::load_scenario(config_path), std::cout);
        if (cut->parsed())
            return ris::cmd_cut(ris::load_scenario(config_path), std::cout);
        if (link->parsed())
            return ris::cmd_link(ris::load_scenario(config_path), std::cout);
        if (encode->parsed())
            return ris::cmd_encode(mask_path, device_path, std::cout);
        if (switch_fit->parsed())
            return ris::cmd_switch_fit(measurements_path, initial_path,
                                       params_out_path, std::cout);
    } catch (const ris::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const ris::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
