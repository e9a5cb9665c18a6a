#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flseq/report.hpp"

namespace {

using flseq::json;

constexpr int kExitValidation = 2;
constexpr int kExitSearch = 3;
constexpr int kExitIo = 4;
constexpr int kExitUnsupported = 5;

int exit_code_for(const flseq::Error& e) {
    switch (e.code()) {
        case flseq::ErrorCode::NotFound:
            return kExitSearch;
        case flseq::ErrorCode::IoError:
            return kExitIo;
        case flseq::ErrorCode::CompositeCharacterOrder:
            return kExitUnsupported;
        default:
            return kExitValidation;
    }
}

struct FieldOpts {
    uint64_t q = 0;
    uint32_t p = 0;
    uint32_t m = 1;
    std::string field_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "field size as a prime power");
        cmd->add_option("--p", p, "prime characteristic");
        cmd->add_option("--m", m, "extension degree (with --p)");
        cmd->add_option("--field-file", field_file,
                        "JSON field description {\"p\",\"m\",\"modulus\"}");
    }

    std::unique_ptr<flseq::Field> make_field() const {
        if (!field_file.empty())
            return flseq::field_from_json(flseq::load_json_file(field_file));
        if (q != 0) {
            auto [fp, fm] = flseq::factor_prime_power(q);
            return std::make_unique<flseq::Field>(fp, fm);
        }
        if (p != 0) return std::make_unique<flseq::Field>(p, m);
        throw flseq::Error(flseq::ErrorCode::BadInput,
                           "give --q, --p/--m, or --field-file");
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        flseq::write_text_file(out_path, text);
    }
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character sequences from fractional linear maps over finite fields"};
    app.require_subcommand(1);

    FieldOpts psi_field, family_field, report_field;
    std::string out_path, format = "json", phis_text = "coset-distinct";
    uint64_t char_order = 2;
    uint64_t seed = 1;
    size_t periods = 2;

    auto* cmd_psi = app.add_subcommand("psi", "find the full-cycle map psi and its orbit");
    psi_field.attach(cmd_psi);
    std::string psi_out;
    cmd_psi->add_option("--out", psi_out, "output path (default stdout)");

    auto* cmd_family = app.add_subcommand("family", "build a sequence family");
    family_field.attach(cmd_family);
    cmd_family->add_option("--char-order", char_order, "character order d (must divide q-1)");
    cmd_family->add_option("--phis", phis_text, "all | coset-distinct | sample:K[,seed=S]");
    cmd_family->add_option("--seed", seed, "seed for sample strategy");
    cmd_family->add_option("--out", out_path, "output path (default stdout)");
    cmd_family->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_correlate = app.add_subcommand("correlate", "correlation spectra and T(A)");
    std::string correlate_input, correlate_out, correlate_format = "json";
    bool pairs = false;
    cmd_correlate->add_option("family_file", correlate_input, "family JSON file")
        ->required();
    cmd_correlate->add_flag("--pairs", pairs, "emit pairwise cross spectra");
    cmd_correlate->add_option("--out", correlate_out, "output path (default stdout)");
    cmd_correlate->add_option("--format", correlate_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_bounds = app.add_subcommand("bounds", "evaluate the correlation bounds");
    uint64_t bound_n = 0, bound_m = 0;
    double measured = -1.0;
    std::string bounds_out;
    cmd_bounds->add_option("--N", bound_n, "sequence length");
    cmd_bounds->add_option("--M", bound_m, "family size");
    cmd_bounds->add_option("--measured", measured, "measured T(A) to check against Welch");
    cmd_bounds->add_option("--out", bounds_out, "output path (default stdout)");

    auto* cmd_kerdock = cmd_bounds->add_subcommand(
        "kerdock", "Kerdock parameters and the antipodal-code bound");
    uint32_t kerdock_m = 4;
    cmd_kerdock->add_option("--m", kerdock_m, "even exponent, n = 2^m")->required();

    auto* cmd_linspan = app.add_subcommand("linspan", "linear span via recursion synthesis");
    std::string linspan_input, linspan_out;
    cmd_linspan->add_option("family_file", linspan_input, "family JSON file")->required();
    cmd_linspan->add_option("--periods", periods, "periods fed to the synthesis (default 2)");
    cmd_linspan->add_option("--out", linspan_out, "output path (default stdout)");

    auto* cmd_report = app.add_subcommand("report", "one-shot pipeline");
    report_field.attach(cmd_report);
    uint64_t report_char_order = 2;
    std::string report_phis = "coset-distinct", report_out;
    uint64_t report_seed = 1;
    size_t report_periods = 2;
    cmd_report->add_option("--char-order", report_char_order, "character order d");
    cmd_report->add_option("--phis", report_phis, "all | coset-distinct | sample:K[,seed=S]");
    cmd_report->add_option("--seed", report_seed, "seed for sample strategy");
    cmd_report->add_option("--periods", report_periods, "periods for linear span");
    cmd_report->add_option("--out", report_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (cmd_psi->parsed()) {
            auto field = psi_field.make_field();
            emit_json(flseq::psi_report(*field), psi_out);
            return 0;
        }

        if (cmd_family->parsed()) {
            auto field = family_field.make_field();
            flseq::MoebiusMap psi = flseq::find_psi(*field);
            flseq::Character chi = flseq::Character::by_order(*field, char_order);
            flseq::PhiStrategy strategy = flseq::PhiStrategy::parse(phis_text);
            if (strategy.kind == flseq::PhiStrategy::Kind::Sample &&
                phis_text.find("seed=") == std::string::npos)
                strategy.seed = seed;
            flseq::Family fam =
                flseq::build_family(flseq::select_phis(*field, strategy, psi), psi, chi);
            if (format == "csv") {
                if (out_path.empty()) {
                    emit(flseq::family_to_csv(fam), "");
                } else {
                    flseq::write_text_file(out_path, flseq::family_to_csv(fam));
                    flseq::write_text_file(out_path + ".manifest.json",
                                           flseq::family_to_json(fam).dump(2) + "\n");
                }
            } else {
                emit_json(flseq::family_to_json(fam), out_path);
            }
            return 0;
        }

        if (cmd_correlate->parsed()) {
            flseq::LoadedFamily loaded =
                flseq::family_from_json(flseq::load_json_file(correlate_input));
            if (correlate_format == "csv")
                emit(flseq::correlate_csv(loaded.family), correlate_out);
            else
                emit_json(flseq::correlate_report(loaded.family, pairs), correlate_out);
            return 0;
        }

        if (cmd_bounds->parsed()) {
            if (cmd_kerdock->parsed()) {
                emit_json(flseq::kerdock_report(kerdock_m), bounds_out);
                return 0;
            }
            if (bound_n == 0 || bound_m == 0)
                throw flseq::Error(flseq::ErrorCode::BadInput,
                                   "bounds needs positive --N and --M");
            std::optional<double> measured_opt;
            if (measured >= 0.0) measured_opt = measured;
            emit_json(flseq::bounds_report(bound_n, bound_m, measured_opt), bounds_out);
            return 0;
        }

        if (cmd_linspan->parsed()) {
            flseq::LoadedFamily loaded =
                flseq::family_from_json(flseq::load_json_file(linspan_input));
            emit_json(flseq::linspan_report(loaded.family, periods), linspan_out);
            return 0;
        }

        if (cmd_report->parsed()) {
            auto field = report_field.make_field();
            flseq::RunConfig config;
            config.p = field->characteristic();
            config.m = field->degree();
            config.modulus = field->modulus();
            config.char_order = report_char_order;
            config.phis = flseq::PhiStrategy::parse(report_phis);
            if (config.phis.kind == flseq::PhiStrategy::Kind::Sample &&
                report_phis.find("seed=") == std::string::npos)
                config.phis.seed = report_seed;
            config.periods = report_periods;
            emit_json(flseq::full_report(config), report_out);
            return 0;
        }
    } catch (const flseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
