#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "huberbound/invariants.hpp"
#include "huberbound/ledger.hpp"
#include "huberbound/spectrum.hpp"
#include "huberbound/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLemmaFail = 3;

struct GlobalFlags {
    long precision_bits = 128;
    int threads = 1;
    int decimals = 6;
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int run(int argc, char** argv) {
    CLI::App app{"length spectra and effective prime-geodesic constants for cofinite Fuchsian groups"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--precision-bits", g.precision_bits, "working precision in bits (>= 64)")
        ->envname("HUBERBOUND_PRECISION_BITS")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--threads", g.threads, "worker threads for the discriminant sweep")
        ->check(CLI::Range(1, 256));
    app.add_option("--decimal-places", g.decimals, "decimal places in CSV output")
        ->check(CLI::Range(2, 30));

    double max_norm = 0;
    long level = 0;
    std::string out_path, invariants_path, mode = "cofinite", preset;
    bool header = false;

    auto* sp = app.add_subcommand("spectrum", "primitive length spectrum of the modular group");
    sp->add_option("--max-norm", max_norm, "completeness bound (norms <= this value)")->required();
    sp->add_option("--out", out_path, "output CSV path (default: stdout)");
    sp->add_flag("--header", header, "emit a header row");

    auto* sl = app.add_subcommand("split", "length spectrum of a principal congruence subgroup");
    sl->add_option("--level", level, "congruence level N >= 2")->required()->check(CLI::Range(2L, 1000000L));
    sl->add_option("--max-norm", max_norm, "completeness bound")->required();
    sl->add_option("--out", out_path, "output CSV path (default: stdout)");
    sl->add_flag("--header", header, "emit a header row");

    auto* co = app.add_subcommand("constants", "evaluate the constant ledger");
    co->add_option("--invariants", invariants_path, "invariants config file (key = value)");
    co->add_option("--mode", mode, "cocompact or cofinite")
        ->check(CLI::IsMember({"cocompact", "cofinite"}));
    co->add_option("--preset", preset, "bundled inputs (psl2z)")->check(CLI::IsMember({"psl2z"}));
    co->add_option("--out", out_path, "output path (default: stdout)");

    auto* vp = app.add_subcommand("verify-pgt", "prime-geodesic verification table + Huber estimate");
    vp->add_option("--max-norm", max_norm, "completeness bound")->required();
    vp->add_option("--preset", preset, "bundled inputs (psl2z)")->check(CLI::IsMember({"psl2z"}));
    vp->add_option("--out", out_path, "output CSV path (default: stdout)");

    auto* cl = app.add_subcommand("check-lemmas", "numerical certification of the term bounds");
    cl->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    hb::Real::set_default_precision(g.precision_bits);
    long prec = g.precision_bits;

    std::ofstream file;
    if (sp->parsed()) {
        auto s = hb::modular_spectrum(hb::Real(max_norm, prec), g.threads);
        hb::export_csv(s, open_out(file, out_path), {g.decimals, header});
        return kExitOk;
    }
    if (sl->parsed()) {
        auto base = hb::modular_spectrum(hb::Real(max_norm, prec), g.threads);
        auto s = hb::split_spectrum(base, level, hb::Real(max_norm, prec));
        hb::export_csv(s, open_out(file, out_path), {g.decimals, header});
        return kExitOk;
    }
    if (co->parsed()) {
        hb::FundamentalInvariants inv;
        if (preset == "psl2z") {
            inv = hb::psl2z_preset(prec);
        } else if (!invariants_path.empty()) {
            inv = hb::load_invariants(invariants_path, prec);
        } else {
            std::cerr << "constants: need --preset or --invariants\n";
            return kExitUsage;
        }
        hb::ConstantLedger led = (mode == "cocompact") ? hb::cocompact_ledger(inv)
                                                       : hb::cofinite_ledger(inv);
        open_out(file, out_path) << hb::ledger_report(led);
        return kExitOk;
    }
    if (vp->parsed()) {
        if (!preset.empty() && preset != "psl2z") {
            std::cerr << "verify-pgt: unknown preset\n";
            return kExitUsage;
        }
        auto s = hb::modular_spectrum(hb::Real(max_norm, prec), g.threads);
        if (s.entries.empty()) {
            std::cerr << "verify-pgt: spectrum empty below smallest norm\n";
            return kExitDomain;
        }
        std::vector<hb::Real> small_s = {hb::Real(1.0, prec)};
        hb::PgtOptions po;
        po.tie_order = &hb::modular_reference_tie_order();
        auto rows = hb::pgt_table(s, small_s, po);
        auto& out = open_out(file, out_path);
        hb::export_pgt_csv(rows, out, g.decimals);
        auto eh = hb::empirical_huber(s, small_s);
        out << "# empirical huber constant (post-jump statistic): "
            << eh.jump_value.str_sig(10) << " at x = " << eh.jump_at.str_sig(10) << "\n";
        out << "# one-sided supremum over jumps and grid:          "
            << eh.sup_value.str_sig(10) << " at x = " << eh.sup_at.str_sig(10) << " ("
            << eh.sup_side << " side)\n";
        return kExitOk;
    }
    if (cl->parsed()) {
        auto reports = hb::lemma_suite();
        auto bump = hb::bump_constants();
        auto& out = open_out(file, out_path);
        out << hb::lemma_report_text(reports);
        out << "bump constants: c0 = " << bump.c0.str_sig(10)
            << ", max |phi''| = " << bump.phi_pp_max.str_sig(10) << " (bound 106)\n";
        out << hb::lemma_report_text({bump.c1_margin, bump.c2_margin});
        bool ok = bump.c1_margin.pass && bump.c2_margin.pass &&
                  bump.phi_pp_max <= hb::Real(106.0, prec);
        for (const auto& r : reports) ok = ok && (r.pass || r.report_only);
        return ok ? kExitOk : kExitLemmaFail;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
