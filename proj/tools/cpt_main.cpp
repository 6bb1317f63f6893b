#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cpt/cp_decision.hpp"
#include "cpt/hypergraph.hpp"
#include "cpt/io.hpp"
#include "cpt/oracle.hpp"
#include "cpt/sym_tensor.hpp"

namespace {

using cpt::io::json;

struct CommonOptions {
    std::string input;
    std::string format = "pretty";

    bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("input", opts.input, "input file (cpt-tensor or cpt-hypergraph)")
        ->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"pretty", "structured"}))
        ->capture_default_str();
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

// Loads either file kind and presents it as a hypergraph plus, when the input
// was a tensor, the tensor itself.
struct LoadedInput {
    cpt::MultiHypergraph hypergraph;
    std::optional<cpt::SymTensor> tensor;
    const char* kind;
};

LoadedInput load_as_hypergraph(const std::string& path) {
    if (cpt::io::sniff_kind(path) == cpt::io::FileKind::tensor) {
        cpt::SymTensor tensor = cpt::io::load_tensor_file(path);
        cpt::MultiHypergraph hg = cpt::from_pattern(cpt::pattern(tensor));
        return LoadedInput{std::move(hg), std::move(tensor), "tensor"};
    }
    auto loaded = cpt::io::load_hypergraph_file(path);
    print_warnings(loaded.warnings);
    return LoadedInput{std::move(loaded.hypergraph), std::nullopt, "hypergraph"};
}

std::string format_base_list(const std::vector<cpt::Base>& bases) {
    if (bases.empty()) return "none";
    std::string out;
    for (const auto& b : bases) {
        if (!out.empty()) out += " ";
        out += cpt::io::format_base(b);
    }
    return out;
}

std::string format_int_set(const std::vector<int>& values) {
    if (values.empty()) return "none";
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

void print_certificate(const cpt::CpCertificate& cert) {
    std::cout << "certificate (q=" << cert.total_vectors() << "):";
    if (cert.vectors().empty()) std::cout << " empty sum";
    for (const auto& factor : cert.vectors()) {
        std::cout << " " << cpt::io::format_base(factor.support) << " x" << factor.multiplicity;
    }
    std::cout << "\n";
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int run_analyze(const CommonOptions& opts) {
    const LoadedInput input = load_as_hypergraph(opts.input);
    const auto& hg = input.hypergraph;

    const auto counts = cpt::edge_counts(hg);
    const auto parts = cpt::branches(hg);
    const auto property_r = cpt::has_property_R(hg);
    const auto corollary = cpt::corollary_check(hg);
    const auto dominance = input.tensor ? cpt::zero_entry_dominance(*input.tensor)
                                        : cpt::zero_entry_dominance(
                                              cpt::associated_tensor(hg).as_sym_tensor());

    std::optional<cpt::RankCorank> ranks;
    std::vector<cpt::Base> max_bases;
    std::vector<cpt::Base> min_bases;
    if (!hg.edges().empty()) {
        ranks = cpt::rank_corank(hg);
        max_bases = cpt::maximal_bases(hg);
        min_bases = cpt::minimal_bases(hg);
    }

    if (opts.structured()) {
        json report = {{"command", "analyze"},
                       {"input", opts.input},
                       {"input_kind", input.kind},
                       {"n", hg.dim()},
                       {"m", hg.order()},
                       {"edge_counts",
                        {{"distinct", counts.distinct}, {"ordered", counts.ordered}}}};
        if (ranks) {
            report["rank"] = ranks->rank;
            report["corank"] = ranks->corank;
        } else {
            report["rank"] = nullptr;
            report["corank"] = nullptr;
        }
        json maxb = json::array();
        for (const auto& b : max_bases) maxb.push_back(cpt::io::json_base(b));
        json minb = json::array();
        for (const auto& b : min_bases) minb.push_back(cpt::io::json_base(b));
        report["maximal_bases"] = std::move(maxb);
        report["minimal_bases"] = std::move(minb);
        report["branches"] = cpt::io::json_branches(parts);
        report["property_R"] = cpt::io::json_property_r(property_r);
        report["zero_entry_dominance"] = cpt::io::json_dominance(dominance);
        report["cp_multihypergraph"] = property_r.holds;
        report["corollary_identity"] = cpt::io::json_corollary(corollary);
        emit(report);
        return 0;
    }

    std::cout << "input: " << opts.input << " (" << input.kind << ", n=" << hg.dim()
              << ", m=" << hg.order() << ")\n";
    std::cout << "edges: " << counts.distinct << " distinct, " << counts.ordered << " ordered\n";
    if (ranks) {
        std::cout << "rank: " << ranks->rank << "\n";
        std::cout << "co-rank: " << ranks->corank << "\n";
    } else {
        std::cout << "rank: undefined (no edges)\n";
        std::cout << "co-rank: undefined (no edges)\n";
    }
    std::cout << "maximal bases: " << format_base_list(max_bases) << "\n";
    std::cout << "minimal bases: " << format_base_list(min_bases) << "\n";
    std::cout << "branches: " << format_base_list(parts.branches) << "\n";
    std::cout << "isolated vertices: " << format_int_set(parts.isolated) << "\n";
    if (property_r.holds) {
        std::cout << "Property R: holds\n";
    } else {
        std::cout << "Property R: fails (edge " << cpt::io::format_index(property_r.violation->edge)
                  << " requires missing edge "
                  << cpt::io::format_index(property_r.violation->missing) << ")\n";
    }
    if (dominance.holds) {
        std::cout << "zero-entry dominance: holds\n";
    } else {
        std::cout << "zero-entry dominance: fails (zero at "
                  << cpt::io::format_index(dominance.violation->zero_index) << ", nonzero at "
                  << cpt::io::format_index(dominance.violation->nonzero_index) << ")\n";
    }
    std::cout << "cp multi-hypergraph: " << (property_r.holds ? "yes" : "no") << "\n";
    std::cout << "corollary identity: " << corollary.ordered_edges
              << " ordered edges vs branch power sum " << corollary.branch_power_sum << " -> "
              << (corollary.holds ? "holds" : "does not hold") << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// is-cp
// ---------------------------------------------------------------------------

int run_is_cp(const CommonOptions& opts) {
    const LoadedInput input = load_as_hypergraph(opts.input);
    if (input.tensor && !input.tensor->zero_one_valued()) {
        throw cpt::PreconditionError(
            "is-cp decides (0,1) tensors; this tensor has other values (try 'oracle')");
    }
    const cpt::ZeroOneTensor tensor = cpt::associated_tensor(input.hypergraph);
    const cpt::ZeroOneCpVerdict verdict = cpt::is_zero_one_cp(tensor);

    if (opts.structured()) {
        json report = {{"command", "is-cp"},
                       {"input", opts.input},
                       {"n", tensor.dim()},
                       {"m", tensor.order()},
                       {"verdict", cpt::io::json_cp_verdict(verdict)}};
        emit(report);
        return 0;
    }

    if (verdict.cp) {
        std::cout << "verdict: {0,1}-cp\n";
        print_certificate(*verdict.certificate);
    } else {
        std::cout << "verdict: not {0,1}-cp\n";
        std::cout << "witness branch: " << cpt::io::format_base(*verdict.witness_branch) << "\n";
        std::cout << "missing key: " << cpt::io::format_index(*verdict.missing_key) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// construct-cp
// ---------------------------------------------------------------------------

int run_construct_cp(const CommonOptions& opts, const std::string& output) {
    auto loaded = cpt::io::load_hypergraph_file(opts.input);
    print_warnings(loaded.warnings);
    const cpt::CpConstruction built = cpt::construct_cp_tensor(loaded.hypergraph);

    if (!output.empty()) cpt::io::save_tensor_file(built.tensor, output);

    if (opts.structured()) {
        json report = {{"command", "construct-cp"},
                       {"input", opts.input},
                       {"certificate", cpt::io::json_certificate(built.certificate)},
                       {"tensor", cpt::io::json_tensor(built.tensor)}};
        if (!output.empty()) report["output"] = output;
        emit(report);
        return 0;
    }

    print_certificate(built.certificate);
    std::cout << cpt::render_slices(built.tensor);
    if (!output.empty()) std::cout << "tensor written to " << output << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

int run_decompose(const CommonOptions& opts, int exhaustive_limit) {
    const cpt::SymTensor tensor = cpt::io::load_tensor_file(opts.input);
    const cpt::DecompositionReport report = cpt::decompose(tensor);
    const cpt::ZeroStructureReport zeros = cpt::find_zero_structures(tensor, exhaustive_limit);

    std::optional<cpt::Base> witness;
    std::string witness_note;
    try {
        witness = cpt::reducibility_witness(tensor, exhaustive_limit);
    } catch (const cpt::CapabilityError& e) {
        witness_note = e.what();
    }

    if (opts.structured()) {
        json out = {{"command", "decompose"},
                    {"input", opts.input},
                    {"decomposition", cpt::io::json_decomposition(report)},
                    {"zero_structures", cpt::io::json_zero_structures(zeros)}};
        if (!witness_note.empty()) {
            out["reducibility_witness"] = {{"status", "skipped"}, {"reason", witness_note}};
        } else if (witness) {
            out["reducibility_witness"] = {{"status", "reducible"},
                                           {"witness", cpt::io::json_base(*witness)}};
        } else {
            out["reducibility_witness"] = {{"status", "irreducible"}};
        }
        emit(out);
        return 0;
    }

    std::cout << "permutation:";
    for (int image : report.permutation) std::cout << " " << image;
    std::cout << "\n";
    std::cout << "blocks: " << report.blocks.size() << "\n";
    for (std::size_t i = 0; i < report.blocks.size(); ++i) {
        std::cout << "block " << (i + 1) << " on vertices "
                  << cpt::io::format_base(report.branch_vertex_sets[i]) << ":\n";
        std::cout << cpt::render_slices(report.blocks[i]);
    }
    std::cout << "zero block dimension: " << report.zero_block_dim << "\n";
    if (!witness_note.empty()) {
        std::cout << "reducibility witness: skipped (" << witness_note << ")\n";
    } else if (witness) {
        std::cout << "reducibility witness: " << cpt::io::format_base(*witness) << "\n";
    } else {
        std::cout << "reducibility witness: none (irreducible)\n";
    }
    std::cout << "isolated vertices: " << format_int_set(zeros.isolated) << "\n";
    if (zeros.exhaustive) {
        std::cout << "maximal zero blocks: " << format_base_list(zeros.maximal_zero_blocks)
                  << "\n";
    } else {
        std::cout << "maximal zero blocks: skipped (n exceeds exhaustive limit)\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int run_oracle(const CommonOptions& opts, const cpt::OracleBudget& budget) {
    const cpt::SymTensor tensor = cpt::io::load_tensor_file(opts.input);
    const cpt::OracleVerdict verdict = cpt::oracle_is_cp(tensor, budget);

    std::optional<cpt::OracleRankResult> rank;
    if (verdict.status == cpt::OracleStatus::cp) {
        rank = cpt::oracle_cp_rank(tensor, budget);
    }

    if (opts.structured()) {
        json report = {{"command", "oracle"},
                       {"input", opts.input},
                       {"verdict", cpt::io::json_oracle_verdict(verdict)}};
        if (rank) report["cp_rank"] = cpt::io::json_oracle_rank(*rank);
        emit(report);
    } else {
        switch (verdict.status) {
            case cpt::OracleStatus::cp: std::cout << "status: cp\n"; break;
            case cpt::OracleStatus::not_cp:
                std::cout << "status: not-cp (" << verdict.detail << ")\n";
                break;
            case cpt::OracleStatus::budget_exceeded:
                std::cout << "status: budget-exceeded (" << verdict.detail << ")\n";
                break;
        }
        if (verdict.certificate) print_certificate(*verdict.certificate);
        if (rank && rank->cp_rank) std::cout << "cp-rank: " << *rank->cp_rank << "\n";
        if (rank && rank->certificate) {
            std::cout << "minimal ";
            print_certificate(*rank->certificate);
        }
    }
    return verdict.status == cpt::OracleStatus::budget_exceeded ? 2 : 0;
}

// ---------------------------------------------------------------------------
// pattern
// ---------------------------------------------------------------------------

int run_pattern(const CommonOptions& opts, const std::string& output) {
    const cpt::io::FileKind kind = cpt::io::sniff_kind(opts.input);

    if (kind == cpt::io::FileKind::tensor) {
        const cpt::SymTensor tensor = cpt::io::load_tensor_file(opts.input);
        const cpt::MultiHypergraph hg = cpt::from_pattern(cpt::pattern(tensor));
        if (!output.empty()) cpt::io::save_hypergraph_file(hg, output);
        if (opts.structured()) {
            json report = {{"command", "pattern"},
                           {"input", opts.input},
                           {"direction", "tensor->hypergraph"},
                           {"hypergraph", cpt::io::json_hypergraph(hg)}};
            if (!output.empty()) report["output"] = output;
            emit(report);
        } else {
            std::cout << cpt::io::save_hypergraph(hg);
            if (!output.empty()) std::cerr << "hypergraph written to " << output << "\n";
        }
        return 0;
    }

    auto loaded = cpt::io::load_hypergraph_file(opts.input);
    print_warnings(loaded.warnings);
    const cpt::SymTensor tensor = cpt::associated_tensor(loaded.hypergraph).as_sym_tensor();
    if (!output.empty()) cpt::io::save_tensor_file(tensor, output);
    if (opts.structured()) {
        json report = {{"command", "pattern"},
                       {"input", opts.input},
                       {"direction", "hypergraph->tensor"},
                       {"tensor", cpt::io::json_tensor(tensor)}};
        if (!output.empty()) report["output"] = output;
        emit(report);
    } else {
        std::cout << cpt::io::save_tensor(tensor);
        if (!output.empty()) std::cerr << "tensor written to " << output << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"{0,1} complete positivity of symmetric tensors and multi-hypergraphs"};
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "rank/co-rank, bases, branches, Property R, zero-entry dominance");
    add_common(analyze, analyze_opts);

    CommonOptions iscp_opts;
    CLI::App* iscp =
        app.add_subcommand("is-cp", "decide {0,1} complete positivity of a (0,1) tensor");
    add_common(iscp, iscp_opts);

    CommonOptions construct_opts;
    std::string construct_output;
    CLI::App* construct = app.add_subcommand(
        "construct-cp", "build a {0,1}-cp tensor associated with a Property R hypergraph");
    add_common(construct, construct_opts);
    construct->add_option("-o,--output", construct_output, "write the tensor to this file");

    CommonOptions decompose_opts;
    int exhaustive_limit = 12;
    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "permutation-similarity decomposition into blocks plus a zero block");
    add_common(decompose_cmd, decompose_opts);
    decompose_cmd
        ->add_option("--exhaustive-limit", exhaustive_limit,
                     "dimension cap for the exponential subset scans")
        ->capture_default_str();

    CommonOptions oracle_opts;
    cpt::OracleBudget budget;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force {0,1}-cp verdict and cp-rank");
    add_common(oracle_cmd, oracle_opts);
    oracle_cmd->add_option("--max-dimension", budget.max_dimension, "oracle dimension cap")
        ->capture_default_str();
    oracle_cmd->add_option("--max-vectors", budget.max_total_vectors, "cap on total factors q")
        ->capture_default_str();
    oracle_cmd->add_option("--node-limit", budget.node_limit, "search node budget")
        ->capture_default_str();

    CommonOptions pattern_opts;
    std::string pattern_output;
    CLI::App* pattern_cmd = app.add_subcommand(
        "pattern", "tensor -> pattern hypergraph, or hypergraph -> (0,1) tensor");
    add_common(pattern_cmd, pattern_opts);
    pattern_cmd->add_option("-o,--output", pattern_output, "write the result to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_opts);
        if (iscp->parsed()) return run_is_cp(iscp_opts);
        if (construct->parsed()) return run_construct_cp(construct_opts, construct_output);
        if (decompose_cmd->parsed()) return run_decompose(decompose_opts, exhaustive_limit);
        if (oracle_cmd->parsed()) return run_oracle(oracle_opts, budget);
        if (pattern_cmd->parsed()) return run_pattern(pattern_opts, pattern_output);
    } catch (const cpt::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cpt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
