#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpt/certificate.hpp"
#include "cpt/cp_decision.hpp"
#include "cpt/hypergraph.hpp"
#include "cpt/oracle.hpp"
#include "cpt/sym_tensor.hpp"

namespace cpt::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// File formats (versioned single-line headers, '#' comments, 1-based indices)
//
//   cpt-tensor v1 m=3 n=3 kind=integer     entry lines: i1 ... im value
//   cpt-hypergraph v1 n=3 m=3              edge lines:  v1 ... vm
//
// Tensor entry tuples must already be canonical (sorted); duplicate keys are
// rejected with the offending line. Hypergraph edges canonicalize on load and
// duplicate lines collapse with a warning.
// ---------------------------------------------------------------------------

enum class FileKind { tensor, hypergraph };

/// Looks at the magic token of the first meaningful line.
FileKind sniff_kind(const std::string& path);

SymTensor load_tensor(std::istream& in);
SymTensor load_tensor_file(const std::string& path);
std::string save_tensor(const SymTensor& tensor);
void save_tensor_file(const SymTensor& tensor, const std::string& path);

struct LoadedHypergraph {
    MultiHypergraph hypergraph;
    std::vector<std::string> warnings;
};

LoadedHypergraph load_hypergraph(std::istream& in);
LoadedHypergraph load_hypergraph_file(const std::string& path);
std::string save_hypergraph(const MultiHypergraph& hypergraph);
void save_hypergraph_file(const MultiHypergraph& hypergraph, const std::string& path);

// ---------------------------------------------------------------------------
// Report building blocks. Structured output serializes these with a fixed key
// order so identical inputs produce identical bytes.
// ---------------------------------------------------------------------------

json json_index(const MultisetIndex& index);
json json_base(const Base& base);
json json_tensor(const SymTensor& tensor);
json json_hypergraph(const MultiHypergraph& hypergraph);
json json_certificate(const CpCertificate& certificate);
json json_branches(const BranchPartition& partition);
json json_property_r(const PropertyRResult& result);
json json_dominance(const DominanceResult& result);
json json_corollary(const CorollaryReport& report);
json json_zero_structures(const ZeroStructureReport& report);
json json_cp_verdict(const ZeroOneCpVerdict& verdict);
json json_oracle_verdict(const OracleVerdict& verdict);
json json_oracle_rank(const OracleRankResult& result);
json json_decomposition(const DecompositionReport& report);

std::string format_index(const MultisetIndex& index);
std::string format_base(const Base& base);

} // namespace cpt::io
