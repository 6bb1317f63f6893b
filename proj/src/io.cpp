#include "cpt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace cpt::io {

namespace {

struct Token {
    std::string text;
    int column; // 1-based start offset in the line
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break; // comment to end of line
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

int parse_int(const Token& token, int line_no, const char* what) {
    int value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(std::string("expected ") + what + ", got '" + token.text + "'", line_no,
                         token.column);
    }
    return value;
}

// Header line: MAGIC v1 key=value ...
struct Header {
    std::string magic;
    std::map<std::string, std::string> fields;
    int line_no = 0;
};

Header read_header(std::istream& in, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens[1].text != "v1") {
            throw ParseError("expected header '<magic> v1 key=value ...'", line_no,
                             tokens[0].column);
        }
        Header header;
        header.magic = tokens[0].text;
        header.line_no = line_no;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            const auto eq = tokens[i].text.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].text.size()) {
                throw ParseError("malformed header field '" + tokens[i].text + "'", line_no,
                                 tokens[i].column);
            }
            header.fields[tokens[i].text.substr(0, eq)] = tokens[i].text.substr(eq + 1);
        }
        return header;
    }
    throw ParseError("empty file, header line missing", line_no == 0 ? 1 : line_no);
}

int header_int(const Header& header, const std::string& key) {
    const auto it = header.fields.find(key);
    if (it == header.fields.end()) {
        throw ParseError("header field '" + key + "' missing", header.line_no);
    }
    int value = 0;
    const char* begin = it->second.data();
    const char* end = begin + it->second.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("header field '" + key + "' is not an integer", header.line_no);
    }
    return value;
}

} // namespace

FileKind sniff_kind(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    int line_no = 0;
    const Header header = read_header(in, line_no);
    if (header.magic == "cpt-tensor") return FileKind::tensor;
    if (header.magic == "cpt-hypergraph") return FileKind::hypergraph;
    throw ParseError("unknown file magic '" + header.magic + "'", header.line_no);
}

SymTensor load_tensor(std::istream& in) {
    int line_no = 0;
    const Header header = read_header(in, line_no);
    if (header.magic != "cpt-tensor") {
        throw ParseError("expected magic 'cpt-tensor', got '" + header.magic + "'",
                         header.line_no);
    }
    const int m = header_int(header, "m");
    const int n = header_int(header, "n");
    const auto kind_it = header.fields.find("kind");
    if (kind_it == header.fields.end()) {
        throw ParseError("header field 'kind' missing", header.line_no);
    }
    const bool integer_kind = kind_it->second == "integer";
    if (!integer_kind && kind_it->second != "rational") {
        throw ParseError("kind must be 'integer' or 'rational', got '" + kind_it->second + "'",
                         header.line_no);
    }

    std::map<MultisetIndex, Rational> entries;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (static_cast<int>(tokens.size()) != m + 1) {
            throw ParseError("expected " + std::to_string(m) + " indices and a value, got " +
                                 std::to_string(tokens.size()) + " tokens",
                             line_no, tokens[0].column);
        }
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) tuple.push_back(parse_int(tokens[k], line_no, "vertex index"));
        if (!std::is_sorted(tuple.begin(), tuple.end())) {
            throw ParseError("index tuple is not canonical (sorted ascending)", line_no,
                             tokens[0].column);
        }

        const Token& value_token = tokens[static_cast<std::size_t>(m)];
        if (integer_kind && value_token.text.find('/') != std::string::npos) {
            throw ParseError("rational value in a kind=integer file", line_no, value_token.column);
        }
        const auto value = Rational::parse(value_token.text);
        if (!value) {
            throw ParseError("expected a value, got '" + value_token.text + "'", line_no,
                             value_token.column);
        }
        if (value->is_negative()) {
            throw ParseError("negative entry value " + value->str(), line_no, value_token.column);
        }

        MultisetIndex key = [&] {
            try {
                return canonicalize(tuple, n);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line_no, tokens[0].column);
            }
        }();
        if (!entries.emplace(std::move(key), *value).second) {
            throw ParseError("duplicate key", line_no, tokens[0].column);
        }
    }
    std::erase_if(entries, [](const auto& kv) { return kv.second.is_zero(); });
    return SymTensor::from_canonical(m, n, std::move(entries));
}

SymTensor load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    return load_tensor(in);
}

std::string save_tensor(const SymTensor& tensor) {
    const bool integral = std::all_of(tensor.entries().begin(), tensor.entries().end(),
                                      [](const auto& kv) { return kv.second.is_integer(); });
    std::ostringstream out;
    out << "cpt-tensor v1 m=" << tensor.order() << " n=" << tensor.dim()
        << " kind=" << (integral ? "integer" : "rational") << "\n";
    for (const auto& [key, value] : tensor.entries()) {
        for (int v : key.entries()) out << v << " ";
        out << value.str() << "\n";
    }
    return out.str();
}

void save_tensor_file(const SymTensor& tensor, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << save_tensor(tensor);
}

LoadedHypergraph load_hypergraph(std::istream& in) {
    int line_no = 0;
    const Header header = read_header(in, line_no);
    if (header.magic != "cpt-hypergraph") {
        throw ParseError("expected magic 'cpt-hypergraph', got '" + header.magic + "'",
                         header.line_no);
    }
    const int n = header_int(header, "n");
    const int m = header_int(header, "m");

    std::set<MultisetIndex> edges;
    std::vector<std::string> warnings;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (static_cast<int>(tokens.size()) != m) {
            throw ParseError("expected " + std::to_string(m) + " vertex indices, got " +
                                 std::to_string(tokens.size()) + " tokens",
                             line_no, tokens[0].column);
        }
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) tuple.push_back(parse_int(tokens[k], line_no, "vertex index"));
        MultisetIndex edge = [&] {
            try {
                return canonicalize(tuple, n);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line_no, tokens[0].column);
            }
        }();
        if (!edges.insert(edge).second) {
            warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                               format_index(edge) + " ignored");
        }
    }
    return LoadedHypergraph{MultiHypergraph(m, n, std::move(edges)), std::move(warnings)};
}

LoadedHypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0);
    return load_hypergraph(in);
}

std::string save_hypergraph(const MultiHypergraph& hypergraph) {
    std::ostringstream out;
    out << "cpt-hypergraph v1 n=" << hypergraph.dim() << " m=" << hypergraph.order() << "\n";
    for (const auto& edge : hypergraph.edges()) {
        bool first = true;
        for (int v : edge.entries()) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

void save_hypergraph_file(const MultiHypergraph& hypergraph, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << save_hypergraph(hypergraph);
}

json json_index(const MultisetIndex& index) { return json(index.entries()); }

json json_base(const Base& base) { return json(base.vertices()); }

json json_tensor(const SymTensor& tensor) {
    json entries = json::array();
    for (const auto& [key, value] : tensor.entries()) {
        entries.push_back({{"index", json_index(key)}, {"value", value.str()}});
    }
    return {{"m", tensor.order()}, {"n", tensor.dim()}, {"entries", std::move(entries)}};
}

json json_hypergraph(const MultiHypergraph& hypergraph) {
    json edges = json::array();
    for (const auto& edge : hypergraph.edges()) edges.push_back(json_index(edge));
    return {{"n", hypergraph.dim()}, {"m", hypergraph.order()}, {"edges", std::move(edges)}};
}

json json_certificate(const CpCertificate& certificate) {
    json vectors = json::array();
    for (const auto& factor : certificate.vectors()) {
        vectors.push_back(
            {{"support", json_base(factor.support)}, {"multiplicity", factor.multiplicity}});
    }
    return {{"m", certificate.order()},
            {"n", certificate.dim()},
            {"q", certificate.total_vectors()},
            {"vectors", std::move(vectors)}};
}

json json_branches(const BranchPartition& partition) {
    json branches = json::array();
    for (const auto& branch : partition.branches) branches.push_back(json_base(branch));
    return {{"components", std::move(branches)}, {"isolated", json(partition.isolated)}};
}

json json_property_r(const PropertyRResult& result) {
    json out = {{"holds", result.holds}};
    if (result.violation) {
        out["violation"] = {{"edge", json_index(result.violation->edge)},
                            {"missing", json_index(result.violation->missing)}};
    }
    return out;
}

json json_dominance(const DominanceResult& result) {
    json out = {{"holds", result.holds}};
    if (result.violation) {
        out["violation"] = {{"zero_index", json_index(result.violation->zero_index)},
                            {"nonzero_index", json_index(result.violation->nonzero_index)}};
    }
    return out;
}

json json_corollary(const CorollaryReport& report) {
    return {{"holds", report.holds},
            {"ordered_edges", report.ordered_edges},
            {"branch_power_sum", report.branch_power_sum},
            {"branch_dims", json(report.branch_dims)}};
}

json json_zero_structures(const ZeroStructureReport& report) {
    json blocks = json::array();
    for (const auto& block : report.maximal_zero_blocks) blocks.push_back(json_base(block));
    json out = {{"isolated", json(report.isolated)}, {"exhaustive", report.exhaustive}};
    if (report.exhaustive) out["maximal_zero_blocks"] = std::move(blocks);
    return out;
}

json json_cp_verdict(const ZeroOneCpVerdict& verdict) {
    json out = {{"cp", verdict.cp}};
    if (verdict.certificate) out["certificate"] = json_certificate(*verdict.certificate);
    if (verdict.witness_branch) out["witness_branch"] = json_base(*verdict.witness_branch);
    if (verdict.missing_key) out["missing_key"] = json_index(*verdict.missing_key);
    return out;
}

namespace {

const char* status_name(OracleStatus status) {
    switch (status) {
        case OracleStatus::cp: return "cp";
        case OracleStatus::not_cp: return "not-cp";
        case OracleStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

} // namespace

json json_oracle_verdict(const OracleVerdict& verdict) {
    json out = {{"status", status_name(verdict.status)}};
    if (verdict.certificate) out["certificate"] = json_certificate(*verdict.certificate);
    if (!verdict.detail.empty()) out["detail"] = verdict.detail;
    return out;
}

json json_oracle_rank(const OracleRankResult& result) {
    json out = {{"status", status_name(result.status)}};
    if (result.cp_rank) out["cp_rank"] = *result.cp_rank;
    if (result.certificate) out["certificate"] = json_certificate(*result.certificate);
    if (!result.detail.empty()) out["detail"] = result.detail;
    return out;
}

json json_decomposition(const DecompositionReport& report) {
    json blocks = json::array();
    for (std::size_t i = 0; i < report.blocks.size(); ++i) {
        blocks.push_back({{"vertices", json_base(report.branch_vertex_sets[i])},
                          {"tensor", json_tensor(report.blocks[i])}});
    }
    return {{"permutation", json(report.permutation)},
            {"blocks", std::move(blocks)},
            {"zero_block_dim", report.zero_block_dim}};
}

std::string format_index(const MultisetIndex& index) {
    std::string s = "(";
    for (std::size_t i = 0; i < index.entries().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(index.entries()[i]);
    }
    return s + ")";
}

std::string format_base(const Base& base) {
    std::string s = "{";
    for (std::size_t i = 0; i < base.vertices().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(base.vertices()[i]);
    }
    return s + "}";
}

} // namespace cpt::io
