#include "cpt/sym_tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cpt {

namespace {

void check_shape(int order, int dim) {
    if (order < 2) throw DomainError("tensor order must be >= 2, got " + std::to_string(order));
    if (dim < 1) throw DomainError("tensor dimension must be >= 1, got " + std::to_string(dim));
}

std::string key_str(const MultisetIndex& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.entries().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key.entries()[i]);
    }
    return s + ")";
}

} // namespace

SymTensor::SymTensor(int order, int dim) : order_(order), dim_(dim) {
    check_shape(order, dim);
}

SymTensor SymTensor::from_entries(int order, int dim, const std::vector<RawEntry>& raw) {
    SymTensor t(order, dim);
    for (const auto& [tuple, value] : raw) {
        if (static_cast<int>(tuple.size()) != order) {
            throw DomainError("entry tuple has " + std::to_string(tuple.size()) +
                              " indices, tensor order is " + std::to_string(order));
        }
        if (value.is_negative()) {
            throw DomainError("negative entry value " + value.str());
        }
        MultisetIndex key = canonicalize(tuple, dim);
        auto [it, inserted] = t.entries_.try_emplace(std::move(key), value);
        if (!inserted && it->second != value) {
            throw DomainError("symmetry violation at key " + key_str(it->first) + ": values " +
                              it->second.str() + " and " + value.str() + " conflict");
        }
    }
    // Zero entries took part in the conflict check above but are not stored.
    std::erase_if(t.entries_, [](const auto& kv) { return kv.second.is_zero(); });
    return t;
}

SymTensor SymTensor::from_canonical(int order, int dim, std::map<MultisetIndex, Rational> entries) {
    SymTensor t(order, dim);
    for (const auto& [key, value] : entries) {
        if (key.order() != order || key.dim() != dim) {
            throw DomainError("key " + key_str(key) + " does not match tensor shape");
        }
        if (value.is_negative()) throw DomainError("negative entry value " + value.str());
    }
    std::erase_if(entries, [](const auto& kv) { return kv.second.is_zero(); });
    t.entries_ = std::move(entries);
    return t;
}

Rational SymTensor::at(const MultisetIndex& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? Rational(0) : it->second;
}

Rational SymTensor::at(const std::vector<int>& raw_tuple) const {
    return at(canonicalize(raw_tuple, dim_));
}

bool SymTensor::zero_one_valued() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& kv) { return kv.second == Rational(1); });
}

ZeroOneTensor::ZeroOneTensor(int order, int dim) : order_(order), dim_(dim) {
    check_shape(order, dim);
}

ZeroOneTensor::ZeroOneTensor(int order, int dim, std::set<MultisetIndex> support)
    : order_(order), dim_(dim), support_(std::move(support)) {
    check_shape(order, dim);
    for (const auto& key : support_) {
        if (key.order() != order || key.dim() != dim) {
            throw DomainError("support key " + key_str(key) + " does not match tensor shape");
        }
    }
}

SymTensor ZeroOneTensor::as_sym_tensor() const {
    std::map<MultisetIndex, Rational> entries;
    for (const auto& key : support_) entries.emplace(key, Rational(1));
    return SymTensor::from_canonical(order_, dim_, std::move(entries));
}

ZeroOneTensor pattern(const SymTensor& tensor) {
    std::set<MultisetIndex> support;
    for (const auto& [key, value] : tensor.entries()) support.insert(key);
    return ZeroOneTensor(tensor.order(), tensor.dim(), std::move(support));
}

ZeroOneTensor pattern(const ZeroOneTensor& tensor) { return tensor; }

PrincipalSubtensor principal_subtensor(const SymTensor& tensor, const Base& index_set) {
    if (index_set.empty()) throw DomainError("principal subtensor of an empty index set");
    if (index_set.dim() != tensor.dim()) {
        throw DomainError("index set is over dimension " + std::to_string(index_set.dim()) +
                          ", tensor has dimension " + std::to_string(tensor.dim()));
    }

    const auto& verts = index_set.vertices();
    std::vector<int> new_label(static_cast<std::size_t>(tensor.dim()) + 1, 0);
    for (std::size_t k = 0; k < verts.size(); ++k) new_label[verts[k]] = static_cast<int>(k) + 1;

    const int sub_dim = index_set.size();
    std::map<MultisetIndex, Rational> entries;
    for (const auto& [key, value] : tensor.entries()) {
        if (!key.base().subset_of(index_set)) continue;
        std::vector<int> relabeled;
        relabeled.reserve(key.entries().size());
        for (int v : key.entries()) relabeled.push_back(new_label[v]);
        entries.emplace(canonicalize(relabeled, sub_dim), value);
    }
    return PrincipalSubtensor{SymTensor::from_canonical(tensor.order(), sub_dim, std::move(entries)),
                              verts};
}

ZeroStructureReport find_zero_structures(const SymTensor& tensor, int exhaustive_limit) {
    const int n = tensor.dim();
    ZeroStructureReport report;

    std::vector<bool> touched(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [key, value] : tensor.entries()) {
        for (int v : key.entries()) touched[v] = true;
    }
    for (int v = 1; v <= n; ++v) {
        if (!touched[v]) report.isolated.push_back(v);
    }

    if (n > exhaustive_limit) return report; // skipped; flagged by exhaustive=false
    report.exhaustive = true;

    // A vertex set is a zero block iff it contains no entry base.
    std::vector<std::uint64_t> base_masks;
    base_masks.reserve(tensor.entries().size());
    for (const auto& [key, value] : tensor.entries()) base_masks.push_back(key.base().mask());

    std::vector<std::uint64_t> zero_masks;
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        bool zero = true;
        for (std::uint64_t bm : base_masks) {
            if ((bm & mask) == bm) { zero = false; break; }
        }
        if (zero) zero_masks.push_back(mask);
    }
    for (std::uint64_t mask : zero_masks) {
        bool maximal = true;
        for (std::uint64_t other : zero_masks) {
            if (other != mask && (mask & other) == mask) { maximal = false; break; }
        }
        if (maximal) report.maximal_zero_blocks.push_back(Base::from_mask(mask, n));
    }
    std::sort(report.maximal_zero_blocks.begin(), report.maximal_zero_blocks.end());
    return report;
}

SymTensor permute(const SymTensor& tensor, const std::vector<int>& phi) {
    const int n = tensor.dim();
    if (static_cast<int>(phi.size()) != n) {
        throw DomainError("permutation has " + std::to_string(phi.size()) +
                          " entries, tensor dimension is " + std::to_string(n));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int image : phi) {
        if (image < 1 || image > n || seen[image]) {
            throw DomainError("not a bijection on [1, " + std::to_string(n) + "]");
        }
        seen[image] = true;
    }

    std::map<MultisetIndex, Rational> entries;
    for (const auto& [key, value] : tensor.entries()) {
        std::vector<int> mapped;
        mapped.reserve(key.entries().size());
        for (int v : key.entries()) mapped.push_back(phi[v - 1]);
        entries.emplace(canonicalize(mapped, n), value);
    }
    return SymTensor::from_canonical(tensor.order(), n, std::move(entries));
}

SymTensor direct_sum(const SymTensor& first, const SymTensor& second) {
    if (first.order() != second.order()) {
        throw DomainError("direct sum of tensors with different orders (" +
                          std::to_string(first.order()) + " vs " +
                          std::to_string(second.order()) + ")");
    }
    const int n = first.dim() + second.dim();
    std::map<MultisetIndex, Rational> entries;
    for (const auto& [key, value] : first.entries()) {
        entries.emplace(canonicalize(key.entries(), n), value);
    }
    const int shift = first.dim();
    for (const auto& [key, value] : second.entries()) {
        std::vector<int> shifted;
        shifted.reserve(key.entries().size());
        for (int v : key.entries()) shifted.push_back(v + shift);
        entries.emplace(canonicalize(shifted, n), value);
    }
    return SymTensor::from_canonical(first.order(), n, std::move(entries));
}

SymTensor rank_one_power(const std::vector<int>& zero_one_vector, int order) {
    const int n = static_cast<int>(zero_one_vector.size());
    check_shape(order, n);
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
        const int c = zero_one_vector[i];
        if (c != 0 && c != 1) {
            throw DomainError("coordinate " + std::to_string(i + 1) + " is " + std::to_string(c) +
                              ", expected 0 or 1");
        }
        if (c == 1) support.push_back(i + 1);
    }
    if (support.empty()) return SymTensor(order, n);

    std::map<MultisetIndex, Rational> entries;
    for (auto& key : complete_multisets(Base(std::move(support), n), order)) {
        entries.emplace(std::move(key), Rational(1));
    }
    return SymTensor::from_canonical(order, n, std::move(entries));
}

SymTensor cp_sum(const CpCertificate& certificate) {
    std::map<MultisetIndex, long long> counts;
    for (const auto& factor : certificate.vectors()) {
        if (factor.support.dim() != certificate.dim()) {
            throw DomainError("certificate factor support is over dimension " +
                              std::to_string(factor.support.dim()) + ", certificate dimension is " +
                              std::to_string(certificate.dim()));
        }
        for (const auto& key : complete_multisets(factor.support, certificate.order())) {
            counts[key] += factor.multiplicity;
        }
    }
    std::map<MultisetIndex, Rational> entries;
    for (const auto& [key, count] : counts) entries.emplace(key, Rational(count));
    return SymTensor::from_canonical(certificate.order(), certificate.dim(), std::move(entries));
}

void CpCertificate::add(Base support, int multiplicity) {
    if (support.empty()) throw DomainError("certificate factor with empty support");
    if (support.dim() != dim_) {
        throw DomainError("certificate factor support is over dimension " +
                          std::to_string(support.dim()) + ", certificate dimension is " +
                          std::to_string(dim_));
    }
    if (multiplicity < 1) {
        throw DomainError("certificate multiplicity must be >= 1, got " +
                          std::to_string(multiplicity));
    }
    vectors_.push_back(CertVector{std::move(support), multiplicity});
}

int CpCertificate::total_vectors() const {
    int q = 0;
    for (const auto& factor : vectors_) q += factor.multiplicity;
    return q;
}

std::string render_slices(const SymTensor& tensor) {
    const int m = tensor.order();
    const int n = tensor.dim();

    std::size_t width = 1;
    for (const auto& [key, value] : tensor.entries()) {
        width = std::max(width, value.str().size());
    }

    std::ostringstream out;
    std::vector<int> tail(static_cast<std::size_t>(m - 2), 1);
    while (true) {
        if (tail.empty()) {
            out << "A =\n";
        } else {
            out << "A(:,:";
            for (int t : tail) out << "," << t;
            out << ") =\n";
        }
        for (int row = 1; row <= n; ++row) {
            out << " ";
            for (int col = 1; col <= n; ++col) {
                std::vector<int> tuple{row, col};
                tuple.insert(tuple.end(), tail.begin(), tail.end());
                const std::string cell = tensor.at(tuple).str();
                out << " " << std::string(width - cell.size(), ' ') << cell;
            }
            out << "\n";
        }

        int pos = static_cast<int>(tail.size()) - 1;
        while (pos >= 0 && tail[pos] == n) --pos;
        if (pos < 0) break;
        ++tail[pos];
        for (std::size_t k = pos + 1; k < tail.size(); ++k) tail[k] = 1;
        out << "\n";
    }
    return out.str();
}

} // namespace cpt
