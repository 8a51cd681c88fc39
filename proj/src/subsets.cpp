#include "grex/subsets.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace grex {

namespace {

// Keeps every downstream difference/offset representable in 64 bits.
constexpr Int kMaxAbsElement = Int(1) << 61;

} // namespace

KSubset::KSubset(std::vector<Int> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i] == elems_[i - 1]) {
            fail(errc::duplicate_element,
                 "repeated element " + std::to_string(elems_[i]) + " in k-subset");
        }
    }
    if (elems_.size() < 2) {
        fail(errc::too_small, "a k-subset needs at least 2 distinct elements, got " +
                                  std::to_string(elems_.size()));
    }
    for (Int v : elems_) {
        if (v > kMaxAbsElement || v < -kMaxAbsElement) {
            fail(errc::element_out_of_range,
                 "element " + std::to_string(v) + " exceeds the supported range ±2^61");
        }
    }
}

bool KSubset::contains(Int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::string KSubset::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    return out;
}

KSubset KSubset::parse(std::string_view text) {
    std::vector<Int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
            fail(errc::parse_error, "bad integer '" + std::string(tok) + "' in k-subset '" +
                                        std::string(text) + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return KSubset(std::move(values));
}

namespace {

void require_same_k(const KSubset& l, const KSubset& m) {
    if (l.k() != m.k()) {
        fail(errc::mismatched_k, "cardinalities differ: " + std::to_string(l.k()) + " vs " +
                                     std::to_string(m.k()));
    }
}

// Sorted symmetric-difference halves: a = l\m, b = m\l.
void set_differences(const KSubset& l, const KSubset& m, std::vector<Int>& a,
                     std::vector<Int>& b) {
    const auto& x = l.elements();
    const auto& y = m.elements();
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(a));
    std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(b));
}

} // namespace

bool crosses(const KSubset& l, const KSubset& m) {
    require_same_k(l, m);
    std::vector<Int> a, b;
    set_differences(l, m, a, b);
    // Merge the two sorted difference sets and count tag alternations. An
    // interleaving i1 < j1 < i2 < j2 (either orientation) exists exactly when
    // the run-length-compressed tag sequence has length >= 4.
    std::size_t ia = 0, ib = 0;
    int runs = 0;
    int last = 0; // 0 none, 1 from a, 2 from b
    while (ia < a.size() || ib < b.size()) {
        int tag;
        if (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) {
            tag = 1;
            ++ia;
        } else {
            tag = 2;
            ++ib;
        }
        if (tag != last) {
            ++runs;
            last = tag;
            if (runs >= 4) return true;
        }
    }
    return false;
}

int intersection_size(const KSubset& l, const KSubset& m) {
    require_same_k(l, m);
    const auto& x = l.elements();
    const auto& y = m.elements();
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] < y[j])
            ++i;
        else if (y[j] < x[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

KSubset shift(const KSubset& l, Int t) {
    std::vector<Int> out = l.elements();
    for (Int& v : out) v += t;
    return KSubset(std::move(out));
}

std::vector<KSubset> enumerate_window(int k, Int lo, Int hi) {
    if (k < 2) fail(errc::too_small, "k must be at least 2, got " + std::to_string(k));
    if (hi - lo + 1 < k) {
        fail(errc::window_too_small, "window {" + std::to_string(lo) + ",...," +
                                         std::to_string(hi) + "} has fewer than k=" +
                                         std::to_string(k) + " elements");
    }
    const Int n = hi - lo + 1;
    std::vector<KSubset> out;
    std::vector<Int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<Int> values(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) values[i] = lo + idx[i];
        out.emplace_back(std::move(values));
        // next lexicographic combination of {0,...,n-1}
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::uint64_t binomial_capped(Int n, int r, std::uint64_t cap) {
    if (n < 0 || r < 0 || r > n) return 0;
    if (r > n - r) r = static_cast<int>(n - r);
    // C(n, r) = prod_{i=1..r} (n - r + i) / i; each prefix is C(n-r+i, i),
    // so the division is exact at every step.
    std::uint64_t acc = 1;
    for (int i = 1; i <= r; ++i) {
        unsigned __int128 wide = static_cast<unsigned __int128>(acc) *
                                 static_cast<std::uint64_t>(n - r + i);
        wide /= static_cast<std::uint64_t>(i);
        if (wide > cap) return cap + 1;
        acc = static_cast<std::uint64_t>(wide);
    }
    return acc;
}

} // namespace grex
