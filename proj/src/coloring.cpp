#include "ohr/coloring.hpp"

#include <sstream>

namespace ohr {

HyperedgeColoring::HyperedgeColoring(int k, int N, Color fill) : k_(k), N_(N) {
    if (k < 2 || N < 0) throw InvalidParameter("coloring requires k >= 2, N >= 0");
    count_ = binom64(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(k));
    if (count_ > (1ULL << 40)) throw InvalidParameter("coloring too large to materialize");
    bytes_.assign((count_ + 7) / 8, fill == Color::Blue ? 0xff : 0x00);
    // clear padding bits so serialization is canonical
    if (count_ % 8 != 0 && !bytes_.empty())
        bytes_.back() &= static_cast<std::uint8_t>(0xff << (8 - count_ % 8));
}

Color HyperedgeColoring::get_rank(std::uint64_t r) const {
    return (bytes_[r >> 3] >> (7 - (r & 7))) & 1 ? Color::Blue : Color::Red;
}

void HyperedgeColoring::set_rank(std::uint64_t r, Color c) {
    std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (r & 7)));
    if (c == Color::Blue)
        bytes_[r >> 3] |= mask;
    else
        bytes_[r >> 3] &= static_cast<std::uint8_t>(~mask);
}

Color HyperedgeColoring::get(const std::vector<int>& subset) const {
    return get_rank(colex_rank(subset));
}

void HyperedgeColoring::set(const std::vector<int>& subset, Color c) {
    set_rank(colex_rank(subset), c);
}

std::string HyperedgeColoring::serialize() const {
    std::ostringstream out;
    out << "ORC " << k_ << ' ' << N_ << '\n';
    static const char* hex = "0123456789abcdef";
    for (std::uint8_t b : bytes_) {
        out << hex[b >> 4] << hex[b & 15];
    }
    out << '\n';
    return out.str();
}

HyperedgeColoring HyperedgeColoring::parse(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int k = 0, N = 0;
    if (!(in >> magic >> k >> N) || magic != "ORC")
        throw InvalidParameter("coloring file: bad header, expected 'ORC k N'");
    HyperedgeColoring c(k, N);
    std::string hex;
    if (!(in >> hex)) throw InvalidParameter("coloring file: missing bit data");
    if (hex.size() != c.bytes_.size() * 2)
        throw InvalidParameter("coloring file: bit data has wrong length");
    auto nibble = [](char ch) -> int {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        throw InvalidParameter("coloring file: invalid hex digit");
    };
    for (std::size_t i = 0; i < c.bytes_.size(); ++i)
        c.bytes_[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    if (c.count_ % 8 != 0 && !c.bytes_.empty() &&
        (c.bytes_.back() & ~(0xffu << (8 - c.count_ % 8))) != 0)
        throw InvalidParameter("coloring file: nonzero padding bits");
    return c;
}

std::size_t ColorView::edge_count() const {
    std::size_t total = 0;
    for (std::uint64_t r = 0; r < coloring_->subset_count(); ++r)
        if (coloring_->get_rank(r) == color_) ++total;
    return total;
}

OrderedHypergraph ColorView::materialize() const {
    OrderedHypergraph h(k(), n());
    for (std::uint64_t r = 0; r < coloring_->subset_count(); ++r)
        if (coloring_->get_rank(r) == color_) h.add_edge(colex_unrank(r, k()));
    return h;
}

EdgeLabeling::EdgeLabeling(int N, int R) : N_(N), R_(R) {
    if (N < 2 || R < 1) throw InvalidParameter("labeling requires N >= 2, R >= 1");
    labels_.assign(binom64(static_cast<std::uint64_t>(N), 2), 1);
}

int EdgeLabeling::get(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= N_ || u == v) throw InvalidParameter("labeling: bad pair");
    return labels_[colex_rank({u, v})];
}

void EdgeLabeling::set(int u, int v, int label) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= N_ || u == v) throw InvalidParameter("labeling: bad pair");
    if (label < 1 || label > R_) throw InvalidParameter("labeling: label out of range");
    labels_[colex_rank({u, v})] = label;
}

std::string EdgeLabeling::serialize() const {
    std::ostringstream out;
    out << "ORL " << N_ << ' ' << R_ << '\n';
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out << labels_[i] << (i + 1 == labels_.size() ? '\n' : ' ');
    return out.str();
}

EdgeLabeling EdgeLabeling::parse(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int N = 0, R = 0;
    if (!(in >> magic >> N >> R) || magic != "ORL")
        throw InvalidParameter("labeling file: bad header, expected 'ORL N R'");
    EdgeLabeling lab(N, R);
    for (auto& l : lab.labels_) {
        if (!(in >> l)) throw InvalidParameter("labeling file: too few labels");
        if (l < 1 || l > R) throw InvalidParameter("labeling file: label out of range");
    }
    int extra;
    if (in >> extra) throw InvalidParameter("labeling file: trailing data");
    return lab;
}

}  // namespace ohr
