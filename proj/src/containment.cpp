#include "ohr/containment.hpp"

#include <omp.h>

#include <algorithm>

namespace ohr {

namespace {

// Pattern edges bucketed by their largest vertex, so each edge is checked as
// soon as its last endpoint is placed.
std::vector<std::vector<const std::vector<int>*>> edges_by_max(const OrderedHypergraph& p) {
    std::vector<std::vector<const std::vector<int>*>> by_max(static_cast<std::size_t>(p.n()));
    for (const auto& e : p.edges()) by_max[static_cast<std::size_t>(e.back())].push_back(&e);
    return by_max;
}

bool edges_ok(const HostRef& host, const std::vector<const std::vector<int>*>& closing,
              const std::vector<int>& map, std::vector<int>& scratch) {
    for (const auto* e : closing) {
        scratch.clear();
        for (int pv : *e) scratch.push_back(map[static_cast<std::size_t>(pv)]);
        if (!host.has_edge(scratch)) return false;
    }
    return true;
}

struct Searcher {
    const HostRef& host;
    const OrderedHypergraph& pattern;
    std::vector<std::vector<const std::vector<int>*>> by_max;
    std::vector<int> map;
    std::vector<int> scratch;

    Searcher(const HostRef& h, const OrderedHypergraph& p)
        : host(h), pattern(p), by_max(edges_by_max(p)),
          map(static_cast<std::size_t>(p.n()), -1) {
        scratch.reserve(static_cast<std::size_t>(p.k()));
    }

    bool find(int p, int min_host) {
        if (p == pattern.n()) return true;
        // leave room for the remaining pattern suffix
        int last = host.n() - (pattern.n() - p);
        for (int v = min_host; v <= last; ++v) {
            map[static_cast<std::size_t>(p)] = v;
            if (edges_ok(host, by_max[static_cast<std::size_t>(p)], map, scratch) &&
                find(p + 1, v + 1))
                return true;
        }
        map[static_cast<std::size_t>(p)] = -1;
        return false;
    }

    BigInt count(int p, int min_host) {
        if (p == pattern.n()) return 1;
        BigInt total = 0;
        int last = host.n() - (pattern.n() - p);
        for (int v = min_host; v <= last; ++v) {
            map[static_cast<std::size_t>(p)] = v;
            if (edges_ok(host, by_max[static_cast<std::size_t>(p)], map, scratch))
                total += count(p + 1, v + 1);
        }
        map[static_cast<std::size_t>(p)] = -1;
        return total;
    }
};

void check_uniformity(const HostRef& host, const OrderedHypergraph& pattern) {
    if (host.k() != pattern.k())
        throw InvalidParameter("host and pattern uniformity mismatch");
}

}  // namespace

std::optional<Embedding> find_embedding(const HostRef& host, const OrderedHypergraph& pattern) {
    check_uniformity(host, pattern);
    if (pattern.n() == 0) return Embedding{};
    if (pattern.n() > host.n()) return std::nullopt;
    Searcher s(host, pattern);
    if (s.find(0, 0)) return s.map;
    return std::nullopt;
}

BigInt count_embeddings_serial(const HostRef& host, const OrderedHypergraph& pattern) {
    check_uniformity(host, pattern);
    if (pattern.n() == 0) return 1;
    if (pattern.n() > host.n()) return 0;
    Searcher s(host, pattern);
    return s.count(0, 0);
}

BigInt count_embeddings(const HostRef& host, const OrderedHypergraph& pattern) {
    check_uniformity(host, pattern);
    if (pattern.n() == 0) return 1;
    if (pattern.n() > host.n()) return 0;
    int first_last = host.n() - pattern.n();
    std::vector<BigInt> partial(static_cast<std::size_t>(first_last) + 1);
#pragma omp parallel
    {
        Searcher s(host, pattern);
#pragma omp for schedule(dynamic)
        for (int v = 0; v <= first_last; ++v) {
            s.map[0] = v;
            if (edges_ok(host, s.by_max[0], s.map, s.scratch))
                partial[static_cast<std::size_t>(v)] = s.count(1, v + 1);
        }
    }
    BigInt total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

bool verify_embedding(const HostRef& host, const OrderedHypergraph& pattern,
                      const Embedding& emb) {
    if (static_cast<int>(emb.size()) != pattern.n()) return false;
    for (std::size_t i = 0; i < emb.size(); ++i) {
        if (emb[i] < 0 || emb[i] >= host.n()) return false;
        if (i > 0 && emb[i] <= emb[i - 1]) return false;
    }
    std::vector<int> image;
    for (const auto& e : pattern.edges()) {
        image.clear();
        for (int pv : e) image.push_back(emb[static_cast<std::size_t>(pv)]);
        if (!host.has_edge(image)) return false;
    }
    return true;
}

}  // namespace ohr
