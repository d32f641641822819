#include "mshopf/wick.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "mshopf/graph_io.hpp"

namespace mshopf {

Rational WickClassification::labelings_of_internal_slots() const {
    Rational r = factorial(v);
    Rational valfact = factorial(valence);
    for (int i = 0; i < v; ++i) r *= valfact;
    return r;
}

Rational WickClassification::expected_total() const {
    const int slots = v * valence;
    Rational r = 1;
    for (int k = 0; k < n_ext; ++k) r *= slots - k;
    r *= double_factorial_odd((slots - n_ext) / 2);
    return r;
}

long WickClassification::sigma(const AssignedGraph& labeled_class) const {
    auto it = counts.find(labeled_class);
    if (it == counts.end()) throw PreconditionError("class not present in the pairing universe");
    const Rational total_labelings = labelings_of_internal_slots();
    const Rational s = total_labelings / Rational(static_cast<unsigned long>(it->second));
    if (s.get_den() != 1)
        throw PreconditionError("pairing count does not divide v!(valence!)^v");
    return s.get_num().get_si();
}

long WickClassification::n_labelings(const AssignedGraph& unlabeled_class) const {
    long n = 0;
    for (const auto& [labeled, count] : counts)
        if (labeled.unlabeled() == unlabeled_class) ++n;
    return n;
}

namespace {

struct RawTally {
    // (leg vertex vector, packed adjacency cells) -> configurations
    std::map<std::pair<std::vector<int>, uint64_t>, uint64_t> buckets;
};

// Perfect matchings of the slots in `free`, visiting each exactly once by
// always matching the lowest free slot. Adjacency is maintained as a packed
// cell counter (3 bits per unordered vertex pair).
void match_slots(uint32_t free, uint64_t key, const std::vector<std::vector<int>>& cell_shift,
                 const std::vector<int>& vertex_of, std::map<uint64_t, uint64_t>& tally) {
    if (free == 0) {
        ++tally[key];
        return;
    }
    const int a = std::countr_zero(free);
    const uint32_t rest = free & (free - 1);
    uint32_t others = rest;
    while (others) {
        const int b = std::countr_zero(others);
        others &= others - 1;
        const uint64_t step = 1ULL << cell_shift[vertex_of[a]][vertex_of[b]];
        match_slots(rest & ~(1u << b), key + step, cell_shift, vertex_of, tally);
    }
}

} // namespace

WickClassification enumerate_pairings(int v, int n_ext, int valence) {
    if (v < 0 || v > 5) throw PreconditionError("enumerate_pairings: vertex count out of range");
    const int slots = v * valence;
    if (n_ext < 0 || n_ext > slots) throw PreconditionError("enumerate_pairings: bad n_ext");
    if ((slots - n_ext) % 2 != 0)
        throw PreconditionError("enumerate_pairings: v*valence + n_ext must be even");
    if (slots > 24) throw PreconditionError("enumerate_pairings: too many slots");

    WickClassification out;
    out.v = v;
    out.n_ext = n_ext;
    out.valence = valence;

    std::vector<int> vertex_of(slots);
    for (int s = 0; s < slots; ++s) vertex_of[s] = s / valence;
    // Cell shifts for the packed adjacency counter.
    std::vector<std::vector<int>> cell_shift(v, std::vector<int>(v));
    int cell = 0;
    for (int i = 0; i < v; ++i)
        for (int j = i; j < v; ++j) {
            cell_shift[i][j] = 3 * cell;
            cell_shift[j][i] = 3 * cell;
            ++cell;
        }

    RawTally raw;
    // Choose the label slot set, enumerate matchings of the rest once, then
    // fold every ordered label placement on that set.
    std::vector<int> chosen(n_ext);
    auto run_set = [&]() {
        uint32_t free = slots == 0 ? 0 : ((1u << slots) - 1);
        for (int s : chosen) free &= ~(1u << s);
        std::map<uint64_t, uint64_t> tally;
        if (free == 0) {
            tally[0] = 1;
        } else {
            match_slots(free, 0, cell_shift, vertex_of, tally);
        }
        std::vector<int> perm = chosen;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<int> leg_vertex(n_ext);
            for (int k = 0; k < n_ext; ++k) leg_vertex[k] = vertex_of[perm[k]];
            for (const auto& [key, count] : tally) raw.buckets[{leg_vertex, key}] += count;
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    // All slot subsets of size n_ext.
    auto combos = [&](auto&& self, int next, int depth) -> void {
        if (depth == n_ext) {
            run_set();
            return;
        }
        for (int s = next; s < slots; ++s) {
            chosen[depth] = s;
            self(self, s + 1, depth + 1);
        }
    };
    combos(combos, 0, 0);

    // Bucket raw labeled-on-fixed-vertices classes by canonical form.
    for (const auto& [key, count] : raw.buckets) {
        const auto& [leg_vertex, adj] = key;
        FeynmanGraph g(valence);
        g.set_labeled_legs(true);
        for (int i = 0; i < v; ++i) g.add_vertex();
        int c = 0;
        for (int i = 0; i < v; ++i)
            for (int j = i; j < v; ++j) {
                const uint64_t m = (adj >> (3 * c)) & 7u;
                for (uint64_t k = 0; k < m; ++k) g.add_edge(i, j);
                ++c;
            }
        for (int k = 0; k < n_ext; ++k) g.add_leg(leg_vertex[k]);
        ScaleAssignment mu;
        mu.scales.assign(g.edge_count(), 0);
        AssignedGraph cls(std::move(g), std::move(mu));
        out.counts[cls] += count;
        out.total += count;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

const WickClassification& classified(int v, int n_ext, int valence) {
    static std::map<std::tuple<int, int, int>, WickClassification> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_tuple(v, n_ext, valence);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_pairings(v, n_ext, valence)).first;
    return it->second;
}

bool passes(const AssignedGraph& g, const CatalogFilter& f) {
    if (!f.include_edgeless && g.edge_count() == 0) return false;
    if (!f.allow_tadpoles && has_self_loop(g.graph())) return false;
    const bool connected = g.graph().is_connected();
    if (f.connected && !connected) return false;
    if (f.one_pi && (!connected || !g.graph().is_one_pi())) return false;
    if (f.external >= 0 && g.leg_count() != f.external) return false;
    if (f.max_loops >= 0 && connected && g.loop_number() > f.max_loops) return false;
    if (f.biped_free && !is_biped_free(g)) return false;
    return true;
}

std::string filter_tag(const CatalogFilter& f) {
    std::ostringstream os;
    os << (f.connected ? "c1" : "c0") << (f.one_pi ? "p1" : "p0") << (f.biped_free ? "b1" : "b0")
       << (f.allow_tadpoles ? "t1" : "t0") << "x" << f.external
       << (f.include_edgeless ? "e1" : "e0") << "L" << f.max_loops;
    return os.str();
}

} // namespace

std::vector<AssignedGraph> catalog(int v_max, int n_ext, const CatalogFilter& filter,
                                   int valence) {
    std::filesystem::path cache_file;
    if (const char* dir = std::getenv("MSHOPF_CATALOG_DIR")) {
        std::ostringstream name;
        name << "catalog_v" << v_max << "_n" << n_ext << "_val" << valence << "_"
             << filter_tag(filter) << ".json";
        cache_file = std::filesystem::path(dir) / name.str();
        if (std::filesystem::exists(cache_file)) {
            std::ifstream in(cache_file);
            nlohmann::json j;
            in >> j;
            std::vector<AssignedGraph> cached;
            for (const auto& item : j) cached.push_back(graph_from_json(item));
            return cached;
        }
    }

    std::vector<AssignedGraph> out;
    for (int v = 1; v <= v_max; ++v) {
        if ((v * valence - n_ext) % 2 != 0 || n_ext > v * valence) continue;
        const auto& cls = classified(v, n_ext, valence);
        for (const auto& [labeled, count] : cls.counts) {
            AssignedGraph un = labeled.unlabeled();
            if (passes(un, filter)) out.push_back(std::move(un));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    if (!cache_file.empty()) {
        std::filesystem::create_directories(cache_file.parent_path());
        nlohmann::json j = nlohmann::json::array();
        for (const auto& g : out) j.push_back(graph_to_json(g));
        std::ofstream of(cache_file);
        of << j.dump(1) << "\n";
    }
    return out;
}

std::map<AssignedGraph, long> assigned_classes(const AssignedGraph& base, int rho) {
    const int e = base.edge_count();
    double raw = 1;
    for (int i = 0; i < e; ++i) raw *= rho + 1;
    if (raw > 2e6) throw PreconditionError("assigned_classes: too many assignments");
    std::map<AssignedGraph, long> out;
    std::vector<int> scales(e, 0);
    while (true) {
        ++out[base.with_scales(scales, rho)];
        int i = 0;
        for (; i < e; ++i) {
            if (++scales[i] <= rho) break;
            scales[i] = 0;
        }
        if (i == e) break;
        if (e == 0) break;
    }
    return out;
}

std::vector<AssignedGraph> assigned_catalog(const std::vector<AssignedGraph>& bases, int rho) {
    std::vector<AssignedGraph> out;
    for (const auto& b : bases)
        for (const auto& [g, mult] : assigned_classes(b, rho)) out.push_back(g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<AssignedGraph> generator_set(int v_max, int rho, int max_loops) {
    CatalogFilter f;
    f.connected = true;
    f.one_pi = true;
    f.allow_tadpoles = false;
    f.max_loops = max_loops;
    std::vector<AssignedGraph> bases;
    for (int n : {0, 2, 4}) {
        f.external = n;
        const auto part = catalog(v_max, n, f);
        bases.insert(bases.end(), part.begin(), part.end());
    }
    return assigned_catalog(bases, rho);
}

} // namespace mshopf
