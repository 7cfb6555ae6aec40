#include "library.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "sptrees.hpp"

namespace wildtree {

namespace {

std::uint64_t to_mask(const EdgeSet& s) {
    std::uint64_t mask = 0;
    s.for_each([&](int l) { mask |= std::uint64_t{1} << (l - 1); });
    return mask;
}

EdgeSet from_mask(int m, std::uint64_t mask) {
    EdgeSet s(m);
    while (mask) {
        int bit = __builtin_ctzll(mask);
        mask &= mask - 1;
        s.add(bit + 1);
    }
    return s;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& data) {
    for (unsigned char c : data) {
        h ^= c;
        h *= UINT64_C(1099511628211);
    }
    return h;
}

constexpr std::uint64_t kFnvOffset = UINT64_C(14695981039346656037);

std::string row_line(std::uint64_t ones, const std::uint64_t* bubbles, int bubble_count) {
    std::ostringstream out;
    out << "O:";
    bool first = true;
    for (int l = 0; l < 64; ++l)
        if ((ones >> l) & 1) {
            if (!first) out << ',';
            out << (l + 1);
            first = false;
        }
    out << "|B:";
    for (int b = 0; b < bubble_count; ++b) {
        if (b) out << ';';
        first = true;
        for (int l = 0; l < 64; ++l)
            if ((bubbles[b] >> l) & 1) {
                if (!first) out << ',';
                out << (l + 1);
                first = false;
            }
    }
    return out.str();
}

}  // namespace

void Library::start(int n) {
    n_ = n;
    m_ = n * (n - 1) / 2;
    rows_.clear();
    arena_.clear();
    columns_.clear();
    tree_total_ = 0;
}

void Library::append_row(std::uint64_t ones, const std::vector<std::uint64_t>& bubbles) {
    RowRef ref;
    ref.ones = ones;
    ref.bubble_begin = static_cast<std::uint32_t>(arena_.size());
    ref.bubble_count = static_cast<std::uint16_t>(bubbles.size());
    arena_.insert(arena_.end(), bubbles.begin(), bubbles.end());
    rows_.push_back(ref);
}

void Library::finish() {
    columns_.assign(static_cast<std::size_t>(m_), BitVec(rows_.size()));
    tree_total_ = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t ones = rows_[i].ones;
        while (ones) {
            int bit = __builtin_ctzll(ones);
            ones &= ones - 1;
            columns_[static_cast<std::size_t>(bit)].set(i);
        }
        mpz_class prod = 1;
        const std::uint64_t* bubbles = row_bubbles(i);
        for (int b = 0; b < row_bubble_count(i); ++b)
            prod *= __builtin_popcountll(bubbles[static_cast<std::size_t>(b)]);
        tree_total_ += prod;
    }
}

Row012e Library::row(std::size_t i) const {
    Row012e r;
    r.ones = from_mask(m_, rows_[i].ones);
    r.zeros = EdgeSet(m_);
    r.twos = EdgeSet(m_);
    const std::uint64_t* bubbles = row_bubbles(i);
    for (int b = 0; b < row_bubble_count(i); ++b)
        r.bubbles.push_back(from_mask(m_, bubbles[static_cast<std::size_t>(b)]));
    for (int l = 1; l <= m_; ++l) r.zeros.add(l);
    r.zeros.subtract(r.ones);
    for (const auto& bub : r.bubbles) r.zeros.subtract(bub);
    return r;
}

Library build_library(int n, int bound, const EngineOptions& opts) {
    if (n < 2) fail(Status::InvalidArgument, "library needs n >= 2");
    bound = std::min(bound, kLibraryHardLimit);
    if (n > bound)
        fail(Status::Limit, "library build for n=" + std::to_string(n) + " exceeds the bound of " +
                                std::to_string(bound) + " (memory guard; raise the bound up to " +
                                std::to_string(kLibraryHardLimit) + ")");

    Hypergraph mincuts = mincuts_natural_order(n);
    Library lib;
    lib.start(n);
    const int tree_size = n - 1;
    std::vector<std::uint64_t> bubbles;
    RowSink<Wildcard::E> sink = [&](Row012e&& row) {
        if (minimal_set_size(row) != tree_size) return;  // not a tree row
        bubbles.clear();
        for (const auto& b : row.bubbles) bubbles.push_back(to_mask(b));
        lib.append_row(to_mask(row.ones), bubbles);
    };
    run_engine<Wildcard::E>(mincuts, opts, sink, nullptr);
    lib.finish();
    return lib;
}

void save_library(const Library& lib, const std::string& path) {
    std::ostringstream body;
    std::uint64_t checksum = kFnvOffset;
    for (std::size_t i = 0; i < lib.row_count(); ++i) {
        std::string line = row_line(lib.row_ones(i), lib.row_bubbles(i), lib.row_bubble_count(i));
        checksum = fnv1a(checksum, line + "\n");
        body << line << '\n';
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(Status::Io, "cannot write library file '" + path + "'");
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum));
    out << "WILDTREE-LIB v1 n=" << lib.order() << " rows=" << lib.row_count()
        << " trees=" << lib.tree_total().get_str() << " checksum=" << hex << '\n';
    out << body.str();
    if (!out) fail(Status::Io, "write error on library file '" + path + "'");
}

namespace {

std::uint64_t parse_labels(const std::string& text, int m, const std::string& context) {
    std::uint64_t mask = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int label = 0;
        try {
            std::size_t pos = 0;
            label = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail(Status::Parse, context + ": bad label '" + tok + "'");
        }
        if (label < 1 || label > m) fail(Status::Parse, context + ": label " + tok + " out of range");
        mask |= std::uint64_t{1} << (label - 1);
    }
    return mask;
}

}  // namespace

Library load_library(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Status::Io, "cannot open library file '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) fail(Status::Parse, "library file is empty");

    std::istringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != "WILDTREE-LIB") fail(Status::Parse, "not a library file (bad magic)");
    if (version != "v1") fail(Status::Parse, "unsupported library version '" + version + "'");
    int n = -1;
    long long rows = -1;
    std::string trees_str, checksum_str;
    std::string field;
    while (hs >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) fail(Status::Parse, "malformed header field '" + field + "'");
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "n")
            n = std::stoi(value);
        else if (key == "rows")
            rows = std::stoll(value);
        else if (key == "trees")
            trees_str = value;
        else if (key == "checksum")
            checksum_str = value;
        else
            fail(Status::Parse, "unknown header field '" + key + "'");
    }
    if (n < 2 || rows < 0 || trees_str.empty() || checksum_str.empty())
        fail(Status::Parse, "incomplete library header");
    if (n > kLibraryHardLimit)
        fail(Status::Parse, "library order n=" + std::to_string(n) + " exceeds the supported limit");

    Library lib;
    lib.start(n);
    const int m = lib.positions();
    std::uint64_t checksum = kFnvOffset;
    std::string line;
    long long seen = 0;
    std::vector<std::uint64_t> bubbles;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        checksum = fnv1a(checksum, line + "\n");
        ++seen;
        const std::string context = "row " + std::to_string(seen);
        auto bar = line.find("|B:");
        if (line.rfind("O:", 0) != 0 || bar == std::string::npos)
            fail(Status::Parse, context + ": malformed row line");
        std::uint64_t ones = parse_labels(line.substr(2, bar - 2), m, context);
        bubbles.clear();
        std::string groups = line.substr(bar + 3);
        if (!groups.empty()) {
            std::stringstream gs(groups);
            std::string group;
            while (std::getline(gs, group, ';')) {
                std::uint64_t bubble = parse_labels(group, m, context);
                if (bubble == 0) fail(Status::Parse, context + ": empty bubble group");
                bubbles.push_back(bubble);
            }
        }
        // Tree-row shape and disjointness.
        std::uint64_t cover = ones;
        int parts = __builtin_popcountll(ones) + static_cast<int>(bubbles.size());
        for (std::uint64_t b : bubbles) {
            if (cover & b) fail(Status::Parse, context + ": overlapping position classes");
            cover |= b;
        }
        if (parts != n - 1) fail(Status::Parse, context + ": not a tree row for n=" + std::to_string(n));
        lib.append_row(ones, bubbles);
    }
    if (seen != rows)
        fail(Status::Parse, "library file truncated: header says " + std::to_string(rows) + " rows, found " +
                                std::to_string(seen));
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum));
    if (checksum_str != hex)
        fail(Status::Checksum, "library checksum mismatch: header " + checksum_str + ", computed " + hex);
    lib.finish();
    if (lib.tree_total().get_str() != trees_str)
        fail(Status::Checksum, "library tree total mismatch: header " + trees_str + ", computed " +
                                   lib.tree_total().get_str());
    return lib;
}

std::vector<std::size_t> relevant_rows(const Library& lib, const EdgeSet& subgraph_mask) {
    if (subgraph_mask.universe() != lib.positions())
        fail(Status::InvalidArgument, "mask universe does not match the library");
    BitVec clash(lib.row_count());
    for (int l = 1; l <= lib.positions(); ++l)
        if (!subgraph_mask.contains(l)) clash |= lib.columns()[static_cast<std::size_t>(l - 1)];
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lib.row_count(); ++i)
        if (!clash.test(i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> relevant_rows_naive(const Library& lib, const EdgeSet& subgraph_mask) {
    std::uint64_t zeros_mask = 0;
    for (int l = 1; l <= lib.positions(); ++l)
        if (!subgraph_mask.contains(l)) zeros_mask |= std::uint64_t{1} << (l - 1);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lib.row_count(); ++i)
        if ((lib.row_ones(i) & zeros_mask) == 0) out.push_back(i);
    return out;
}

std::optional<Row012e> intersect_row(const Row012e& r, const EdgeSet& mask) {
    if (!r.twos.empty()) fail(Status::InvalidArgument, "intersect_row expects a 01e row");
    if (!r.ones.subset_of(mask))  // a fixed 1 outside the mask clashes with its zeros
        fail(Status::Precondition, "row ones clash with the mask zeros; filter with relevant_rows first");
    const int m = r.length();
    Row012e out;
    out.ones = r.ones;
    out.zeros = EdgeSet(m);
    out.twos = EdgeSet(m);
    for (const auto& b : r.bubbles) {
        EdgeSet cut = b & mask;
        if (cut.empty()) return std::nullopt;  // bubble swallowed by the mask zeros
        if (cut.count() == 1)
            out.ones |= cut;
        else
            out.bubbles.push_back(std::move(cut));
    }
    for (int l = 1; l <= m; ++l) out.zeros.add(l);
    out.zeros.subtract(out.ones);
    for (const auto& b : out.bubbles) out.zeros.subtract(b);
    return out;
}

EdgeSet subgraph_mask(const Library& lib, const Graph& g) {
    if (g.vertex_count() != lib.order())
        fail(Status::Precondition, "vertex count mismatch: graph has " + std::to_string(g.vertex_count()) +
                                       " vertices, library is for n=" + std::to_string(lib.order()));
    EdgeSet mask(lib.positions());
    for (auto [u, v] : g.edges()) mask.add(complete_label(lib.order(), u, v));
    return mask;
}

SieveResult sieve(const Library& lib, const Graph& g) {
    EdgeSet mask = subgraph_mask(lib, g);
    const std::uint64_t emask = [&] {
        std::uint64_t mk = 0;
        mask.for_each([&](int l) { mk |= std::uint64_t{1} << (l - 1); });
        return mk;
    }();

    SieveResult result;
    result.spanning = !g.has_isolated_vertex();
    result.connected = is_connected(g);
    auto candidates = relevant_rows(lib, mask);
    result.relevant = candidates.size();
    for (std::size_t i : candidates) {
        const std::uint64_t* bubbles = lib.row_bubbles(i);
        const int bc = lib.row_bubble_count(i);
        bool swallowed = false;
        for (int b = 0; b < bc && !swallowed; ++b)
            if ((bubbles[static_cast<std::size_t>(b)] & emask) == 0) swallowed = true;
        if (swallowed) continue;

        Row012e row;
        const int m = lib.positions();
        row.ones = from_mask(m, lib.row_ones(i));
        row.zeros = EdgeSet(m);
        row.twos = EdgeSet(m);
        mpz_class prod = 1;
        for (int b = 0; b < bc; ++b) {
            std::uint64_t cut = bubbles[static_cast<std::size_t>(b)] & emask;
            int size = __builtin_popcountll(cut);
            prod *= size;
            if (size == 1)
                row.ones |= from_mask(m, cut);
            else
                row.bubbles.push_back(from_mask(m, cut));
        }
        for (int l = 1; l <= m; ++l) row.zeros.add(l);
        row.zeros.subtract(row.ones);
        for (const auto& b : row.bubbles) row.zeros.subtract(b);
        result.tree_total += prod;
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace wildtree
