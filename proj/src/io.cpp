#include "loops/io.hpp"

#include <fstream>
#include <sstream>

#include "loops/analysis.hpp"
#include "loops/properties.hpp"

namespace loops {

namespace {

// Data lines of a stream: comments ('#...') and blank lines stripped,
// unless keep is non-null and the line starts with it (used for the
// '#bracket' separator).
std::vector<std::string> data_lines(std::istream& in, const char* keep = nullptr) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(begin, end - begin + 1);
        if (trimmed[0] == '#') {
            if (keep && trimmed.rfind(keep, 0) == 0) lines.push_back(trimmed);
            continue;
        }
        lines.push_back(trimmed);
    }
    return lines;
}

std::vector<int> parse_ints(const std::string& line) {
    std::istringstream ss(line);
    std::vector<int> out;
    long long v;
    while (ss >> v) out.push_back(static_cast<int>(v));
    if (!ss.eof()) throw parse_error("non-numeric token in line: " + line);
    return out;
}

std::vector<std::vector<int>> parse_rows(const std::vector<std::string>& lines,
                                         std::size_t from, int n) {
    if (lines.size() < from + static_cast<std::size_t>(n))
        throw parse_error("expected " + std::to_string(n) + " table rows");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < n; ++r) {
        auto vals = parse_ints(lines[from + static_cast<std::size_t>(r)]);
        if (static_cast<int>(vals.size()) != n)
            throw parse_error("row " + std::to_string(r + 1) + " has " +
                              std::to_string(vals.size()) + " entries, expected " +
                              std::to_string(n));
        rows.push_back(std::move(vals));
    }
    return rows;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open file: " + path);
    return f;
}

} // namespace

LoopTable read_loop_table(std::istream& in, const std::string& label,
                          bool normalize_identity) {
    auto lines = data_lines(in);
    if (lines.empty()) throw parse_error("empty loop table file");
    auto head = parse_ints(lines[0]);
    if (head.size() != 1 || head[0] < 1) throw parse_error("first data line must be the order");
    auto rows = parse_rows(lines, 1, head[0]);
    return normalize_identity ? LoopTable::from_rows_any_identity(rows, label)
                              : LoopTable::from_rows(rows, label);
}

LoopTable read_loop_table_file(const std::string& path, bool normalize_identity) {
    auto f = open_or_throw(path);
    return read_loop_table(f, path, normalize_identity);
}

void write_loop_table(std::ostream& out, const LoopTable& t,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    if (!t.label().empty()) out << "# " << t.label() << "\n";
    out << t.order() << "\n";
    for (int r = 1; r <= t.order(); ++r) {
        for (int c = 1; c <= t.order(); ++c) out << (c > 1 ? " " : "") << t.mul(r, c);
        out << "\n";
    }
}

void write_loop_table_file(const std::string& path, const LoopTable& t,
                           const std::vector<std::string>& comments) {
    std::ofstream f(path);
    if (!f) throw parse_error("cannot write file: " + path);
    write_loop_table(f, t, comments);
}

std::vector<Perm> read_generators(std::istream& in) {
    auto lines = data_lines(in);
    std::vector<Perm> gens;
    int degree = -1;
    for (const auto& line : lines) {
        auto vals = parse_ints(line);
        if (degree == -1)
            degree = static_cast<int>(vals.size());
        else if (static_cast<int>(vals.size()) != degree)
            throw parse_error("permutation of degree " + std::to_string(vals.size()) +
                              " after degree " + std::to_string(degree));
        gens.push_back(Perm::from_images(vals));
    }
    if (gens.empty()) throw parse_error("generator file contains no permutations");
    return gens;
}

std::vector<Perm> read_generators_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_generators(f);
}

void write_generators(std::ostream& out, const std::vector<Perm>& gens,
                      const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    for (const Perm& p : gens) {
        for (int i = 1; i <= p.degree(); ++i) out << (i > 1 ? " " : "") << p(i);
        out << "\n";
    }
}

Algebra read_algebra(std::istream& in, const std::string& label) {
    auto lines = data_lines(in, "#bracket");
    if (lines.empty()) throw parse_error("empty algebra file");
    auto head = parse_ints(lines[0]);
    if (head.size() != 1 || head[0] < 1) throw parse_error("first data line must be the order");
    const int n = head[0];
    auto add_rows = parse_rows(lines, 1, n);
    std::size_t sep = 1 + static_cast<std::size_t>(n);
    if (sep >= lines.size() || lines[sep].rfind("#bracket", 0) != 0)
        throw parse_error("missing #bracket separator");
    auto bracket_rows = parse_rows(lines, sep + 1, n);
    return Algebra(LoopTable::from_rows(add_rows), std::move(bracket_rows), label);
}

Algebra read_algebra_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_algebra(f, path);
}

void write_algebra(std::ostream& out, const Algebra& a,
                   const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << a.order() << "\n";
    for (int r = 1; r <= a.order(); ++r) {
        for (int c = 1; c <= a.order(); ++c) out << (c > 1 ? " " : "") << a.add(r, c);
        out << "\n";
    }
    out << "#bracket\n";
    for (int r = 1; r <= a.order(); ++r) {
        for (int c = 1; c <= a.order(); ++c) out << (c > 1 ? " " : "") << a.bracket(r, c);
        out << "\n";
    }
}

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

std::string sizes_of(const std::vector<ElementSet>& sets) {
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i)
        s += (i ? "," : "") + std::to_string(sets[i].size());
    return s;
}

} // namespace

std::string analysis_report(const LoopTable& t, const ReportOptions& opts) {
    std::ostringstream out;
    out << "order=" << t.order() << "\n";
    out << "label=" << (t.label().empty() ? "-" : t.label()) << "\n";

    bool inverses = t.has_two_sided_inverses();
    auto prop = [&](PropertyId id) -> std::string {
        switch (id) {
        case PropertyId::lip:
        case PropertyId::rip:
        case PropertyId::ip:
        case PropertyId::aaip:
        case PropertyId::aip:
        case PropertyId::gamma:
        case PropertyId::left_bruck:
            if (!inverses) return "n/a";
            break;
        default:
            break;
        }
        return yn(has_property(t, id));
    };
    for (const auto& [id, name] : property_names()) out << name << "=" << prop(id) << "\n";
    out << "nonassociative=" << yn(!has_property(t, PropertyId::associative)) << "\n";
    out << "two_sided_inverses=" << yn(inverses) << "\n";
    out << "uniquely_2_divisible=" << yn(t.is_uniquely_2_divisible()) << "\n";

    AutomorphicFlags fl = automorphic_class(t);
    out << "left_automorphic=" << yn(fl.left) << "\n";
    out << "right_automorphic=" << yn(fl.right) << "\n";
    out << "middle_automorphic=" << yn(fl.middle) << "\n";
    out << "automorphic=" << yn(fl.full) << "\n";

    Fingerprint fp = fingerprint(t);
    out << "order_profile=";
    for (std::size_t i = 0; i < fp.order_profile.size(); ++i)
        out << (i ? "," : "") << fp.order_profile[i].first << "^" << fp.order_profile[i].second;
    out << "\n";

    NucleiReport nu = nuclei(t);
    out << "nucleus_left=" << nu.n_left.size() << "\n";
    out << "nucleus_middle=" << nu.n_middle.size() << "\n";
    out << "nucleus_right=" << nu.n_right.size() << "\n";
    out << "nucleus=" << nu.nucleus.size() << "\n";
    out << "center=" << nu.center.size() << "\n";
    out << "nucleus_left_normal=" << yn(nu.n_left_normal) << "\n";
    out << "nucleus_middle_normal=" << yn(nu.n_middle_normal) << "\n";
    out << "nucleus_right_normal=" << yn(nu.n_right_normal) << "\n";
    out << "nucleus_normal=" << yn(nu.nucleus_normal) << "\n";
    out << "center_normal=" << yn(nu.center_normal) << "\n";

    {
        std::vector<int> derived{t.order()};
        LoopTable cur = t;
        while (cur.order() > 1) {
            ElementSet d = derived_subloop(cur);
            derived.push_back(d.size());
            if (d.size() == cur.order() || d.size() == 1) break;
            cur = cur.restrict_to(d);
        }
        out << "derived_series=";
        for (std::size_t i = 0; i < derived.size(); ++i)
            out << (i ? "," : "") << derived[i];
        out << "\n";
    }
    out << "solvable=" << yn(is_solvable_loop(t)) << "\n";

    auto central = upper_central_series(t);
    out << "upper_central_series=" << sizes_of(central) << "\n";
    auto nil = nilpotency_class(t);
    out << "nilpotency_class=" << (nil ? std::to_string(*nil) : std::string("none")) << "\n";

    out << "simple=" << yn(is_simple(t, opts.group_cap)) << "\n";

    auto group_order = [&](auto&& build) -> std::string {
        try {
            return std::to_string(build().order());
        } catch (const resource_error&) {
            return "over_cap";
        }
    };
    out << "mlt_order=" << group_order([&] { return mlt(t, opts.group_cap); }) << "\n";
    out << "inn_order=" << group_order([&] { return inn(t, opts.group_cap); }) << "\n";
    out << "lmlt_order=" << group_order([&] { return lmlt(t, opts.group_cap); }) << "\n";
    return out.str();
}

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::ostringstream out;
    out << "order,order_profile,n_left,n_middle,n_right,nucleus,center,"
           "commutative,associative,provenance,multiplicity\n";
    for (const auto& r : records) {
        out << r.fp.order << ",";
        for (std::size_t i = 0; i < r.fp.order_profile.size(); ++i)
            out << (i ? ";" : "") << r.fp.order_profile[i].first << "^"
                << r.fp.order_profile[i].second;
        out << "," << r.fp.n_left << "," << r.fp.n_middle << "," << r.fp.n_right << ","
            << r.fp.nucleus << "," << r.fp.center << "," << (r.fp.commutative ? 1 : 0) << ","
            << (r.fp.associative ? 1 : 0) << "," << (r.provenance.empty() ? "-" : r.provenance)
            << "," << r.multiplicity << "\n";
    }
    return out.str();
}

} // namespace loops
