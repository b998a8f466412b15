#include "loops/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "loops/analysis.hpp"
#include "loops/constructions.hpp"
#include "loops/io.hpp"
#include "loops/parallel.hpp"
#include "loops/properties.hpp"
#include "loops/search.hpp"
#include "loops/transforms.hpp"

namespace loops::cli {

namespace {

struct Limits {
    std::size_t group_cap = default_group_cap;
    int naive_max = default_naive_max;
    long long aut_budget = default_aut_budget;
    int jobs = 1;
};

// Conjunction of named predicates. Property names from property_names()
// plus the automorphic-axiom flags and a few negated conveniences.
LoopFilter make_filter(const std::vector<std::string>& names) {
    if (names.empty()) return nullptr;
    std::vector<std::function<bool(const LoopTable&)>> parts;
    for (const std::string& name : names) {
        if (name == "automorphic")
            parts.push_back([](const LoopTable& q) { return automorphic_class(q).full; });
        else if (name == "left_automorphic")
            parts.push_back([](const LoopTable& q) { return automorphic_class(q).left; });
        else if (name == "right_automorphic")
            parts.push_back([](const LoopTable& q) { return automorphic_class(q).right; });
        else if (name == "middle_automorphic")
            parts.push_back([](const LoopTable& q) { return automorphic_class(q).middle; });
        else if (name == "nonassociative")
            parts.push_back(
                [](const LoopTable& q) { return !has_property(q, PropertyId::associative); });
        else if (auto id = property_from_name(name))
            parts.push_back([id](const LoopTable& q) {
                try {
                    return has_property(q, *id);
                } catch (const no_two_sided_inverse_error&) {
                    return false; // inverse-based properties fail without inverses
                }
            });
        else
            throw validation_error("unknown filter property: " + name);
    }
    return [parts](const LoopTable& q) {
        for (const auto& p : parts)
            if (!p(q)) return false;
        return true;
    };
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit_census(std::ostream& out, const std::vector<CensusRecord>& records,
                 const std::string& out_dir) {
    out << "classes=" << records.size() << "\n" << census_csv(records);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream csv(out_dir + "/census.csv");
        csv << census_csv(records);
        for (std::size_t i = 0; i < records.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof(name), "rep_%03zu.loop", i + 1);
            write_loop_table_file(out_dir + "/" + name, records[i].representative);
        }
    }
}

int run_check(const std::string& path, bool normalize, const Limits& lim, std::ostream& out) {
    LoopTable t = read_loop_table_file(path, normalize);
    ReportOptions opts;
    opts.group_cap = lim.group_cap;
    out << analysis_report(t, opts);
    return 0;
}

LoopTable construct_dih(int m, int n, int alpha_mult) {
    LoopTable g = cyclic(n);
    if (std::gcd(alpha_mult, n) != 1)
        throw precondition_error("alpha multiplier must be a unit modulo n");
    // x -> alpha_mult * x on Z_n, written on labels 1..n.
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        img[static_cast<std::size_t>(x)] =
            static_cast<int>((static_cast<long long>(alpha_mult) * x) % n) + 1;
    return dih(m, g, Perm::from_images(img));
}

std::vector<PermGroup> load_group_dir(const std::string& dir, std::size_t cap,
                                      std::vector<std::string>& names) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw validation_error("no group files in " + dir);
    std::vector<PermGroup> groups;
    for (const auto& f : files) {
        groups.push_back(PermGroup::closure(read_generators_file(f), cap));
        names.push_back(f);
    }
    return groups;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite loop workbench"};
    // --h (subgroup choice) would clash with the short help flag.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.fallthrough(); // global limits may follow the subcommand

    Limits lim;
    app.add_option("--group-cap", lim.group_cap, "group materialization cap");
    app.add_option("--naive-max", lim.naive_max, "naive enumeration order bound");
    app.add_option("--aut-budget", lim.aut_budget, "isomorphism search node budget");
    app.add_option("--jobs", lim.jobs, "worker count for parallel stages");

    // check
    auto* check = app.add_subcommand("check", "analyze a loop table file");
    std::string check_file;
    bool check_normalize = false;
    check->add_option("table", check_file, "loop table file")->required();
    check->add_flag("--normalize", check_normalize, "relabel a foreign identity to 1");

    // construct
    auto* construct = app.add_subcommand("construct", "build a named loop family member");
    std::string cons_kind, cons_out, cons_factors, cons_convention = "a";
    int cons_n = 0, cons_m = 2, cons_a = 0, cons_b = 0, cons_p = 3, cons_t = 0,
        cons_alpha = -1;
    construct->add_option("kind", cons_kind, "cyclic|abelian|dih|qab|drapal|fieldext")
        ->required();
    construct->add_option("-o,--out", cons_out, "output table file")->required();
    construct->add_option("--n", cons_n, "order parameter");
    construct->add_option("--m", cons_m, "first factor size (dih)");
    construct->add_option("--a", cons_a, "parameter a / subspace label");
    construct->add_option("--b", cons_b, "parameter b");
    construct->add_option("--p", cons_p, "prime parameter");
    construct->add_option("--t", cons_t, "orbit parameter (drapal)");
    construct->add_option("--alpha-mult", cons_alpha, "automorphism x -> k x of Z_n (dih)");
    construct->add_option("--factors", cons_factors, "comma-separated cyclic factors (abelian)");
    construct->add_option("--convention", cons_convention,
                          "drapal coordinate convention: a (exponent-first) or b (literal)");

    // associate
    auto* associate = app.add_subcommand("associate", "apply an associated operation");
    std::string assoc_kind, assoc_file, assoc_out;
    associate->add_option("kind", assoc_kind, "bruck|gamma|lie")->required();
    associate->add_option("table", assoc_file, "loop table file")->required();
    associate->add_option("-o,--out", assoc_out, "output file")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerate loops of one order");
    int enum_order = 0;
    bool enum_naive = false;
    std::string enum_group, enum_h = "stabilizer", enum_filter, enum_out_dir;
    enumerate->add_option("--order", enum_order, "loop order")->required();
    enumerate->add_flag("--naive", enum_naive, "Latin-square backtracking");
    enumerate->add_option("--group", enum_group, "generator file for the ambient group");
    enumerate->add_option("--h", enum_h, "subgroup choice: stabilizer|trivial");
    enumerate->add_option("--filter", enum_filter, "comma-separated property filters");
    enumerate->add_option("--out-dir", enum_out_dir, "directory for census and tables");

    // census
    auto* census = app.add_subcommand("census", "reproduce a classification count");
    std::string census_family;
    int census_p = 3, census_q = 0;
    census->add_option("family", census_family, "2p|p3|pq")->required();
    census->add_option("--p", census_p, "prime p")->required();
    census->add_option("--q", census_q, "prime q (pq family)");

    // simple-hunt
    auto* hunt = app.add_subcommand("simple-hunt", "search for simple automorphic loops");
    int hunt_order = 0;
    std::string hunt_dir;
    hunt->add_option("--order", hunt_order, "even degree")->required();
    hunt->add_option("--groups", hunt_dir, "directory of group generator files")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*check) return run_check(check_file, check_normalize, lim, out);

        if (*construct) {
            LoopTable t;
            std::vector<std::string> header;
            if (cons_kind == "cyclic") {
                t = cyclic(cons_n);
                header.push_back("construct cyclic n=" + std::to_string(cons_n));
            } else if (cons_kind == "abelian") {
                std::vector<int> factors;
                for (const auto& s : split_csv(cons_factors)) factors.push_back(std::stoi(s));
                t = abelian(factors);
                header.push_back("construct abelian factors=" + cons_factors);
            } else if (cons_kind == "dih") {
                int k = cons_alpha < 0 ? cons_n - 1 : cons_alpha; // default: inversion
                t = construct_dih(cons_m, cons_n, k);
                header.push_back("construct dih m=" + std::to_string(cons_m) +
                                 " n=" + std::to_string(cons_n) +
                                 " alpha-mult=" + std::to_string(k));
            } else if (cons_kind == "qab") {
                t = q_ab(cons_n, cons_a, cons_b);
                header.push_back("construct qab n=" + std::to_string(cons_n) +
                                 " a=" + std::to_string(cons_a) + " b=" + std::to_string(cons_b));
            } else if (cons_kind == "drapal") {
                auto conv = cons_convention == "b" ? DrapalConvention::literal_first
                                                   : DrapalConvention::exponent_first;
                auto r = drapal(cons_p, cons_t, conv);
                if (!r)
                    throw precondition_error("orbit conditions fail for p=" +
                                             std::to_string(cons_p) +
                                             ", t=" + std::to_string(cons_t));
                t = *r;
                header.push_back("construct drapal p=" + std::to_string(cons_p) +
                                 " t=" + std::to_string(cons_t) +
                                 " convention=" + cons_convention);
            } else if (cons_kind == "fieldext") {
                t = field_ext_loop(cons_p, cons_a);
                header.push_back("construct fieldext p=" + std::to_string(cons_p) +
                                 " a=" + std::to_string(cons_a));
            } else {
                throw validation_error("unknown construction: " + cons_kind);
            }
            write_loop_table_file(cons_out, t, header);
            err << "wrote " << cons_out << " (order " << t.order() << ")\n";
            return 0;
        }

        if (*associate) {
            LoopTable t = read_loop_table_file(assoc_file);
            if (assoc_kind == "bruck") {
                LoopTable b;
                if (automorphic_class(t).full)
                    b = bruck_from_automorphic(t);
                else if (has_property(t, PropertyId::left_bol))
                    b = bruck_from_bol(t);
                else if (t.has_two_sided_inverses() && has_property(t, PropertyId::gamma))
                    b = bruck_from_gamma(t);
                else
                    throw precondition_error(
                        "input is neither automorphic, left Bol, nor a Gamma loop");
                write_loop_table_file(assoc_out, b, {"associated left Bruck loop"});
            } else if (assoc_kind == "gamma") {
                LoopTable g = gamma_from_bruck(t, lim.group_cap);
                write_loop_table_file(assoc_out, g, {"associated Gamma loop"});
            } else if (assoc_kind == "lie") {
                Algebra a = lie_from_automorphic(t);
                std::ofstream f(assoc_out);
                if (!f) throw parse_error("cannot write file: " + assoc_out);
                write_algebra(f, a, {"associated Lie ring"});
            } else {
                throw validation_error("unknown associated operation: " + assoc_kind);
            }
            err << "wrote " << assoc_out << "\n";
            return 0;
        }

        if (*enumerate) {
            LoopFilter filter = make_filter(split_csv(enum_filter));
            std::vector<LoopTable> found;
            if (enum_naive) {
                // Enumerate unfiltered, then filter in parallel; chunk
                // results are merged by index so output is independent of
                // the worker count.
                std::vector<LoopTable> all =
                    naive_enumerate(enum_order, nullptr, lim.naive_max);
                if (filter) {
                    std::vector<char> keep(all.size(), 1);
                    parallel_for(all.size(), lim.jobs,
                                 [&](std::size_t i) { keep[i] = filter(all[i]) ? 1 : 0; });
                    for (std::size_t i = 0; i < all.size(); ++i)
                        if (keep[i]) found.push_back(std::move(all[i]));
                } else {
                    found = std::move(all);
                }
            } else if (!enum_group.empty()) {
                PermGroup g =
                    PermGroup::closure(read_generators_file(enum_group), lim.group_cap);
                if (g.degree() != enum_order)
                    throw degree_mismatch_error("group degree " + std::to_string(g.degree()) +
                                                " does not match --order " +
                                                std::to_string(enum_order));
                PermGroup h = enum_h == "trivial"
                                  ? PermGroup::closure({}, lim.group_cap, g.degree())
                                  : stabilizer(g, 1);
                for (LoopTable& t : algorithm_basic(g, h))
                    if (!filter || filter(t)) found.push_back(std::move(t));
            } else {
                throw validation_error("enumerate needs --naive or --group");
            }
            out << "count=" << found.size() << "\n";
            emit_census(out, classify(found), enum_out_dir);
            return 0;
        }

        if (*census) {
            std::vector<LoopTable> family;
            if (census_family == "2p") {
                if (!is_prime(census_p) || census_p == 2)
                    throw validation_error("family 2p needs an odd prime p");
                family.push_back(cyclic(2 * census_p));
                std::vector<LoopTable> dihs(static_cast<std::size_t>(census_p - 1));
                parallel_for(dihs.size(), lim.jobs, [&](std::size_t i) {
                    dihs[i] = construct_dih(2, census_p, static_cast<int>(i) + 1);
                });
                for (auto& t : dihs) family.push_back(std::move(t));
            } else if (census_family == "p3") {
                if (!is_prime(census_p)) throw validation_error("family p3 needs a prime p");
                const int p = census_p;
                std::vector<LoopTable> qabs(static_cast<std::size_t>(p * p));
                parallel_for(qabs.size(), lim.jobs, [&](std::size_t i) {
                    qabs[i] = q_ab(p, static_cast<int>(i) / p, static_cast<int>(i) % p);
                });
                for (auto& t : qabs) family.push_back(std::move(t));
                family.push_back(cyclic(p * p * p));
                family.push_back(abelian({p * p, p}));
                family.push_back(abelian({p, p, p}));
            } else if (census_family == "pq") {
                if (!is_prime(census_p) || census_p == 2 || !is_prime(census_q) ||
                    census_q == 2)
                    throw validation_error("family pq needs odd primes p and q");
                for (int t = 0; t < census_p; ++t)
                    for (auto conv :
                         {DrapalConvention::exponent_first, DrapalConvention::literal_first})
                        if (auto r = drapal(census_p, t, conv))
                            if (r->order() == census_p * census_q) family.push_back(*r);
            } else {
                throw validation_error("unknown census family: " + census_family);
            }
            emit_census(out, classify(family), "");
            return 0;
        }

        if (*hunt) {
            std::vector<std::string> names;
            std::vector<PermGroup> groups = load_group_dir(hunt_dir, lim.group_cap, names);
            SimpleHuntResult result = simple_hunt(hunt_order, groups, lim.group_cap);
            for (const auto& s : result.skipped) err << "skipped " << s << "\n";
            out << "stored=" << result.catalog.size() << "\n" << census_csv(result.catalog);
            return 0;
        }
    } catch (const resource_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace loops::cli
